// Copyright 2026 The swapgain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWAPGAIN_QCORE_H
#define SWAPGAIN_QCORE_H

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace swapgain {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Thrown when matrix shapes or subsystem dimensions do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates an operation's precondition
/// (e.g. a non-Hermitian matrix handed to the Hermitian eigensolver).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by validate_density; the message names the violated invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-8;
inline constexpr double kPsdFloor = -1e-9;

/// Largest absolute entrywise difference. Shapes must agree.
double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Entrywise comparison; default tolerance is 1e-12 per entry.
bool approx_equal(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double tol = 1e-12);

/// A normalized ket.
class PureState {
 public:
  /// Throws ValidationError unless the squared norm is 1 within 1e-12.
  explicit PureState(ComplexVector amplitudes);

  /// Normalizes the input first; throws ValidationError on a zero vector.
  static PureState normalized(const ComplexVector& amplitudes);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  /// |psi><psi|
  ComplexMatrix projector() const;

  /// <this|other>
  Complex inner(const PureState& other) const;

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Only obtainable
/// through validate_density (or the helpers built on it), so every instance
/// satisfies the invariants.
class DensityOperator {
 public:
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator maximally_mixed(std::size_t dim);

 private:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  friend DensityOperator validate_density(const ComplexMatrix& m);

  ComplexMatrix matrix_;
};

struct Eigensystem {
  RealVector values;      // descending
  ComplexMatrix vectors;  // column i pairs with values(i)
};

/// Kronecker product, lhs is the slow (leftmost) index.
ComplexMatrix tensor_product(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Tensor product of a list of factors, left to right.
ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors);

/// Reduced state on the subsystems listed in `keep` (tensor order is kept,
/// the order of `keep` does not matter). Throws DimensionError when the
/// product of dims differs from the state's dimension or an index is out of range.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
DensityOperator partial_trace(const DensityOperator& state, std::span<const std::size_t> dims,
                              std::span<const std::size_t> keep);

/// Transposes tensor factor `subsystem` (0 or 1) of a bipartite d1 x d2 operator.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t d1, std::size_t d2,
                                std::size_t subsystem);
ComplexMatrix partial_transpose(const DensityOperator& state, std::size_t d1, std::size_t d2,
                                std::size_t subsystem);

/// Eigenvalues sorted descending with orthonormal eigenvectors.
/// Throws ContractError when `m` is not Hermitian within 1e-10.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Checks the density-operator invariants. Eigenvalues in [-1e-9, 0) are
/// clamped to zero and the result renormalized; anything worse is rejected.
DensityOperator validate_density(const ComplexMatrix& m);

/// Scales by 1/trace before validating. Throws ValidationError on a
/// vanishing trace.
DensityOperator normalize_density(const ComplexMatrix& m);

/// Smallest eigenvalue of the partial transpose; >= 0 means PPT, which for
/// two qubits is equivalent to separability.
double min_partial_transpose_eigenvalue(const DensityOperator& state);

/// U rho U^dagger
DensityOperator conjugate(const DensityOperator& state, const ComplexMatrix& unitary);

ComplexMatrix identity(std::size_t dim);

/// |i><j| in dimension `dim`.
ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j);

/// Computational basis ket |index> in dimension `dim`.
PureState basis_state(std::size_t dim, std::size_t index);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace swapgain

#endif  // SWAPGAIN_QCORE_H
