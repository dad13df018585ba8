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

#include "swapgain/qcore.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace swapgain {

namespace {

using Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(msg.str());
  }
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (lhs.size() == 0) return 0.0;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double tol) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  return max_abs_diff(lhs, rhs) <= tol;
}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw ValidationError("PureState: empty amplitude vector");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "PureState: squared norm " << norm2 << " differs from 1";
    throw ValidationError(msg.str());
  }
}

PureState PureState::normalized(const ComplexVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw ValidationError("PureState: cannot normalize the zero vector");
  return PureState(amplitudes / norm);
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

Complex PureState::inner(const PureState& other) const {
  if (other.dim() != dim()) throw DimensionError("PureState::inner: dimension mismatch");
  return amplitudes_.dot(other.amplitudes_);
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  return validate_density(psi.projector());
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  return validate_density(identity(dim) / static_cast<double>(dim));
}

ComplexMatrix tensor_product(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  ComplexMatrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (Index i = 0; i < lhs.rows(); ++i) {
    for (Index j = 0; j < lhs.cols(); ++j) {
      out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) = lhs(i, j) * rhs;
    }
  }
  return out;
}

ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) return ComplexMatrix::Ones(1, 1);
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = tensor_product(out, factors[k]);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_square(m, "partial_trace");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (dims.empty() || total != static_cast<std::size_t>(m.rows())) {
    std::ostringstream msg;
    msg << "partial_trace: subsystem dimensions multiply to " << total << " but the operator is "
        << m.rows() << "x" << m.rows();
    throw DimensionError(msg.str());
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw DimensionError("partial_trace: subsystem index out of range");
    kept[k] = true;
  }

  // Split every full index into its kept and traced parts (mixed radix,
  // subsystem 0 most significant).
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  for (std::size_t s = 0; s < dims.size(); ++s) (kept[s] ? kept_dim : traced_dim) *= dims[s];
  std::vector<std::size_t> full_of(kept_dim * traced_dim);
  for (std::size_t full = 0; full < total; ++full) {
    std::size_t rem = full;
    std::size_t stride = total;
    std::size_t k_part = 0;
    std::size_t t_part = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      stride /= dims[s];
      const std::size_t digit = rem / stride;
      rem %= stride;
      if (kept[s]) {
        k_part = k_part * dims[s] + digit;
      } else {
        t_part = t_part * dims[s] + digit;
      }
    }
    full_of[k_part * traced_dim + t_part] = full;
  }

  ComplexMatrix out = ComplexMatrix::Zero(idx(kept_dim), idx(kept_dim));
  for (std::size_t r = 0; r < kept_dim; ++r) {
    for (std::size_t c = 0; c < kept_dim; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) {
        acc += m(idx(full_of[r * traced_dim + t]), idx(full_of[c * traced_dim + t]));
      }
      out(idx(r), idx(c)) = acc;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& state, std::span<const std::size_t> dims,
                              std::span<const std::size_t> keep) {
  return validate_density(partial_trace(state.matrix(), dims, keep));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t d1, std::size_t d2,
                                std::size_t subsystem) {
  require_square(m, "partial_transpose");
  if (d1 * d2 != static_cast<std::size_t>(m.rows())) {
    throw DimensionError("partial_transpose: d1*d2 does not match the operator dimension");
  }
  if (subsystem > 1) throw DimensionError("partial_transpose: subsystem must be 0 or 1");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i1 = 0; i1 < d1; ++i1) {
    for (std::size_t i2 = 0; i2 < d2; ++i2) {
      for (std::size_t j1 = 0; j1 < d1; ++j1) {
        for (std::size_t j2 = 0; j2 < d2; ++j2) {
          const std::size_t row = i1 * d2 + i2;
          const std::size_t col = j1 * d2 + j2;
          const std::size_t src_row = subsystem == 0 ? j1 * d2 + i2 : i1 * d2 + j2;
          const std::size_t src_col = subsystem == 0 ? i1 * d2 + j2 : j1 * d2 + i2;
          out(idx(row), idx(col)) = m(idx(src_row), idx(src_col));
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityOperator& state, std::size_t d1, std::size_t d2,
                                std::size_t subsystem) {
  return partial_transpose(state.matrix(), d1, d2, subsystem);
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigensystem");
  if (hermiticity_defect(m) > kHermitianTol) {
    throw ContractError("hermitian_eigensystem: input is not Hermitian within 1e-10");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ContractError("hermitian_eigensystem: eigensolver failed to converge");
  }
  // Eigen sorts ascending.
  Eigensystem out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

DensityOperator validate_density(const ComplexMatrix& m) {
  require_square(m, "validate_density");
  if (!m.allFinite()) throw ValidationError("validate_density: non-finite entry");
  if (hermiticity_defect(m) > kHermitianTol) {
    throw ValidationError("validate_density: matrix is not Hermitian within 1e-10");
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "validate_density: trace " << trace << " deviates from 1 by more than 1e-8";
    throw ValidationError(msg.str());
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const RealVector& values = solver.eigenvalues();
  const double smallest = values.minCoeff();
  if (smallest < kPsdFloor) {
    std::ostringstream msg;
    msg << "validate_density: eigenvalue " << smallest << " violates positivity (floor -1e-9)";
    throw ValidationError(msg.str());
  }
  if (smallest < 0.0) {
    const RealVector clamped = values.cwiseMax(0.0);
    sym = solver.eigenvectors() * clamped.cast<Complex>().asDiagonal() *
          solver.eigenvectors().adjoint();
    sym = 0.5 * (sym + sym.adjoint());
  }
  sym /= sym.trace().real();
  return DensityOperator(std::move(sym));
}

DensityOperator normalize_density(const ComplexMatrix& m) {
  require_square(m, "normalize_density");
  const double trace = m.trace().real();
  if (!(std::abs(trace) > 1e-300)) throw ValidationError("normalize_density: trace vanishes");
  return validate_density(m / trace);
}

double min_partial_transpose_eigenvalue(const DensityOperator& state) {
  if (state.dim() != 4) throw DimensionError("min_partial_transpose_eigenvalue: expects 4x4");
  return hermitian_eigensystem(partial_transpose(state, 2, 2, 1)).values.minCoeff();
}

DensityOperator conjugate(const DensityOperator& state, const ComplexMatrix& unitary) {
  if (unitary.rows() != unitary.cols() || static_cast<std::size_t>(unitary.rows()) != state.dim()) {
    throw DimensionError("conjugate: unitary dimension does not match the state");
  }
  return validate_density(unitary * state.matrix() * unitary.adjoint());
}

ComplexMatrix identity(std::size_t dim) { return ComplexMatrix::Identity(idx(dim), idx(dim)); }

ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix out = ComplexMatrix::Zero(idx(dim), idx(dim));
  out(idx(i), idx(j)) = 1.0;
  return out;
}

PureState basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis_state: index out of range");
  ComplexVector v = ComplexVector::Zero(idx(dim));
  v(idx(index)) = 1.0;
  return PureState(std::move(v));
}

namespace pauli {

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

}  // namespace swapgain
