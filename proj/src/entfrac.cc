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

#include "swapgain/entfrac.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/tools/minima.hpp>

namespace swapgain {

namespace {

const Complex kI(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexVector ket4(Complex c00, Complex c01, Complex c10, Complex c11) {
  ComplexVector v(4);
  v << c00, c01, c10, c11;
  return v;
}

void require_two_qubits(const ComplexMatrix& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw DimensionError(std::string(what) + ": expects a 4x4 two-qubit operator");
  }
}

// <psi|rho|psi> for psi = (U x I)|Phi+>, i.e. psi_{jk} = U_{jk} / sqrt(2).
double overlap_at(const ComplexMatrix& rho, const MaxEntParam& param) {
  const ComplexMatrix u = special_unitary(param);
  ComplexVector psi(4);
  psi << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
  psi *= kInvSqrt2;
  return psi.dot(rho * psi).real();
}

}  // namespace

FamilyParams::FamilyParams(double p, double a) : p_(p), a_(a) {
  if (!(p > 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "FamilyParams: p = " << p << " outside (0, 1]";
    throw std::invalid_argument(msg.str());
  }
  if (!(a > 0.0 && a < 1.0)) {
    std::ostringstream msg;
    msg << "FamilyParams: a = " << a << " outside (0, 1)";
    throw std::invalid_argument(msg.str());
  }
}

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PsiPlus:
      return "psi+";
    case BellLabel::PsiMinus:
      return "psi-";
    case BellLabel::PhiPlus:
      return "phi+";
    case BellLabel::PhiMinus:
      return "phi-";
  }
  return "?";
}

ComplexMatrix special_unitary(const MaxEntParam& param) {
  const double c = std::cos(param.theta);
  const double s = std::sin(param.theta);
  const Complex ea = std::exp(kI * param.alpha);
  const Complex eb = std::exp(kI * param.beta);
  ComplexMatrix u(2, 2);
  u << ea * c, eb * s, -std::conj(eb) * s, std::conj(ea) * c;
  return u;
}

PureState bell_state(BellLabel label) {
  const double h = kInvSqrt2;
  switch (label) {
    case BellLabel::PsiPlus:
      return PureState(ket4(0.0, h, h, 0.0));
    case BellLabel::PsiMinus:
      return PureState(ket4(0.0, h, -h, 0.0));
    case BellLabel::PhiPlus:
      return PureState(ket4(h, 0.0, 0.0, h));
    case BellLabel::PhiMinus:
      return PureState(ket4(h, 0.0, 0.0, -h));
  }
  throw std::invalid_argument("bell_state: unknown label");
}

PureState max_ent_state(const MaxEntParam& param) {
  const ComplexMatrix op = tensor_product(special_unitary(param), identity(2));
  return PureState::normalized(op * bell_state(BellLabel::PhiPlus).amplitudes());
}

const ComplexMatrix& magic_basis() {
  static const ComplexMatrix basis = [] {
    ComplexMatrix b(4, 4);
    b.col(0) = bell_state(BellLabel::PhiPlus).amplitudes();
    b.col(1) = kI * bell_state(BellLabel::PhiMinus).amplitudes();
    b.col(2) = kI * bell_state(BellLabel::PsiPlus).amplitudes();
    b.col(3) = bell_state(BellLabel::PsiMinus).amplitudes();
    return b;
  }();
  return basis;
}

ComplexMatrix pauli_correction(BellLabel label) {
  switch (label) {
    case BellLabel::PsiMinus:
      return identity(2);
    case BellLabel::PsiPlus:
      return pauli::z();
    case BellLabel::PhiMinus:
      return pauli::x();
    case BellLabel::PhiPlus:
      return pauli::z() * pauli::x();
  }
  throw std::invalid_argument("pauli_correction: unknown label");
}

ComplexMatrix make_rho_ab_matrix(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  const ComplexVector v = ket4(0.0, std::sqrt(a), -std::sqrt(1.0 - a), 0.0);
  return p * v * v.adjoint() + (1.0 - p) * matrix_unit(4, 0, 0);
}

DensityOperator make_rho_ab(const FamilyParams& params) {
  return validate_density(make_rho_ab_matrix(params));
}

ComplexMatrix make_rho_bc_matrix(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  const ComplexVector v = ket4(0.0, -std::sqrt(1.0 - a), std::sqrt(a), 0.0);
  return p * v * v.adjoint() + (1.0 - p) * matrix_unit(4, 0, 0);
}

DensityOperator make_rho_bc(const FamilyParams& params) {
  return validate_density(make_rho_bc_matrix(params));
}

namespace {

Eigen::Matrix4d real_magic_matrix(const ComplexMatrix& m) {
  require_two_qubits(m, "singlet fraction");
  const ComplexMatrix& e = magic_basis();
  return (e.adjoint() * m * e).real();
}

}  // namespace

double max_ent_overlap(const ComplexMatrix& m) {
  const Eigen::Matrix4d re = real_magic_matrix(m);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(0.5 * (re + re.transpose()),
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(3);
}

double singlet_fraction_magic(const DensityOperator& state) {
  return std::clamp(max_ent_overlap(state.matrix()), 0.0, 1.0);
}

Eigen::Vector4d optimal_magic_coordinates(const DensityOperator& state) {
  const Eigen::Matrix4d re = real_magic_matrix(state.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(0.5 * (re + re.transpose()));
  Eigen::Vector4d top = solver.eigenvectors().col(3);
  Eigen::Index lead = 0;
  top.cwiseAbs().maxCoeff(&lead);
  if (top(lead) < 0.0) top = -top;
  return top;
}

PureState optimal_max_ent_state(const DensityOperator& state) {
  const Eigen::Vector4d coords = optimal_magic_coordinates(state);
  return PureState::normalized(magic_basis() * coords.cast<Complex>());
}

double singlet_fraction_bruteforce(const DensityOperator& state, BruteForceOptions options) {
  require_two_qubits(state.matrix(), "singlet_fraction_bruteforce");
  const ComplexMatrix& rho = state.matrix();
  const int n = std::max(options.grid, 2);
  const double half_pi = std::numbers::pi / 2.0;
  const double two_pi = 2.0 * std::numbers::pi;

  struct Candidate {
    double value;
    MaxEntParam param;
  };
  std::vector<Candidate> grid;
  grid.reserve(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const MaxEntParam param{half_pi * i / (n - 1), two_pi * j / n, two_pi * k / n};
        grid.push_back({overlap_at(rho, param), param});
      }
    }
  }
  // Refine the few best grid points; the landscape on SO(3) can have a
  // second local maximum near a degenerate top eigenvalue.
  const std::size_t starts = std::min<std::size_t>(4, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                    [](const Candidate& l, const Candidate& r) { return l.value > r.value; });

  double best = grid.front().value;
  for (std::size_t s = 0; s < starts; ++s) {
    MaxEntParam x = grid[s].param;
    double value = grid[s].value;
    double radius = two_pi / n;
    for (int iter = 0; iter < options.refine_iters; ++iter) {
      for (int coord = 0; coord < 3; ++coord) {
        double* slot = coord == 0 ? &x.theta : coord == 1 ? &x.alpha : &x.beta;
        const double centre = *slot;
        auto negated = [&](double t) {
          MaxEntParam trial = x;
          (coord == 0 ? trial.theta : coord == 1 ? trial.alpha : trial.beta) = t;
          return -overlap_at(rho, trial);
        };
        const auto [arg, neg] =
            boost::math::tools::brent_find_minima(negated, centre - radius, centre + radius, 40);
        if (-neg > value) {
          *slot = arg;
          value = -neg;
        }
      }
      radius = std::max(radius * 0.8, 1e-7);
    }
    best = std::max(best, value);
  }
  return best;
}

double initial_singlet_fraction(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  const double root_sum = std::sqrt(a) + std::sqrt(1.0 - a);
  return std::max(p * root_sum * root_sum / 2.0, (1.0 - p) / 2.0);
}

double teleport_fidelity_from_F(double singlet_fraction) {
  if (!(singlet_fraction >= 0.0 && singlet_fraction <= 1.0)) {
    std::ostringstream msg;
    msg << "teleport_fidelity_from_F: singlet fraction " << singlet_fraction
        << " outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
  return (2.0 * singlet_fraction + 1.0) / 3.0;
}

DensityOperator bell_diagonal_state(const std::array<double, 4>& weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("bell_diagonal_state: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("bell_diagonal_state: weights do not sum to 1");
  }
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (BellLabel label : kBellLabels) {
    m += weights[static_cast<std::size_t>(label)] * bell_state(label).projector();
  }
  return validate_density(m);
}

DensityOperator werner_state(double singlet_weight) {
  if (!(singlet_weight >= 0.0 && singlet_weight <= 1.0)) {
    throw std::invalid_argument("werner_state: weight outside [0, 1]");
  }
  const double noise = (1.0 - singlet_weight) / 4.0;
  return bell_diagonal_state({noise, singlet_weight + noise, noise, noise});
}

}  // namespace swapgain
