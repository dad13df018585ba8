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

#include "swapgain/swap.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swapgain {

namespace {

constexpr std::size_t kFourQubits[] = {2, 2, 2, 2};
constexpr std::size_t kOuterQubits[] = {0, 3};

// I_A x |b><b|_{B1 B2} x I_C
ComplexMatrix middle_projector(BellLabel label) {
  return tensor_product(tensor_product(identity(2), bell_state(label).projector()), identity(2));
}

ComplexMatrix projected_outer_state(const ComplexMatrix& joint, BellLabel label) {
  const ComplexMatrix proj = middle_projector(label);
  return partial_trace(ComplexMatrix(proj * joint * proj), kFourQubits, kOuterQubits);
}

double psi_minus_overlap(const DensityOperator& state) {
  return bell_state(BellLabel::PsiMinus).amplitudes().dot(state.matrix() *
                                                          bell_state(BellLabel::PsiMinus).amplitudes())
      .real();
}

}  // namespace

double SwapEnsemble::total_probability() const {
  double sum = 0.0;
  for (const SwapBranch& b : branches) sum += b.probability;
  return sum;
}

ComplexMatrix SwapEnsemble::averaged_state() const {
  ComplexMatrix avg = ComplexMatrix::Zero(4, 4);
  for (const SwapBranch& b : branches) {
    if (b.usable) avg += b.probability * b.state.matrix();
  }
  return avg;
}

SwapEnsemble swap_general(const DensityOperator& rho_ab, const DensityOperator& rho_bc) {
  if (rho_ab.dim() != 4 || rho_bc.dim() != 4) {
    throw DimensionError("swap_general: both inputs must be two-qubit states");
  }
  const ComplexMatrix joint = tensor_product(rho_ab.matrix(), rho_bc.matrix());
  SwapEnsemble out;
  for (BellLabel label : kBellLabels) {
    const ComplexMatrix outer = projected_outer_state(joint, label);
    SwapBranch& branch = out.branches[static_cast<std::size_t>(label)];
    branch.outcome = label;
    branch.probability = std::max(outer.trace().real(), 0.0);
    if (branch.probability > kNegligibleProbability) {
      branch.state = normalize_density(outer);
      branch.singlet_fraction = singlet_fraction_magic(branch.state);
      branch.usable = true;
    }
  }
  return out;
}

ComplexMatrix unconditional_outer_state(const DensityOperator& rho_ab,
                                        const DensityOperator& rho_bc) {
  const ComplexMatrix joint = tensor_product(rho_ab.matrix(), rho_bc.matrix());
  ComplexMatrix dephased = ComplexMatrix::Zero(16, 16);
  for (BellLabel label : kBellLabels) {
    const ComplexMatrix proj = middle_projector(label);
    dephased += proj * joint * proj;
  }
  return partial_trace(dephased, kFourQubits, kOuterQubits);
}

double psi_probability(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  return 2.0 * p * p * a * (1.0 - a) + 2.0 * p * (1.0 - p) * a;
}

ClosedBranch psi_branch_closed(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  const double n = psi_probability(params);
  if (n < 1e-15) throw DegenerateBranchError("psi_branch_closed: branch probability vanishes");
  const double singlet_weight = 2.0 * p * p * a * (1.0 - a);
  const double product_weight = 2.0 * p * (1.0 - p) * a;
  const ComplexMatrix m = (singlet_weight * bell_state(BellLabel::PsiMinus).projector() +
                           product_weight * matrix_unit(4, 0, 0)) /
                          n;
  return {validate_density(m), n, std::max(singlet_weight, product_weight / 2.0) / n};
}

ClosedBranch phi_branch_closed(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  const double q = 1.0 - psi_probability(params);
  if (q < 1e-15) throw DegenerateBranchError("phi_branch_closed: branch probability vanishes");
  ComplexVector u = ComplexVector::Zero(4);
  u(1) = a;
  u(2) = -(1.0 - a);
  const double cross = p * (1.0 - p) * (1.0 - a);
  const ComplexMatrix m = (p * p * u * u.adjoint() + (1.0 - p) * (1.0 - p) * matrix_unit(4, 1, 1) +
                           cross * (matrix_unit(4, 0, 0) + matrix_unit(4, 3, 3))) /
                          q;
  const double f = std::max((1.0 - 2.0 * p + 2.0 * p * p) / (2.0 * q), cross / q);
  return {validate_density(m), q, f};
}

CorrectedBranch canonical_correction(const SwapBranch& branch) {
  LocalUnitaryPair unitaries{identity(2), pauli_correction(branch.outcome)};
  DensityOperator corrected = conjugate(branch.state, unitaries.combined());
  return {std::move(unitaries), std::move(corrected)};
}

CorrectedBranch align_to_singlet(const DensityOperator& state) {
  const PureState target = optimal_max_ent_state(state);
  // target = (W x I)|Phi+> with W_jk = sqrt(2) target_{2j+k}; |Psi-> = (V x I)|Phi+>.
  ComplexMatrix w(2, 2);
  w << target[0], target[1], target[2], target[3];
  w *= std::numbers::sqrt2;
  ComplexMatrix v(2, 2);
  v << 0.0, 1.0, -1.0, 0.0;
  LocalUnitaryPair unitaries{v * w.adjoint(), identity(2)};
  DensityOperator aligned = conjugate(state, unitaries.combined());
  return {std::move(unitaries), std::move(aligned)};
}

SwapRegions swap_regions(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("swap_regions: p outside (0, 1]");
  const double ratio = (1.0 - p) / p;
  return {1.0 - ratio, ratio};
}

namespace {

DeterministicSwap average_kept(const SwapEnsemble& ensemble, bool family_table) {
  const ComplexMatrix replacement = matrix_unit(4, 1, 1);
  ComplexMatrix avg = ComplexMatrix::Zero(4, 4);
  double avg_f = 0.0;
  std::array<bool, 4> kept{};
  for (const SwapBranch& branch : ensemble.branches) {
    const auto slot = static_cast<std::size_t>(branch.outcome);
    if (!branch.usable) continue;
    if (branch.singlet_fraction > 0.5) {
      DensityOperator state =
          family_table ? canonical_correction(branch).state : align_to_singlet(branch.state).state;
      if (psi_minus_overlap(state) < branch.singlet_fraction - 1e-12) {
        state = align_to_singlet(state).state;
      }
      avg += branch.probability * state.matrix();
      avg_f += branch.probability * branch.singlet_fraction;
      kept[slot] = true;
    } else {
      avg += branch.probability * replacement;
      avg_f += branch.probability * 0.5;
    }
  }
  return {validate_density(avg), avg_f, kept};
}

}  // namespace

DeterministicSwap deterministic_swap(const FamilyParams& params) {
  return average_kept(swap_general(make_rho_ab(params), make_rho_bc(params)), true);
}

DeterministicSwap deterministic_swap(const DensityOperator& rho_ab, const DensityOperator& rho_bc) {
  return average_kept(swap_general(rho_ab, rho_bc), false);
}

NoGoReport bell_diagonal_nogo_check(const std::array<double, 4>& weights_ab,
                                    const std::array<double, 4>& weights_bc) {
  const DensityOperator rho_ab = bell_diagonal_state(weights_ab);
  const DensityOperator rho_bc = bell_diagonal_state(weights_bc);
  const SwapEnsemble ensemble = swap_general(rho_ab, rho_bc);
  double best = 0.0;
  for (const SwapBranch& b : ensemble.branches) {
    if (b.usable) best = std::max(best, b.singlet_fraction);
  }
  return {best, singlet_fraction_magic(rho_ab), singlet_fraction_magic(rho_bc)};
}

}  // namespace swapgain
