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

#ifndef SWAPGAIN_SWAP_H
#define SWAPGAIN_SWAP_H

#include <array>
#include <stdexcept>

#include "swapgain/entfrac.h"
#include "swapgain/qcore.h"

namespace swapgain {

/// Branches whose probability falls below this carry a placeholder state.
inline constexpr double kNegligibleProbability = 1e-12;

/// Closed-form branch with vanishing probability.
class DegenerateBranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One outcome of Bob's Bell measurement. `state` lives on (A, C).
/// When `usable` is false the probability is negligible and `state` is I/4.
struct SwapBranch {
  BellLabel outcome = BellLabel::PsiMinus;
  double probability = 0.0;
  DensityOperator state = DensityOperator::maximally_mixed(4);
  double singlet_fraction = 0.25;
  bool usable = false;
};

struct SwapEnsemble {
  std::array<SwapBranch, 4> branches;  // indexed by BellLabel

  const SwapBranch& operator[](BellLabel label) const {
    return branches[static_cast<std::size_t>(label)];
  }
  double total_probability() const;
  /// sum_k p_k rho_k
  ComplexMatrix averaged_state() const;
};

/// Bell measurement on the two middle qubits of rho_ab x rho_bc (qubit order
/// A, B1, B2, C). Returns raw conditional states, no correction applied.
SwapEnsemble swap_general(const DensityOperator& rho_ab, const DensityOperator& rho_bc);

/// Unnormalized post-measurement state on (A, C): Tr_{B1 B2} of the joint state
/// after a non-selective Bell measurement. Used to audit the ensemble.
ComplexMatrix unconditional_outer_state(const DensityOperator& rho_ab,
                                        const DensityOperator& rho_bc);

struct ClosedBranch {
  DensityOperator state;
  double probability;
  double singlet_fraction;
};

/// N = 2p^2 a(1-a) + 2p(1-p)a, the combined probability of Psi+ and Psi-.
double psi_probability(const FamilyParams& params);

/// Psi+/Psi- outcome for the family, after correction:
///   (2p^2 a(1-a)|Psi-><Psi-| + 2p(1-p)a|00><00|) / N,
/// singlet fraction max{2p^2 a(1-a), p(1-p)a} / N.
ClosedBranch psi_branch_closed(const FamilyParams& params);

/// Phi+/Phi- outcome for the family, after correction:
///   [p^2 |u><u| + (1-p)^2 |01><01| + p(1-p)(1-a)(|00><00| + |11><11|)] / (1-N),
///   |u> = a|01> - (1-a)|10>,
/// singlet fraction max{(1-2p+2p^2) / (2(1-N)), (1-a)(1-p)p / (1-N)}.
ClosedBranch phi_branch_closed(const FamilyParams& params);

struct LocalUnitaryPair {
  ComplexMatrix first = identity(2);
  ComplexMatrix second = identity(2);

  ComplexMatrix combined() const { return tensor_product(first, second); }
};

struct CorrectedBranch {
  LocalUnitaryPair unitaries;
  DensityOperator state;
};

/// Applies pauli_correction(outcome) on Charlie's qubit. For the family this
/// maps every branch onto the canonical Psi-/Phi forms of psi_branch_closed
/// and phi_branch_closed.
CorrectedBranch canonical_correction(const SwapBranch& branch);

/// Below a_psi_upper the corrected Psi branch has F > 1/2 (p(1-a) > 1-p);
/// above a_phi_lower the Phi branch has F > 1/2 through its Psi- overlap
/// (pa > 1-p). At p = 0.75 these are 2/3 and 1/3.
struct SwapRegions {
  double a_psi_upper;
  double a_phi_lower;
};
SwapRegions swap_regions(double p);

struct DeterministicSwap {
  DensityOperator averaged_state;
  double average_singlet_fraction;
  std::array<bool, 4> kept;  // per BellLabel: true if the branch was kept
};

/// Swap, correct each branch and rotate it so |Psi-> is its optimal
/// maximally entangled state; branches with F <= 1/2 are replaced by |01><01|.
DeterministicSwap deterministic_swap(const FamilyParams& params);

/// Same protocol for arbitrary inputs; kept branches are aligned through
/// the magic basis instead of the family correction table.
DeterministicSwap deterministic_swap(const DensityOperator& rho_ab, const DensityOperator& rho_bc);

struct NoGoReport {
  double max_branch_singlet_fraction;
  double initial_singlet_fraction_ab;
  double initial_singlet_fraction_bc;
};

/// Swaps two Bell-diagonal states and reports the best conditional singlet
/// fraction next to the two input fractions.
NoGoReport bell_diagonal_nogo_check(const std::array<double, 4>& weights_ab,
                                    const std::array<double, 4>& weights_bc);

/// Rotates `state` with a local unitary on the first qubit so that
/// <Psi-|rho'|Psi-> equals its singlet fraction.
CorrectedBranch align_to_singlet(const DensityOperator& state);

}  // namespace swapgain

#endif  // SWAPGAIN_SWAP_H
