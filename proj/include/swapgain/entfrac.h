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

#ifndef SWAPGAIN_ENTFRAC_H
#define SWAPGAIN_ENTFRAC_H

#include <array>
#include <string_view>

#include "swapgain/qcore.h"

namespace swapgain {

/// Parameters of the amplitude-damped singlet family
///   rho_AB = p |v><v| + (1-p) |00><00|,  |v> = sqrt(a)|01> - sqrt(1-a)|10>.
/// Domain is 0 < p <= 1 and 0 < a < 1; anything else throws std::invalid_argument.
class FamilyParams {
 public:
  FamilyParams(double p, double a);

  double p() const { return p_; }
  double a() const { return a_; }

  /// The same family with a replaced by 1 - a.
  FamilyParams mirrored() const { return FamilyParams(p_, 1.0 - a_); }

 private:
  double p_;
  double a_;
};

/// Bell basis labels. The order here is also the order of Bell-diagonal
/// weight vectors.
enum class BellLabel { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3 };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus, BellLabel::PhiMinus};

std::string_view to_string(BellLabel label);

/// Angles of the special unitary
///   U = [[ e^{i alpha} cos(theta),  e^{i beta} sin(theta)],
///        [-e^{-i beta} sin(theta),  e^{-i alpha} cos(theta)]]
/// acting on the first qubit of |Phi+>. Every maximally entangled two-qubit
/// state is (U x I)|Phi+> for some angles, up to a global phase.
struct MaxEntParam {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

ComplexMatrix special_unitary(const MaxEntParam& param);

PureState bell_state(BellLabel label);

/// (U(theta, alpha, beta) x I)|Phi+>
PureState max_ent_state(const MaxEntParam& param);

/// Magic basis e1 = |Phi+>, e2 = i|Phi->, e3 = i|Psi+>, e4 = |Psi->, as columns.
/// Maximally entangled states are exactly the real unit vectors in it.
const ComplexMatrix& magic_basis();

/// Pauli correction that Charlie (or the teleportation receiver) applies after
/// outcome `label` so that a |Psi-> resource behaves as a perfect link:
///   Psi- -> I,  Psi+ -> Z,  Phi- -> X,  Phi+ -> Z X.
ComplexMatrix pauli_correction(BellLabel label);

ComplexMatrix make_rho_ab_matrix(const FamilyParams& params);
DensityOperator make_rho_ab(const FamilyParams& params);

/// Mirror of make_rho_ab with |v> = sqrt(a)|10> - sqrt(1-a)|01>.
ComplexMatrix make_rho_bc_matrix(const FamilyParams& params);
DensityOperator make_rho_bc(const FamilyParams& params);

/// Fully entangled fraction via the largest eigenvalue of Re(M),
/// M_ij = <e_i|rho|e_j> in the magic basis. Throws DimensionError for non-4x4 input.
double singlet_fraction_magic(const DensityOperator& state);

/// Unnormalized variant: the largest <Psi|m|Psi> over maximally entangled Psi
/// for any Hermitian 4x4 `m` (used on subnormalized filtered states).
double max_ent_overlap(const ComplexMatrix& m);

/// Real unit vector (magic-basis coordinates) attaining singlet_fraction_magic.
/// Sign fixed so that the largest-magnitude component is positive.
Eigen::Vector4d optimal_magic_coordinates(const DensityOperator& state);

/// The maximally entangled ket attaining the singlet fraction.
PureState optimal_max_ent_state(const DensityOperator& state);

struct BruteForceOptions {
  int grid = 24;
  int refine_iters = 60;
};

/// Definitional singlet fraction: a coarse (theta, alpha, beta) grid over
/// max_ent_state followed by per-angle Brent refinement. Never
/// exceeds the true value; independent of the magic-basis construction.
double singlet_fraction_bruteforce(const DensityOperator& state, BruteForceOptions options = {});

/// max{ p (sqrt(a) + sqrt(1-a))^2 / 2, (1-p)/2 }
double initial_singlet_fraction(const FamilyParams& params);

/// (2F + 1) / 3. Throws std::invalid_argument for F outside [0, 1].
double teleport_fidelity_from_F(double singlet_fraction);

/// sum_i w_i |Bell_i><Bell_i| with weights ordered as BellLabel.
/// Weights must be nonnegative and sum to 1 within 1e-12.
DensityOperator bell_diagonal_state(const std::array<double, 4>& weights);

/// Werner state: weight `singlet_weight` on |Psi->, the rest spread evenly.
DensityOperator werner_state(double singlet_weight);

}  // namespace swapgain

#endif  // SWAPGAIN_ENTFRAC_H
