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

#ifndef SWAPGAIN_TELEPORT_H
#define SWAPGAIN_TELEPORT_H

#include "swapgain/entfrac.h"
#include "swapgain/qcore.h"
#include "swapgain/swap.h"

namespace swapgain {

/// Single-qubit CPTP map stored as its Choi state
///   J = (id x L)(|Phi+><Phi+|),  Tr J = 1,
/// reference qubit first, channel output second. The Choi operator used in
/// much of the literature is 2 J.
class QuantumChannel {
 public:
  /// Throws ValidationError unless J is PSD (floor -1e-9) and its reference
  /// marginal equals I/2 within 1e-9.
  explicit QuantumChannel(ComplexMatrix choi);

  static QuantumChannel identity_channel();
  static QuantumChannel fully_depolarizing();

  const ComplexMatrix& choi() const { return choi_; }

  /// L(m) for any 2x2 operator m.
  ComplexMatrix apply(const ComplexMatrix& m) const;

 private:
  ComplexMatrix choi_;
};

struct Teleportation {
  QuantumChannel channel;
  bool resource_aligned;  // false: the f = (2F+1)/3 contract does not apply
};

/// Local unitary rotation making |Psi-> the optimal maximally entangled state.
CorrectedBranch align_resource(const DensityOperator& state);

/// Channel realized by the standard protocol: the input and qubit A of the
/// resource are Bell-measured, and qubit B receives pauli_correction(outcome).
/// A perfect |Psi-> resource gives the identity channel.
Teleportation teleportation_channel(const DensityOperator& resource);

/// second o first
QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);

/// (2 F_e + 1) / 3 with F_e = <Phi+|J|Phi+>.
double average_fidelity(const QuantumChannel& channel);

/// Mean of <psi|L(|psi><psi|)|psi> over the six Pauli eigenstates.
double average_fidelity_two_design(const QuantumChannel& channel);

struct StrategyReport {
  double p;
  double a;
  double fidelity_strategy1;
  double fidelity_strategy2;
};

/// Independently filter both links, teleport A -> B, then B -> C.
double strategy_one_fidelity(const FamilyParams& params);

/// Swap first (deterministic replacement protocol), then one teleportation.
double strategy_two_fidelity(const FamilyParams& params);

StrategyReport compare_strategies(const FamilyParams& params);

}  // namespace swapgain

#endif  // SWAPGAIN_TELEPORT_H
