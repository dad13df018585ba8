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

#include "swapgain/teleport.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "swapgain/filter.h"

namespace swapgain {

namespace {

constexpr std::size_t kFourQubits[] = {2, 2, 2, 2};
constexpr std::size_t kReferenceAndReceiver[] = {0, 3};
constexpr std::size_t kTwoQubits[] = {2, 2};
constexpr std::size_t kReference[] = {0};

}  // namespace

QuantumChannel::QuantumChannel(ComplexMatrix choi) : choi_(std::move(choi)) {
  if (choi_.rows() != 4 || choi_.cols() != 4) {
    throw DimensionError("QuantumChannel: Choi state must be 4x4");
  }
  if ((choi_ - choi_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw ValidationError("QuantumChannel: Choi state is not Hermitian");
  }
  const double smallest = hermitian_eigensystem(choi_).values.minCoeff();
  if (smallest < kPsdFloor) {
    std::ostringstream msg;
    msg << "QuantumChannel: Choi eigenvalue " << smallest << " breaks complete positivity";
    throw ValidationError(msg.str());
  }
  const ComplexMatrix marginal = partial_trace(choi_, kTwoQubits, kReference);
  if (max_abs_diff(marginal, identity(2) / 2.0) > 1e-9) {
    throw ValidationError("QuantumChannel: map is not trace preserving");
  }
}

QuantumChannel QuantumChannel::identity_channel() {
  return QuantumChannel(bell_state(BellLabel::PhiPlus).projector());
}

QuantumChannel QuantumChannel::fully_depolarizing() { return QuantumChannel(identity(4) / 4.0); }

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& m) const {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("QuantumChannel::apply: expects 2x2");
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      out += m(i, j) * 2.0 * choi_.block(2 * i, 2 * j, 2, 2);
    }
  }
  return out;
}

CorrectedBranch align_resource(const DensityOperator& state) { return align_to_singlet(state); }

Teleportation teleportation_channel(const DensityOperator& resource) {
  if (resource.dim() != 4) throw DimensionError("teleportation_channel: expects a 4x4 resource");
  // Qubits: reference R, input X (maximally entangled with R), resource A, B.
  const ComplexMatrix joint =
      tensor_product(bell_state(BellLabel::PhiPlus).projector(), resource.matrix());
  ComplexMatrix after = ComplexMatrix::Zero(16, 16);
  for (BellLabel label : kBellLabels) {
    const ComplexMatrix op = tensor_product(
        tensor_product(identity(2), bell_state(label).projector()), pauli_correction(label));
    after += op * joint * op.adjoint();
  }
  ComplexMatrix choi = partial_trace(after, kFourQubits, kReferenceAndReceiver);
  choi = 0.5 * (choi + choi.adjoint());

  const ComplexVector singlet = bell_state(BellLabel::PsiMinus).amplitudes();
  const double overlap = singlet.dot(resource.matrix() * singlet).real();
  const bool aligned = overlap >= singlet_fraction_magic(resource) - 1e-9;
  return {QuantumChannel(std::move(choi)), aligned};
}

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first) {
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const ComplexMatrix unit = matrix_unit(2, i, j);
      choi += 0.5 * tensor_product(unit, second.apply(first.apply(unit)));
    }
  }
  return QuantumChannel(0.5 * (choi + choi.adjoint()));
}

double average_fidelity(const QuantumChannel& channel) {
  const ComplexVector phi = bell_state(BellLabel::PhiPlus).amplitudes();
  const double entanglement_fidelity = phi.dot(channel.choi() * phi).real();
  return (2.0 * entanglement_fidelity + 1.0) / 3.0;
}

double average_fidelity_two_design(const QuantumChannel& channel) {
  const double h = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  const Complex kets[6][2] = {{1.0, 0.0}, {0.0, 1.0}, {h, h}, {h, -h}, {h, i * h}, {h, -i * h}};
  double sum = 0.0;
  for (const auto& k : kets) {
    ComplexVector psi(2);
    psi << k[0], k[1];
    const ComplexMatrix out = channel.apply(psi * psi.adjoint());
    sum += psi.dot(out * psi).real();
  }
  return sum / 6.0;
}

double strategy_one_fidelity(const FamilyParams& params) {
  const Teleportation ab = teleportation_channel(align_resource(apply_tp_filter_ab(params)).state);
  const Teleportation bc = teleportation_channel(align_resource(apply_tp_filter_bc(params)).state);
  return average_fidelity(compose(bc.channel, ab.channel));
}

double strategy_two_fidelity(const FamilyParams& params) {
  const double f = deterministic_swap(params).average_singlet_fraction;
  return teleport_fidelity_from_F(std::min(f, 1.0));
}

StrategyReport compare_strategies(const FamilyParams& params) {
  return {params.p(), params.a(), strategy_one_fidelity(params), strategy_two_fidelity(params)};
}

}  // namespace swapgain
