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

#include "swapgain/optics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>

namespace swapgain::optics {

namespace {

double binomial(int n, int k) {
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                   static_cast<unsigned>(k));
}

double factorial(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

int total(const Occupation& occ) { return std::accumulate(occ.begin(), occ.end(), 0); }

}  // namespace

ModeRegister::ModeRegister(std::vector<std::string> labels, int cutoff)
    : labels_(std::move(labels)), cutoff_(cutoff) {
  if (cutoff_ < 1) throw std::invalid_argument("ModeRegister: cutoff must be positive");
  const std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size() || labels_.empty()) {
    throw std::invalid_argument("ModeRegister: labels must be unique and non-empty");
  }
}

ModeRegister ModeRegister::standard() { return ModeRegister({"a", "b1", "b2", "c", "b3", "b4"}, 2); }

std::size_t ModeRegister::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("ModeRegister: unknown mode '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Complex FockVector::amplitude(const Occupation& occupation) const {
  const auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? Complex(0.0) : it->second;
}

void FockVector::add(const Occupation& occupation, Complex value) {
  if (occupation.size() != register_.size()) {
    throw DimensionError("FockVector: occupation tuple has the wrong length");
  }
  for (int n : occupation) {
    if (n < 0) throw std::invalid_argument("FockVector: negative occupation");
    if (n > register_.cutoff()) {
      std::ostringstream msg;
      msg << "FockVector: occupation " << n << " exceeds cutoff " << register_.cutoff();
      throw TruncationError(msg.str());
    }
  }
  if (value == Complex(0.0)) return;
  amplitudes_[occupation] += value;
}

double FockVector::norm() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : amplitudes_) sum += std::norm(amp);
  return std::sqrt(sum);
}

double FockVector::mean_photon_number() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : amplitudes_) sum += std::norm(amp) * total(occ);
  return sum;
}

std::pair<int, int> FockVector::photon_number_support() const {
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [occ, amp] : amplitudes_) {
    if (std::abs(amp) < 1e-15) continue;
    lo = std::min(lo, total(occ));
    hi = std::max(hi, total(occ));
  }
  return {lo, hi};
}

FockVector prepare_sources(const FamilyParams& params) {
  const double keep = std::sqrt(1.0 - params.p() * (1.0 - params.a()));
  const double flip = std::sqrt(params.p() * (1.0 - params.a()));
  // Mode order a, b1, b2, c, b3, b4.
  const std::array<std::pair<std::array<int, 2>, double>, 2> ab = {
      {{{0, 1}, keep}, {{1, 0}, -flip}}};
  const std::array<std::pair<std::array<int, 2>, double>, 2> bc = {
      {{{1, 0}, keep}, {{0, 1}, -flip}}};
  FockVector state(ModeRegister::standard());
  for (const auto& [occ_ab, amp_ab] : ab) {
    for (const auto& [occ_bc, amp_bc] : bc) {
      state.add({occ_ab[0], occ_ab[1], occ_bc[0], occ_bc[1], 0, 0}, amp_ab * amp_bc);
    }
  }
  return state;
}

FockVector apply_beam_splitter(const FockVector& state, const BeamSplitterSpec& spec) {
  if (!(spec.transmission >= 0.0 && spec.transmission <= 1.0)) {
    throw std::invalid_argument("apply_beam_splitter: transmission outside [0, 1]");
  }
  const std::size_t i1 = state.mode_register().index_of(spec.first);
  const std::size_t i2 = state.mode_register().index_of(spec.second);
  if (i1 == i2) throw std::invalid_argument("apply_beam_splitter: modes must differ");
  const double t = std::sqrt(spec.transmission);
  const double r = std::sqrt(1.0 - spec.transmission);

  FockVector out(state.mode_register());
  for (const auto& [occ, amp] : state.amplitudes()) {
    const int n1 = occ[i1];
    const int n2 = occ[i2];
    const double norm_in = std::sqrt(factorial(n1) * factorial(n2));
    // (t x + r y)^n1 (t y - r x)^n2 with x = c1^dag, y = c2^dag.
    for (int k = 0; k <= n1; ++k) {
      const double c1 = binomial(n1, k) * std::pow(t, k) * std::pow(r, n1 - k);
      for (int l = 0; l <= n2; ++l) {
        const double c2 = binomial(n2, l) * std::pow(t, l) * std::pow(-r, n2 - l);
        const int m1 = k + (n2 - l);
        const int m2 = (n1 - k) + l;
        const double coeff = c1 * c2 * std::sqrt(factorial(m1) * factorial(m2)) / norm_in;
        if (coeff == 0.0) continue;
        Occupation next = occ;
        next[i1] = m1;
        next[i2] = m2;
        out.add(next, coeff * amp);
      }
    }
  }
  return out;
}

double loss_transmission(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  // 1 - p(1-a) written as (1-p) + pa so that p = 1 gives exactly T = 1.
  return p * a / ((1.0 - p) + p * a);
}

FockVector after_loss(const FamilyParams& params) {
  const double t = loss_transmission(params);
  FockVector state = prepare_sources(params);
  state = apply_beam_splitter(state, {"b1", "b3", t});
  return apply_beam_splitter(state, {"b2", "b4", t});
}

ComplexMatrix reduced_qubit_state(const FockVector& state, const std::vector<std::string>& modes) {
  const ModeRegister& reg = state.mode_register();
  std::vector<std::size_t> kept;
  for (const std::string& label : modes) kept.push_back(reg.index_of(label));
  const auto dim = static_cast<Eigen::Index>(1) << kept.size();

  // Group amplitudes by the occupation of the traced modes.
  std::map<Occupation, ComplexVector> by_environment;
  for (const auto& [occ, amp] : state.amplitudes()) {
    Eigen::Index row = 0;
    for (std::size_t idx : kept) {
      if (occ[idx] > 1) {
        throw TruncationError("reduced_qubit_state: mode '" + reg.labels()[idx] +
                              "' holds more than one photon");
      }
      row = 2 * row + occ[idx];
    }
    Occupation env = occ;
    for (std::size_t idx : kept) env[idx] = 0;
    auto [it, inserted] = by_environment.try_emplace(env, ComplexVector::Zero(dim));
    it->second(row) += amp;
  }
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (const auto& [env, vec] : by_environment) rho += vec * vec.adjoint();
  return rho;
}

DensityOperator run_loss_stage(const FamilyParams& params) {
  return validate_density(reduced_qubit_state(after_loss(params), {"a", "b1", "b2", "c"}));
}

std::optional<BellLabel> herald_label(const std::array<int, 2>& counts) {
  if (counts == std::array<int, 2>{1, 0}) return BellLabel::PsiMinus;
  if (counts == std::array<int, 2>{0, 1}) return BellLabel::PsiPlus;
  return std::nullopt;
}

std::vector<DetectionEvent> run_heralded_swap(const FamilyParams& params) {
  const FockVector mixed = apply_beam_splitter(after_loss(params), {"b1", "b2", 0.5});
  const std::size_t d1 = mixed.mode_register().index_of("b1");
  const std::size_t d2 = mixed.mode_register().index_of("b2");
  constexpr std::array<std::array<int, 2>, 6> kPatterns = {
      {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}}};

  std::vector<DetectionEvent> events;
  for (const auto& counts : kPatterns) {
    FockVector projected(mixed.mode_register());
    for (const auto& [occ, amp] : mixed.amplitudes()) {
      if (occ[d1] == counts[0] && occ[d2] == counts[1]) {
        Occupation cleared = occ;
        cleared[d1] = 0;
        cleared[d2] = 0;
        projected.add(cleared, amp);
      }
    }
    const double probability = projected.norm() * projected.norm();
    if (probability > 1e-12) {
      events.push_back({counts, probability,
                        normalize_density(reduced_qubit_state(projected, {"a", "c"})), true});
    } else {
      events.push_back({counts, probability, DensityOperator::maximally_mixed(4), false});
    }
  }
  return events;
}

}  // namespace swapgain::optics
