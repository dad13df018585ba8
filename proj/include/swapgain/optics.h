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

// Linear-optics model of heralded swapping with single-rail qubits: logical
// |0>/|1> is 0/1 photons in a mode. Modes are a, b1, b2, c plus the loss
// modes b3, b4 that are never detected.

#ifndef SWAPGAIN_OPTICS_H
#define SWAPGAIN_OPTICS_H

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapgain/entfrac.h"
#include "swapgain/qcore.h"

namespace swapgain::optics {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Occupation = std::vector<int>;

class ModeRegister {
 public:
  /// Labels must be unique; cutoff bounds the occupation of every mode.
  ModeRegister(std::vector<std::string> labels, int cutoff);

  /// (a, b1, b2, c, b3, b4) with cutoff 2.
  static ModeRegister standard();

  const std::vector<std::string>& labels() const { return labels_; }
  int cutoff() const { return cutoff_; }
  std::size_t size() const { return labels_.size(); }
  /// Throws std::out_of_range for unknown labels.
  std::size_t index_of(const std::string& label) const;

  bool operator==(const ModeRegister&) const = default;

 private:
  std::vector<std::string> labels_;
  int cutoff_;
};

/// Pure state over a mode register. Only nonzero amplitudes are stored;
/// every stored occupation respects the cutoff.
class FockVector {
 public:
  explicit FockVector(ModeRegister reg) : register_(std::move(reg)) {}

  const ModeRegister& mode_register() const { return register_; }
  const std::map<Occupation, Complex>& amplitudes() const { return amplitudes_; }

  Complex amplitude(const Occupation& occupation) const;
  /// Adds to the amplitude of `occupation`. Throws TruncationError when an
  /// entry exceeds the cutoff.
  void add(const Occupation& occupation, Complex value);

  double norm() const;
  /// Expectation of the total photon number.
  double mean_photon_number() const;
  /// Smallest and largest total photon number among the stored terms.
  std::pair<int, int> photon_number_support() const;

 private:
  ModeRegister register_;
  std::map<Occupation, Complex> amplitudes_;
};

/// Real convention: c1^dag -> sqrt(T) c1^dag + sqrt(1-T) c2^dag,
///                  c2^dag -> sqrt(T) c2^dag - sqrt(1-T) c1^dag.
struct BeamSplitterSpec {
  std::string first;
  std::string second;
  double transmission;
};

/// sqrt(1-p(1-a))|0>_a|1>_b1 - sqrt(p(1-a))|1>_a|0>_b1 tensored with
/// sqrt(1-p(1-a))|1>_b2|0>_c - sqrt(p(1-a))|0>_b2|1>_c, vacuum on b3 and b4.
FockVector prepare_sources(const FamilyParams& params);

FockVector apply_beam_splitter(const FockVector& state, const BeamSplitterSpec& spec);

/// T = pa / (1 - p(1-a)) for the amplitude-damping beam splitters.
double loss_transmission(const FamilyParams& params);

/// Sources followed by the loss beam splitters b1-b3 and b2-b4 (pure, all six modes).
FockVector after_loss(const FamilyParams& params);

/// Reduced state of `modes` read as single-rail qubits, in the order given.
/// Unnormalized (trace = squared norm). Throws TruncationError if a kept mode
/// carries more than one photon.
ComplexMatrix reduced_qubit_state(const FockVector& state, const std::vector<std::string>& modes);

/// Loss stage traced over b3, b4: a 16x16 state on qubits (a, b1, b2, c).
DensityOperator run_loss_stage(const FamilyParams& params);

struct DetectionEvent {
  std::array<int, 2> counts;  // photons at the b1 and b2 detectors
  double probability;
  DensityOperator heralded_state;  // on (a, c); I/4 when not usable
  bool usable;
};

/// Bell outcome heralded by a single click: (1,0) -> Psi-, (0,1) -> Psi+
/// under the beam-splitter convention above. Other patterns herald nothing.
std::optional<BellLabel> herald_label(const std::array<int, 2>& counts);

/// All six count patterns (0,0), (1,0), (0,1), (2,0), (0,2), (1,1) after the
/// 50:50 beam splitter on b1, b2, in that order.
std::vector<DetectionEvent> run_heralded_swap(const FamilyParams& params);

}  // namespace swapgain::optics

#endif  // SWAPGAIN_OPTICS_H
