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

#ifndef SWAPGAIN_FIGURES_H
#define SWAPGAIN_FIGURES_H

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "swapgain/entfrac.h"

namespace swapgain::cli {

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Figure { Fig1 = 1, Fig2 = 2, Fig3 = 3 };

struct SweepConfig {
  Figure figure = Figure::Fig1;
  double p = 0.75;
  double a_min = 0.001;
  double a_max = 0.999;
  int steps = 999;  // intervals; the sweep has steps + 1 rows
  std::string output_path;

  /// Throws std::invalid_argument on a_min >= a_max, steps < 2 or a bound outside (0, 1).
  void validate() const;
};

struct FigureRow {
  double a;
  std::vector<double> columns;  // order of figure_header() after "a"
};

/// Fig1: a,F_initial,F_psi_branch,prob_psi
/// Fig2: a,F_initial,F_phi_branch,prob_phi
/// Fig3: a,f_strategy1,f_strategy2
std::vector<std::string> figure_header(Figure figure);

/// One row of the given figure at (p, a).
FigureRow figure_row(Figure figure, const FamilyParams& params);

/// Rows at a_min + i (a_max - a_min) / steps for i = 0..steps.
std::vector<FigureRow> sweep(const SweepConfig& config);

/// CSV text: header, one line per row, "%.12g" values, "\n" separators and
/// no trailing newline.
std::string format_csv(Figure figure, std::span<const FigureRow> rows);

/// Writes format_csv to `path`; IoError carries the path.
void emit_csv(Figure figure, std::span<const FigureRow> rows, const std::string& path);

enum class ThresholdTarget { InitialFHalf, PsiBranchFHalf, PhiBranchFHalf, Strategy1Classical };

std::string_view to_string(ThresholdTarget target);
std::optional<ThresholdTarget> parse_threshold_target(std::string_view name);

struct ThresholdQuery {
  ThresholdTarget target;
  double p;
  double a_lo;
  double a_hi;
  double tolerance = 1e-6;
};

/// Signed distance of the target quantity from its threshold
/// (1/2 for singlet fractions, 2/3 for the strategy-1 fidelity).
double threshold_function(ThresholdTarget target, const FamilyParams& params);

/// Bisection to a bracket narrower than the tolerance; returns the midpoint.
/// Throws BracketError when the target does not change sign on the bracket.
double find_threshold(const ThresholdQuery& query);

/// {"target", "p", "a_star", "tol"}
nlohmann::json threshold_report(const ThresholdQuery& query, double a_star);

/// Detection events of the heralded optics run: counts, probability,
/// heralded singlet fraction (null when the event never happens) and herald label.
nlohmann::json optics_report(const FamilyParams& params);

}  // namespace swapgain::cli

#endif  // SWAPGAIN_FIGURES_H
