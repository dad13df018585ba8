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

#ifndef SWAPGAIN_FILTER_H
#define SWAPGAIN_FILTER_H

#include <cstdint>

#include "swapgain/entfrac.h"
#include "swapgain/qcore.h"

namespace swapgain {

/// One-sided measurement operator A with A^dagger A <= I.
class LocalFilter {
 public:
  /// Throws std::invalid_argument unless `matrix` is 2x2 with both
  /// eigenvalues of A^dagger A in [0, 1 + 1e-12].
  explicit LocalFilter(ComplexMatrix matrix);

  static LocalFilter diagonal(double first, double second);

  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

enum class FilterRegime { Filtering, Identity };

/// Which qubit of the pair the filter acts on.
enum class FilterSide { First, Second };

struct FilterSolution {
  double F_star;
  LocalFilter filter;
  double success_probability;
  FilterRegime regime;
  FilterSide side = FilterSide::Second;
  bool converged = true;  // numeric search only
};

/// Real entries of the symmetry-reduced SDP variable
///   X = [[x1, 0, 0, x2], [0, 0, 0, 0], [0, 0, 0, 0], [x5, 0, 0, x6]].
struct SdpCandidate {
  double x1 = 0.0;
  double x2 = 0.0;
  double x5 = 0.0;
  double x6 = 0.0;

  ComplexMatrix matrix() const;
};

/// X = (I x A)|Phi+><Phi+|(I x A)^dagger.
ComplexMatrix induced_sdp_variable(const LocalFilter& filter);

/// Reduced parameters of the induced X; only meaningful for real diagonal filters.
SdpCandidate induced_sdp_candidate(const LocalFilter& filter);

/// 1/2 - Tr(X rho^Gamma), transpose on the second qubit.
double sdp_objective(const ComplexMatrix& x, const DensityOperator& state);

/// Largest violation of 0 <= X <= I and -I/2 <= X^Gamma <= I/2 (0 when feasible).
double sdp_constraint_violation(const ComplexMatrix& x);

/// Value sqrt(a(1-a)) p / (1-p) that selects the regime; +infinity at p = 1.
double filter_regime_indicator(const FamilyParams& params);

/// Optimal trace-preserving one-sided filter for the family, acting on Bob's
/// qubit of rho_AB:
///   indicator < 1:  A = diag(indicator, 1), F* = 1/2 + a(1-a)p^2 / (2(1-p))
///   otherwise:      A = I,                  F* = p/2 + sqrt(a(1-a)) p
FilterSolution optimal_filter_closed(const FamilyParams& params);

struct FilterSearchOptions {
  int budget = 10000;  // objective evaluations
  int diagonal_grid = 21;
  int dense_restarts = 6;  // 0 skips the dense stage
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Deterministic average q F(filtered) + (1 - q)/2 for a filter on `side`.
double filtered_average_fraction(const DensityOperator& state, const ComplexMatrix& filter,
                                 FilterSide side);

/// Numeric maximization of filtered_average_fraction: a grid over real
/// diagonal filters on either side with Brent polishing, then a
/// seeded random-restart sweep over dense complex filters.
FilterSolution optimal_filter_numeric(const DensityOperator& state,
                                      FilterSearchOptions options = {});

/// (I x A*) rho_AB (I x A*)^dagger + (1 - success) |01><01|
DensityOperator apply_tp_filter_ab(const FamilyParams& params);

/// (A* x I) rho_BC (A* x I)^dagger + (1 - success) |10><10|
DensityOperator apply_tp_filter_bc(const FamilyParams& params);

}  // namespace swapgain

#endif  // SWAPGAIN_FILTER_H
