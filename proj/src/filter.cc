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

#include "swapgain/filter.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <boost/math/tools/minima.hpp>

namespace swapgain {

namespace {

ComplexMatrix lift(const ComplexMatrix& filter, FilterSide side) {
  return side == FilterSide::Second ? tensor_product(identity(2), filter)
                                    : tensor_product(filter, identity(2));
}

double spectral_norm(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

}  // namespace

LocalFilter::LocalFilter(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 2 || matrix_.cols() != 2) {
    throw std::invalid_argument("LocalFilter: expects a 2x2 matrix");
  }
  const RealVector values = hermitian_eigensystem(matrix_.adjoint() * matrix_).values;
  if (values(0) > 1.0 + 1e-12 || values(1) < -1e-12) {
    std::ostringstream msg;
    msg << "LocalFilter: A^dagger A has eigenvalue " << values(0) << " above 1";
    throw std::invalid_argument(msg.str());
  }
}

LocalFilter LocalFilter::diagonal(double first, double second) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = first;
  m(1, 1) = second;
  return LocalFilter(std::move(m));
}

ComplexMatrix SdpCandidate::matrix() const {
  ComplexMatrix x = ComplexMatrix::Zero(4, 4);
  x(0, 0) = x1;
  x(0, 3) = x2;
  x(3, 0) = x5;
  x(3, 3) = x6;
  return x;
}

ComplexMatrix induced_sdp_variable(const LocalFilter& filter) {
  const ComplexVector v =
      lift(filter.matrix(), FilterSide::Second) * bell_state(BellLabel::PhiPlus).amplitudes();
  return v * v.adjoint();
}

SdpCandidate induced_sdp_candidate(const LocalFilter& filter) {
  const ComplexMatrix x = induced_sdp_variable(filter);
  return {x(0, 0).real(), x(0, 3).real(), x(3, 0).real(), x(3, 3).real()};
}

double sdp_objective(const ComplexMatrix& x, const DensityOperator& state) {
  return 0.5 - (x * partial_transpose(state, 2, 2, 1)).trace().real();
}

double sdp_constraint_violation(const ComplexMatrix& x) {
  const RealVector ev = hermitian_eigensystem(x).values;
  const RealVector ev_pt = hermitian_eigensystem(partial_transpose(x, 2, 2, 1)).values;
  const double violations[] = {-ev.minCoeff(), ev.maxCoeff() - 1.0, -0.5 - ev_pt.minCoeff(),
                               ev_pt.maxCoeff() - 0.5};
  return std::max(0.0, *std::max_element(std::begin(violations), std::end(violations)));
}

double filter_regime_indicator(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(a * (1.0 - a)) * p / (1.0 - p);
}

FilterSolution optimal_filter_closed(const FamilyParams& params) {
  const double p = params.p();
  const double a = params.a();
  const double indicator = filter_regime_indicator(params);
  if (indicator < 1.0) {
    const LocalFilter filter = LocalFilter::diagonal(indicator, 1.0);
    const double success = p * (a + indicator * indicator * (1.0 - a)) +
                           (1.0 - p) * indicator * indicator;
    return {0.5 + a * (1.0 - a) * p * p / (2.0 * (1.0 - p)), filter, success,
            FilterRegime::Filtering};
  }
  return {p / 2.0 + std::sqrt(a * (1.0 - a)) * p, LocalFilter::diagonal(1.0, 1.0), 1.0,
          FilterRegime::Identity};
}

double filtered_average_fraction(const DensityOperator& state, const ComplexMatrix& filter,
                                 FilterSide side) {
  const ComplexMatrix k = lift(filter, side);
  const ComplexMatrix filtered = k * state.matrix() * k.adjoint();
  const double success = filtered.trace().real();
  return max_ent_overlap(filtered) + (1.0 - success) / 2.0;
}

namespace {

struct Best {
  double value = -1.0;
  ComplexMatrix filter = identity(2);
  FilterSide side = FilterSide::Second;

  void offer(double v, const ComplexMatrix& f, FilterSide s) {
    if (v > value) {
      value = v;
      filter = f;
      side = s;
    }
  }
};

ComplexMatrix diag2(double d0, double d1) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = d0;
  m(1, 1) = d1;
  return m;
}

}  // namespace

FilterSolution optimal_filter_numeric(const DensityOperator& state, FilterSearchOptions options) {
  if (state.dim() != 4) throw DimensionError("optimal_filter_numeric: expects a 4x4 state");
  int evals = 0;
  auto objective = [&](const ComplexMatrix& f, FilterSide side) {
    ++evals;
    return filtered_average_fraction(state, f, side);
  };

  Best best;
  const int g = std::max(options.diagonal_grid, 2);
  for (FilterSide side : {FilterSide::First, FilterSide::Second}) {
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) {
        const ComplexMatrix f = diag2(double(i) / (g - 1), double(j) / (g - 1));
        best.offer(objective(f, side), f, side);
      }
    }
  }

  // Coordinate-wise Brent polish of the diagonal entries.
  const int diagonal_budget = options.budget * 3 / 5;
  bool converged = false;
  double d[2] = {best.filter(0, 0).real(), best.filter(1, 1).real()};
  double radius = 1.0 / (g - 1);
  while (evals < diagonal_budget) {
    const double before = best.value;
    for (int coord = 0; coord < 2; ++coord) {
      const double lo = std::max(0.0, d[coord] - radius);
      const double hi = std::min(1.0, d[coord] + radius);
      auto negated = [&](double t) {
        double trial[2] = {d[0], d[1]};
        trial[coord] = t;
        return -objective(diag2(trial[0], trial[1]), best.side);
      };
      const auto [arg, neg] = boost::math::tools::brent_find_minima(negated, lo, hi, 40);
      // Brent never samples the interval ends; the optimum often sits at d = 1.
      const double end_value = -negated(hi);
      double trial[2] = {d[0], d[1]};
      trial[coord] = end_value >= -neg ? hi : arg;
      const ComplexMatrix f = diag2(trial[0], trial[1]);
      best.offer(std::max(end_value, -neg), f, best.side);
      d[0] = best.filter(0, 0).real();
      d[1] = best.filter(1, 1).real();
    }
    if (best.value - before < 1e-14 && radius < 1e-6) {
      converged = true;
      break;
    }
    radius = std::max(radius * 0.5, 1e-9);
  }

  // Dense complex filters: seeded random restarts with shrinking perturbations.
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto random_matrix = [&](double scale) {
    ComplexMatrix m(2, 2);
    for (Eigen::Index i = 0; i < 4; ++i) m(i) = scale * Complex(normal(rng), normal(rng));
    return m;
  };
  auto to_contraction = [](ComplexMatrix m) {
    const double norm = spectral_norm(m);
    return norm > 0.0 ? ComplexMatrix(m / norm) : m;
  };
  const int restarts = std::max(options.dense_restarts, 0);
  const int per_restart = std::max((options.budget - evals) / (2 * std::max(restarts, 1)), 1);
  for (FilterSide side : {FilterSide::First, FilterSide::Second}) {
    for (int r = 0; r < restarts && evals < options.budget; ++r) {
      ComplexMatrix current = r == 0 ? best.filter : to_contraction(random_matrix(1.0));
      double value = objective(current, side);
      double step = 0.25;
      for (int k = 0; k < per_restart && evals < options.budget; ++k) {
        const ComplexMatrix trial = to_contraction(current + random_matrix(step));
        const double v = objective(trial, side);
        if (v > value) {
          value = v;
          current = trial;
        } else {
          step = std::max(step * 0.97, 1e-8);
        }
      }
      best.offer(value, current, side);
    }
  }

  // Clean up rounding so the stored filter passes the A^dagger A <= I check.
  ComplexMatrix f = best.filter;
  const double norm = spectral_norm(f);
  if (norm > 1.0) f /= norm;
  const ComplexMatrix k = lift(f, best.side);
  const double success = (k * state.matrix() * k.adjoint()).trace().real();
  const bool near_identity = (f - identity(2)).cwiseAbs().maxCoeff() < 1e-4;
  return {best.value,
          LocalFilter(f),
          success,
          near_identity ? FilterRegime::Identity : FilterRegime::Filtering,
          best.side,
          converged};
}

namespace {

DensityOperator tp_filter(const DensityOperator& state, const LocalFilter& filter, FilterSide side,
                          std::size_t failure_index) {
  const ComplexMatrix k = lift(filter.matrix(), side);
  const ComplexMatrix filtered = k * state.matrix() * k.adjoint();
  const double success = filtered.trace().real();
  return validate_density(filtered + (1.0 - success) * matrix_unit(4, failure_index, failure_index));
}

}  // namespace

DensityOperator apply_tp_filter_ab(const FamilyParams& params) {
  return tp_filter(make_rho_ab(params), optimal_filter_closed(params).filter, FilterSide::Second, 1);
}

DensityOperator apply_tp_filter_bc(const FamilyParams& params) {
  return tp_filter(make_rho_bc(params), optimal_filter_closed(params).filter, FilterSide::First, 2);
}

}  // namespace swapgain
