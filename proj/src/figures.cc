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

#include "swapgain/figures.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "swapgain/optics.h"
#include "swapgain/swap.h"
#include "swapgain/teleport.h"

namespace swapgain::cli {

void SweepConfig::validate() const {
  if (!(a_min > 0.0 && a_max < 1.0 && a_min < a_max)) {
    throw std::invalid_argument("sweep: need 0 < a_min < a_max < 1");
  }
  if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("sweep: p outside (0, 1]");
}

std::vector<std::string> figure_header(Figure figure) {
  switch (figure) {
    case Figure::Fig1:
      return {"a", "F_initial", "F_psi_branch", "prob_psi"};
    case Figure::Fig2:
      return {"a", "F_initial", "F_phi_branch", "prob_phi"};
    case Figure::Fig3:
      return {"a", "f_strategy1", "f_strategy2"};
  }
  throw std::invalid_argument("figure_header: unknown figure");
}

FigureRow figure_row(Figure figure, const FamilyParams& params) {
  switch (figure) {
    case Figure::Fig1: {
      const ClosedBranch psi = psi_branch_closed(params);
      return {params.a(), {initial_singlet_fraction(params), psi.singlet_fraction, psi.probability}};
    }
    case Figure::Fig2: {
      const ClosedBranch phi = phi_branch_closed(params);
      return {params.a(), {initial_singlet_fraction(params), phi.singlet_fraction, phi.probability}};
    }
    case Figure::Fig3:
      return {params.a(), {strategy_one_fidelity(params), strategy_two_fidelity(params)}};
  }
  throw std::invalid_argument("figure_row: unknown figure");
}

std::vector<FigureRow> sweep(const SweepConfig& config) {
  config.validate();
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(config.steps) + 1);
  const double span = config.a_max - config.a_min;
  for (int i = 0; i <= config.steps; ++i) {
    const double a = i == config.steps ? config.a_max : config.a_min + span * i / config.steps;
    rows.push_back(figure_row(config.figure, FamilyParams(config.p, a)));
  }
  return rows;
}

std::string format_csv(Figure figure, std::span<const FigureRow> rows) {
  const std::vector<std::string> header = figure_header(figure);
  std::string out = fmt::format("{}", fmt::join(header, ","));
  for (const FigureRow& row : rows) {
    if (row.columns.size() + 1 != header.size()) {
      throw std::invalid_argument("format_csv: row width does not match the figure schema");
    }
    out += fmt::format("\n{:.12g}", row.a);
    for (double v : row.columns) out += fmt::format(",{:.12g}", v);
  }
  return out;
}

void emit_csv(Figure figure, std::span<const FigureRow> rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows to write");
  const std::string text = format_csv(figure, rows);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string_view to_string(ThresholdTarget target) {
  switch (target) {
    case ThresholdTarget::InitialFHalf:
      return "initial-f-half";
    case ThresholdTarget::PsiBranchFHalf:
      return "psi-f-half";
    case ThresholdTarget::PhiBranchFHalf:
      return "phi-f-half";
    case ThresholdTarget::Strategy1Classical:
      return "strategy1-classical";
  }
  return "?";
}

std::optional<ThresholdTarget> parse_threshold_target(std::string_view name) {
  for (ThresholdTarget t :
       {ThresholdTarget::InitialFHalf, ThresholdTarget::PsiBranchFHalf,
        ThresholdTarget::PhiBranchFHalf, ThresholdTarget::Strategy1Classical}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

double threshold_function(ThresholdTarget target, const FamilyParams& params) {
  switch (target) {
    case ThresholdTarget::InitialFHalf:
      return initial_singlet_fraction(params) - 0.5;
    case ThresholdTarget::PsiBranchFHalf:
      return psi_branch_closed(params).singlet_fraction - 0.5;
    case ThresholdTarget::PhiBranchFHalf:
      return phi_branch_closed(params).singlet_fraction - 0.5;
    case ThresholdTarget::Strategy1Classical:
      return strategy_one_fidelity(params) - 2.0 / 3.0;
  }
  throw std::invalid_argument("threshold_function: unknown target");
}

double find_threshold(const ThresholdQuery& query) {
  if (!(query.a_lo < query.a_hi) || !(query.tolerance > 0.0)) {
    throw std::invalid_argument("find_threshold: need lo < hi and a positive tolerance");
  }
  auto f = [&](double a) { return threshold_function(query.target, FamilyParams(query.p, a)); };
  const double f_lo = f(query.a_lo);
  const double f_hi = f(query.a_hi);
  if (f_lo == 0.0) return query.a_lo;
  if (f_hi == 0.0) return query.a_hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream msg;
    msg << "find_threshold: " << to_string(query.target) << " does not change sign on ["
        << query.a_lo << ", " << query.a_hi << "]";
    throw BracketError(msg.str());
  }
  const double tol = query.tolerance;
  const auto [lo, hi] = boost::math::tools::bisect(
      f, query.a_lo, query.a_hi, [tol](double l, double h) { return std::abs(h - l) <= tol; });
  return 0.5 * (lo + hi);
}

nlohmann::json threshold_report(const ThresholdQuery& query, double a_star) {
  return nlohmann::json{{"target", std::string(to_string(query.target))},
                        {"p", query.p},
                        {"a_star", a_star},
                        {"tol", query.tolerance}};
}

nlohmann::json optics_report(const FamilyParams& params) {
  nlohmann::json events = nlohmann::json::array();
  for (const optics::DetectionEvent& event : optics::run_heralded_swap(params)) {
    nlohmann::json entry{{"counts", event.counts}, {"probability", event.probability}};
    entry["heralded_singlet_fraction"] =
        event.usable ? nlohmann::json(singlet_fraction_magic(event.heralded_state))
                     : nlohmann::json(nullptr);
    const auto label = optics::herald_label(event.counts);
    entry["herald"] = label ? nlohmann::json(std::string(to_string(*label))) : nlohmann::json(nullptr);
    events.push_back(std::move(entry));
  }
  return nlohmann::json{{"p", params.p()},
                        {"a", params.a()},
                        {"loss_transmission", optics::loss_transmission(params)},
                        {"events", std::move(events)}};
}

}  // namespace swapgain::cli
