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

// swapgain: figure sweeps, threshold search and the optics report.
//
// Exit codes: 0 success, 2 argument error, 3 bracket error, 4 I/O error.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "swapgain/figures.h"

namespace {

constexpr int kArgumentError = 2;
constexpr int kBracketError = 3;
constexpr int kIoError = 4;

}  // namespace

int main(int argc, char** argv) {
  using namespace swapgain;

  CLI::App app{"Singlet-fraction gain from entanglement swapping"};
  app.require_subcommand(1);

  cli::SweepConfig sweep_config;
  int figure_number = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Write the data behind a figure as CSV");
  sweep_cmd->add_option("--figure", figure_number, "Figure schema (1, 2 or 3)")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  sweep_cmd->add_option("--p", sweep_config.p, "Mixing weight p")->capture_default_str();
  sweep_cmd->add_option("--a-min", sweep_config.a_min)->capture_default_str();
  sweep_cmd->add_option("--a-max", sweep_config.a_max)->capture_default_str();
  sweep_cmd->add_option("--steps", sweep_config.steps, "Number of intervals")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_config.output_path, "Output CSV path")->required();

  std::string target_name;
  double threshold_p = 0.75;
  double lo = 0.001;
  double hi = 0.3;
  double tol = 1e-6;
  auto* threshold_cmd = app.add_subcommand("threshold", "Locate a threshold in a by bisection");
  threshold_cmd
      ->add_option("--target", target_name,
                   "initial-f-half | psi-f-half | phi-f-half | strategy1-classical")
      ->required();
  threshold_cmd->add_option("--p", threshold_p)->capture_default_str();
  threshold_cmd->add_option("--lo", lo)->capture_default_str();
  threshold_cmd->add_option("--hi", hi)->capture_default_str();
  threshold_cmd->add_option("--tol", tol)->capture_default_str();

  double optics_p = 0.75;
  double optics_a = 0.5;
  auto* optics_cmd = app.add_subcommand("optics", "Report heralded detection events as JSON");
  optics_cmd->add_option("--p", optics_p)->capture_default_str();
  optics_cmd->add_option("--a", optics_a)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kArgumentError;
  }

  try {
    if (*sweep_cmd) {
      sweep_config.figure = static_cast<cli::Figure>(figure_number);
      const auto rows = cli::sweep(sweep_config);
      cli::emit_csv(sweep_config.figure, rows, sweep_config.output_path);
    } else if (*threshold_cmd) {
      const auto target = cli::parse_threshold_target(target_name);
      if (!target) {
        std::cerr << "unknown threshold target '" << target_name << "'\n";
        return kArgumentError;
      }
      const cli::ThresholdQuery query{*target, threshold_p, lo, hi, tol};
      const double a_star = cli::find_threshold(query);
      std::cout << cli::threshold_report(query, a_star).dump() << "\n";
    } else if (*optics_cmd) {
      std::cout << cli::optics_report(FamilyParams(optics_p, optics_a)).dump(2) << "\n";
    }
  } catch (const cli::BracketError& e) {
    std::cerr << e.what() << "\n";
    return kBracketError;
  } catch (const cli::IoError& e) {
    std::cerr << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kArgumentError;
  }
  return 0;
}
