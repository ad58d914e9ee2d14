// Copyright 2026 The relstate-logic Authors
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

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "rql/cli/experiments.hpp"

int main(int argc, char** argv) {
  using namespace rql::cli;

  CLI::App app{"Run a relative-state quantum logic experiment and emit a report."};
  std::string experiment;
  ExperimentConfig cfg;
  std::string out_path;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

  app.add_option("experiment", experiment,
                 "bvn-demo | conjunction | distributive-sweep | entropy-trace | naimark-check | truth-table")
      ->required();
  app.add_option("--dim-s", cfg.dim_s, "System dimension")->capture_default_str();
  app.add_option("--dim-e", cfg.dim_e, "Environment dimension")->capture_default_str();
  app.add_option("--points", cfg.sweep_points, "Sweep points or random instances")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  app.add_option("--tol", cfg.check_tol, "Row check tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  const auto which = parse_experiment(experiment);
  if (!which) {
    std::cerr << "qlogic: unknown experiment '" << experiment << "'\n";
    return 2;
  }
  cfg.experiment = *which;

  try {
    const Report report = run(cfg);
    if (out_path.empty()) {
      write_report(report, cfg.format, std::cout);
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        std::cerr << "qlogic: cannot open " << out_path << '\n';
        return 2;
      }
      write_report(report, cfg.format, file);
    }
    return report.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "qlogic: " << e.what() << '\n';
    return 2;
  }
}
