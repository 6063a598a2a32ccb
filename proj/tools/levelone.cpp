// Copyright 2026 The levelone Authors
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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levelone/app/examples.hpp"
#include "levelone/app/pipeline.hpp"
#include "levelone/core/error.hpp"
#include "suite.hpp"

namespace {

using namespace levelone;

constexpr int kValidationExit = 2;
constexpr int kNumericalExit = 3;

struct AnalyzeOptions {
  std::vector<std::string> directions;
  int order = 40;
  long precision = 0;
  std::string route = "both";
  std::string format = "json";
};

void add_analyze_options(CLI::App* cmd, AnalyzeOptions& o) {
  cmd->add_option("--direction", o.directions, "Direction in degrees, or \"all\"; repeatable");
  cmd->add_option("--order", o.order, "Series order N")->check(CLI::PositiveNumber);
  cmd->add_option("--precision", o.precision, "Working precision in bits (default $LEVELONE_PRECISION or 256)");
  cmd->add_option("--route", o.route, "Stokes matrix route")->check(CLI::IsMember({"laplace", "borel", "both"}));
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
}

JobConfig make_config(const AnalyzeOptions& o) {
  JobConfig cfg;
  cfg.order = o.order;
  cfg.precision = o.precision > 0 ? o.precision : precision_from_env();
  cfg.route = parse_route(o.route);
  cfg.format = parse_format(o.format);
  cfg.all_directions = o.directions.empty();
  for (const std::string& d : o.directions) {
    if (d == "all") {
      cfg.all_directions = true;
      continue;
    }
    std::size_t used = 0;
    double deg = 0;
    try {
      deg = std::stod(d, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != d.size()) throw ValidationError("--direction expects degrees or \"all\", got \"" + d + "\"");
    cfg.directions.push_back(deg);
  }
  if (cfg.all_directions) cfg.directions.clear();
  return cfg;
}

int run(const JobConfig& cfg) {
  std::cout << render(run_pipeline(cfg), cfg.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stokes matrices and alien derivations of level-one systems"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  std::string input;
  CLI::App* analyze = app.add_subcommand("analyze", "Run the pipeline on an input file");
  analyze->add_option("file", input, "System or equation description (JSON)")->required();
  add_analyze_options(analyze, analyze_opts);

  CLI::App* examples = app.add_subcommand("examples", "Bundled example inputs");
  examples->require_subcommand(1);
  CLI::App* list = examples->add_subcommand("list", "List the bundled examples");
  AnalyzeOptions example_opts;
  std::string example_name;
  CLI::App* run_example = examples->add_subcommand("run", "Run the pipeline on a bundled example");
  run_example->add_option("name", example_name, "Example name")->required();
  add_analyze_options(run_example, example_opts);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kValidationExit;
  }

  try {
    if (*analyze) {
      JobConfig cfg = make_config(analyze_opts);
      cfg.input = input;
      return run(cfg);
    }
    if (*list) {
      for (const BundledExample& e : bundled_examples()) std::cout << e.name << "\n";
      return 0;
    }
    if (*run_example) {
      JobConfig cfg = make_config(example_opts);
      for (const BundledExample& e : bundled_examples()) {
        if (e.name == example_name || e.name == example_name + ".json") {
          cfg.input = e.name;
          cfg.input_text = e.json;
          return run(cfg);
        }
      }
      throw ValidationError("no bundled example named \"" + example_name + "\"");
    }
    if (*selftest) return levelone::acceptance::run_suite(std::cout) == 0 ? 0 : kNumericalExit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::validation ? kValidationExit : kNumericalExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalExit;
  }
  return 0;
}
