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
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levelone/app/input.hpp"
#include "levelone/app/report.hpp"

namespace levelone {

enum class Route { laplace, borel, both };
enum class OutputFormat { json, text };

struct JobConfig {
  std::string input;
  // Input contents; read from the input path when unset.
  std::optional<std::string> input_text;
  // Checked against the mode of the input when set.
  std::optional<InputMode> mode;
  // Directions in degrees; every direction carrying a Stokes value when all_directions is set.
  std::vector<double> directions;
  bool all_directions = true;
  int order = 40;
  long precision = 256;
  Route route = Route::both;
  OutputFormat format = OutputFormat::json;
};

// LEVELONE_PRECISION, or 256 when unset. Throws ValidationError on a malformed value.
long precision_from_env();

std::string route_name(Route route);
Route parse_route(const std::string& name);
OutputFormat parse_format(const std::string& name);

/// Series, connection constants, Stokes matrices by the requested routes and alien derivations for
/// each direction. Errors keep their kind and are prefixed with the failing stage.
Report run_pipeline(const JobConfig& cfg);
std::string render(const Report& report, OutputFormat format);

}  // namespace levelone
