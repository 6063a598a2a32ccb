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

#include "levelone/alien/lattice.hpp"
#include "levelone/core/linalg.hpp"

namespace levelone {

/// C in one direction from one route, with its error measures.
struct RouteReport {
  std::string name;
  CMatrix c;
  Real residual;
  Real off_pattern;
  Real quadrature_error;
  bool operator==(const RouteReport&) const = default;
};

struct ConnectionBlockReport {
  Complex omega;
  CMatrix k;
  bool operator==(const ConnectionBlockReport&) const = default;
};

struct ComponentReport {
  Complex omega;
  WeightVector weight;
  CMatrix matrix;
  bool operator==(const ComponentReport&) const = default;
};

struct DiagnosticEntry {
  std::string key;
  std::string value;
  bool operator==(const DiagnosticEntry&) const = default;
};

struct DirectionReport {
  Real theta;
  Real theta_star;
  std::vector<Complex> omegas;
  std::vector<ConnectionBlockReport> k_blocks;
  std::optional<CMatrix> k_total;
  std::vector<RouteReport> routes;
  // Largest entry of the difference of the two routes over max(1, |C|).
  std::optional<Real> route_delta;
  std::vector<ComponentReport> components;
  std::vector<std::string> bridge;
  std::vector<DiagnosticEntry> diagnostics;
  bool operator==(const DirectionReport&) const = default;
};

struct Report {
  int schema_version = 1;
  std::string mode;
  bool structural = false;
  std::size_t dimension = 0;
  int order = 0;
  long precision = 0;
  std::string route;
  std::vector<std::string> block_ids;
  std::vector<Complex> lattice_basis;
  std::vector<WeightVector> weights;
  // Coefficients of y in equation mode.
  std::vector<Complex> series;
  std::vector<DiagnosticEntry> diagnostics;
  std::vector<DirectionReport> directions;
  bool operator==(const Report&) const = default;
};

// Numbers are decimal strings with enough digits to round trip at the report precision.
std::string report_json(const Report& report);
// Throws ValidationError on schema violations.
Report parse_report_json(const std::string& text);
std::string report_text(const Report& report);

}  // namespace levelone
