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

#include <vector>

#include "levelone/core/complex.hpp"

namespace levelone {

enum class Side { right, left };

/// A singular point passed on one side, with the number of turns made around it.
struct Bypass {
  Complex point;
  Side side = Side::right;
  int winding = 0;
};

struct PathSegment {
  enum class Kind { line, arc };
  Kind kind = Kind::line;
  Complex from;
  Complex to;
  // Arc data: to = center + radius e^{i angle_to}, angles continuous.
  Complex center;
  Real radius;
  Real angle_from;
  Real angle_to;
};

/// Piecewise path of straight segments and circular arcs in the Borel plane.
class PathSpec {
 public:
  PathSpec() = default;
  explicit PathSpec(Complex start);

  void line_to(const Complex& z);
  // Arc around center from the current point; angle_from must match it.
  void arc(const Complex& center, const Real& radius, const Real& angle_from, const Real& angle_to);

  const Complex& start() const { return start_; }
  const Complex& end() const;
  const std::vector<PathSegment>& segments() const { return segments_; }
  std::vector<Complex> waypoints() const;

  std::vector<Bypass> bypasses;

  // Accumulated change of arg(xi - p) along the path.
  Real winding_argument(const Complex& p) const;
  // Smallest distance from the path to the points.
  Real distance_to(const std::vector<Complex>& points) const;

 private:
  Complex start_;
  std::vector<PathSegment> segments_;
};

// Distance from z to the segment [a, b].
Real segment_distance(const Complex& z, const Complex& a, const Complex& b);

// Turns of the path around each point with a nonzero winding argument.
std::vector<std::pair<Complex, Real>> sheet_log(const PathSpec& path, const std::vector<Complex>& points);

/// Path from start_radius e^{i theta} to omega - nu e^{i theta} along the ray, passing every
/// intermediate singular point on the ray to the right by a half circle of radius nu.
/// Throws ValidationError when the clearance nu is violated.
PathSpec gamma_plus(const std::vector<Complex>& singular, const Complex& omega, const Real& theta, const Real& nu,
                    const Real& start_radius);

/// Ray of argument theta from start_radius to length, with half circles of radius nu around the
/// singular points on it, on the given side.
PathSpec lateral_path(const std::vector<Complex>& singular, const Real& theta, const Real& nu,
                      const Real& start_radius, const Real& length, Side side);

// Default clearance: 0.1 times the smallest distance between distinct points.
Real default_clearance(const std::vector<Complex>& points);

}  // namespace levelone
