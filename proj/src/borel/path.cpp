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
#include "levelone/borel/path.hpp"

#include <algorithm>

#include "levelone/core/error.hpp"
#include "levelone/system/system.hpp"

namespace levelone {

PathSpec::PathSpec(Complex start) : start_(std::move(start)) {}

const Complex& PathSpec::end() const { return segments_.empty() ? start_ : segments_.back().to; }

void PathSpec::line_to(const Complex& z) {
  PathSegment s;
  s.kind = PathSegment::Kind::line;
  s.from = end();
  s.to = z;
  segments_.push_back(std::move(s));
}

void PathSpec::arc(const Complex& center, const Real& radius, const Real& angle_from, const Real& angle_to) {
  PathSegment s;
  s.kind = PathSegment::Kind::arc;
  s.from = end();
  s.center = center;
  s.radius = radius;
  s.angle_from = angle_from;
  s.angle_to = angle_to;
  s.to = center + polar(radius, angle_to);
  Complex expected = center + polar(radius, angle_from);
  if (abs(expected - s.from) > radius * 1e-20 + epsilon(working_precision() / 2)) {
    throw ValidationError("path arc does not start at the current point");
  }
  segments_.push_back(std::move(s));
}

std::vector<Complex> PathSpec::waypoints() const {
  std::vector<Complex> w{start_};
  for (const PathSegment& s : segments_) w.push_back(s.to);
  return w;
}

Real segment_distance(const Complex& z, const Complex& a, const Complex& b) {
  Complex d = b - a;
  Real len2 = d.norm();
  if (len2.is_zero()) return abs(z - a);
  // Projection parameter of z onto the line, clamped to [0, 1].
  Complex w = z - a;
  Real t = (w.re() * d.re() + w.im() * d.im()) / len2;
  if (t < 0) t = Real::zero(t.precision());
  if (t > 1) t = Real(1).rounded(t.precision());
  return abs(z - (a + d * t));
}

namespace {

Real arc_distance(const Complex& p, const PathSegment& s) {
  Complex w = p - s.center;
  if (w.is_zero()) return s.radius;
  Real lo = min(s.angle_from, s.angle_to);
  Real hi = max(s.angle_from, s.angle_to);
  Real phi = w.arg();
  Real two_pi = ldexp(pi(), 1);
  // Smallest representative of phi not below lo.
  Real k = floor((lo - phi) / two_pi);
  Real rep = phi + two_pi * k;
  while (rep < lo) rep += two_pi;
  if (rep <= hi) return abs(w.abs() - s.radius);
  return min(abs(p - s.from), abs(p - s.to));
}

Real arc_winding(const Complex& p, const PathSegment& s) {
  if (same_value(p, s.center)) return s.angle_to - s.angle_from;
  const int pieces = 256;
  Real total = Real::zero(working_precision());
  Complex prev = s.from - p;
  for (int i = 1; i <= pieces; ++i) {
    Real t = s.angle_from + (s.angle_to - s.angle_from) * i / pieces;
    Complex cur = s.center + polar(s.radius, t) - p;
    total += (cur / prev).arg();
    prev = cur;
  }
  return total;
}

}  // namespace

Real PathSpec::winding_argument(const Complex& p) const {
  Real total = Real::zero(working_precision());
  for (const PathSegment& s : segments_) {
    if (s.kind == PathSegment::Kind::line) {
      total += ((s.to - p) / (s.from - p)).arg();
    } else {
      total += arc_winding(p, s);
    }
  }
  return total;
}

Real PathSpec::distance_to(const std::vector<Complex>& points) const {
  Real best = Real(1e300);
  for (const Complex& p : points) {
    if (segments_.empty()) best = min(best, abs(p - start_));
    for (const PathSegment& s : segments_) {
      Real d = s.kind == PathSegment::Kind::line ? segment_distance(p, s.from, s.to) : arc_distance(p, s);
      best = min(best, d);
    }
  }
  return best;
}

std::vector<std::pair<Complex, Real>> sheet_log(const PathSpec& path, const std::vector<Complex>& points) {
  std::vector<std::pair<Complex, Real>> out;
  for (const Complex& p : points) out.emplace_back(p, path.winding_argument(p));
  return out;
}

namespace {

// Singular points on the ray of argument theta with 0 < |p| < bound, sorted by modulus.
std::vector<Complex> on_ray(const std::vector<Complex>& singular, const Real& theta, const Real& bound) {
  std::vector<Complex> out;
  Real tiny = merge_tolerance();
  for (const Complex& p : singular) {
    if (p.abs() <= tiny || p.abs() >= bound * (1 - 1e-30)) continue;
    if (same_angle(p.arg(), theta)) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) { return a.abs() < b.abs(); });
  return out;
}

void check_clearance(const PathSpec& path, const std::vector<Complex>& singular, const Complex* target,
                     const Real& nu) {
  std::vector<Complex> others;
  Real tiny = merge_tolerance();
  for (const Complex& p : singular) {
    if (p.abs() <= tiny) continue;
    if (target != nullptr && same_value(p, *target)) continue;
    others.push_back(p);
  }
  if (others.empty()) return;
  Real d = path.distance_to(others);
  if (d < nu * (1 - 1e-12)) {
    throw ValidationError("path clearance violated: distance " + d.str(6) + " below nu = " + nu.str(6));
  }
}

void bypass(PathSpec& path, const Complex& p, const Real& theta, const Real& nu, Side side) {
  const Complex dir = expi(theta);
  path.line_to(p - dir * nu);
  Real from = theta + pi();
  Real to = side == Side::right ? theta + ldexp(pi(), 1) : theta;
  path.arc(p, nu, from, to);
  path.bypasses.push_back({p, side, 0});
}

}  // namespace

PathSpec gamma_plus(const std::vector<Complex>& singular, const Complex& omega, const Real& theta, const Real& nu,
                    const Real& start_radius) {
  if (!same_angle(omega.arg(), theta)) throw ValidationError("gamma_plus: omega is not on the ray");
  const Complex dir = expi(theta);
  PathSpec path(dir * start_radius);
  for (const Complex& p : on_ray(singular, theta, omega.abs())) bypass(path, p, theta, nu, Side::right);
  path.line_to(omega - dir * nu);
  check_clearance(path, singular, &omega, nu);
  return path;
}

PathSpec lateral_path(const std::vector<Complex>& singular, const Real& theta, const Real& nu,
                      const Real& start_radius, const Real& length, Side side) {
  const Complex dir = expi(theta);
  PathSpec path(dir * start_radius);
  for (const Complex& p : on_ray(singular, theta, length + nu)) bypass(path, p, theta, nu, side);
  path.line_to(dir * length);
  check_clearance(path, singular, nullptr, nu);
  return path;
}

Real default_clearance(const std::vector<Complex>& points) {
  Real best;
  bool found = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (same_value(points[i], points[j])) continue;
      Real d = abs(points[i] - points[j]);
      if (!found || d < best) best = d;
      found = true;
    }
  }
  return found ? best / 10 : Real(1) / 10;
}

}  // namespace levelone
