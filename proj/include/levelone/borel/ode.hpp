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

#include <functional>
#include <vector>

#include "levelone/borel/path.hpp"
#include "levelone/core/linalg.hpp"
#include "levelone/formal/homological.hpp"
#include "levelone/system/system.hpp"

namespace levelone {

/// Values of u_i = I^i g at a point, i = 1..M, each n x c. g = u_1'.
struct BorelState {
  std::vector<CMatrix> u;
};

/// Taylor expansion of the state at center, valid on the disc of radius step.
struct TaylorDisc {
  Complex center;
  Real step;
  // coeffs[k][i] multiplies t^k in u_{i+1}(center + t).
  std::vector<std::vector<CMatrix>> coeffs;

  BorelState state_at(const Complex& t) const;
  // Borel transform g = u_1' at center + t.
  CMatrix g_at(const Complex& t) const;
};

/// Borel transform of the first column block equation of a normalized system.
///
/// With D = diag(a_r - a_0), L = Lambda - lam_0 and J_0 the column Jordan block,
/// (xi - D) u_1' = L u_1 - u_1 J_0 + sum_m B_m u_m + sum_m B_m E xi^{m-1}/(m-1)!.
class BorelOde {
 public:
  BorelOde(const LevelOneSystem& sys, BorelSeries seed);

  const LevelOneSystem& system() const { return sys_; }
  const BorelSeries& seed() const { return seed_; }
  std::size_t rows() const { return sys_.dimension(); }
  std::size_t cols() const { return cols_; }
  std::size_t depth() const { return depth_; }
  // Distinct a_r - a_0, including 0.
  const std::vector<Complex>& singular_points() const { return singular_; }
  // Smallest nonzero singular point modulus.
  const Real& borel_radius() const { return radius_; }

  Real distance_to_singular(const Complex& z) const;
  // Radius where the seed series is accurate to the working precision.
  Real seed_radius() const;
  BorelState seed_state(const Complex& z) const;
  // Taylor expansion at z, truncated once the terms at radius step are negligible.
  TaylorDisc expand(const Complex& z, const BorelState& s, const Real& step) const;
  CMatrix g_hat(const Complex& z, const BorelState& s) const;

 private:
  // R = L u_1 - u_1 J_0 + sum_m B_m u_m, row r of column c.
  void rhs(const std::vector<CMatrix>& u, CMatrix& out) const;

  LevelOneSystem sys_;
  BorelSeries seed_;
  std::size_t cols_;
  std::size_t depth_;
  std::vector<Complex> a_;    // per row, a_r - a_0
  std::vector<Complex> lam_;  // per row, lam_r - lam_0
  Complex lam0_;
  std::vector<Complex> singular_;
  Real radius_;
};

/// Continuation of the Borel transform along a path by Taylor stepping.
class Continuation {
 public:
  using Visitor = std::function<void(const TaylorDisc&, const Complex& to)>;

  Continuation(const BorelOde& ode, Complex start, BorelState state);
  // Seeded from the formal series at start.
  Continuation(const BorelOde& ode, const Complex& start);

  const Complex& position() const { return pos_; }
  const BorelState& state() const { return state_; }
  CMatrix g_hat() const { return ode_->g_hat(pos_, state_); }
  std::size_t steps() const { return steps_; }

  // Optional bound on the step length, used by quadrature.
  void set_max_step(const Real& h) { max_step_ = h; }
  // Expansions are made accurate up to margin times the step.
  void set_expansion_margin(double margin) { margin_ = margin; }

  void line_to(const Complex& target, const Visitor& visit = nullptr);
  // Arc around center from angle_from to angle_to; the current point must be on it.
  void arc(const Complex& center, const Real& radius, const Real& angle_from, const Real& angle_to,
           const Visitor& visit = nullptr);
  void follow(const PathSpec& path, const Visitor& visit = nullptr);

 private:
  Real step_bound(const Complex& z) const;
  void advance(const Complex& to, const Visitor& visit);

  const BorelOde* ode_;
  Complex pos_;
  BorelState state_;
  Real max_step_;
  double margin_ = 1;
  std::size_t steps_ = 0;
};

}  // namespace levelone
