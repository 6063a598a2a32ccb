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
#include "levelone/borel/ode.hpp"

#include <algorithm>

#include "levelone/core/error.hpp"

namespace levelone {

BorelState TaylorDisc::state_at(const Complex& t) const {
  BorelState s;
  const std::size_t depth = coeffs.front().size();
  for (std::size_t i = 0; i < depth; ++i) {
    CMatrix acc = coeffs.back()[i];
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
      for (std::size_t r = 0; r < acc.rows(); ++r)
        for (std::size_t c = 0; c < acc.cols(); ++c) acc(r, c) = acc(r, c) * t + coeffs[k][i](r, c);
    }
    s.u.push_back(std::move(acc));
  }
  return s;
}

CMatrix TaylorDisc::g_at(const Complex& t) const {
  const std::size_t last = coeffs.size() - 1;
  CMatrix acc = scaled(coeffs[last][0], Complex(static_cast<long>(last)));
  for (std::size_t k = last; k-- > 1;) {
    for (std::size_t r = 0; r < acc.rows(); ++r)
      for (std::size_t c = 0; c < acc.cols(); ++c) acc(r, c) = acc(r, c) * t + coeffs[k][0](r, c) * static_cast<long>(k);
  }
  return acc;
}

BorelOde::BorelOde(const LevelOneSystem& sys, BorelSeries seed)
    : sys_(sys), seed_(std::move(seed)), cols_(static_cast<std::size_t>(sys.block(0).size)),
      depth_(std::max<std::size_t>(1, sys.b_order())) {
  const Complex& a0 = sys.block(0).a;
  lam0_ = sys.block(0).effective_lambda();
  for (std::size_t r = 0; r < sys.dimension(); ++r) {
    const JordanBlockSpec& b = sys.block(sys.block_of_row(r));
    a_.push_back(b.a - a0);
    lam_.push_back(b.effective_lambda() - lam0_);
  }
  for (const Complex& p : a_) {
    bool seen = false;
    for (const Complex& q : singular_) seen = seen || same_value(p, q);
    if (!seen) singular_.push_back(p);
  }
  bool found = false;
  for (const Complex& p : singular_) {
    if (p.abs() <= merge_tolerance()) continue;
    if (!found || p.abs() < radius_) radius_ = p.abs();
    found = true;
  }
  if (!found) throw ValidationError("Borel equation has no singular point besides 0");
  if (seed_.coeffs.empty() || seed_.coeffs.front().cols() != cols_) {
    throw ValidationError("Borel seed does not match the first column block");
  }
}

Real BorelOde::distance_to_singular(const Complex& z) const {
  Real best = abs(z - singular_.front());
  for (const Complex& p : singular_) best = min(best, abs(z - p));
  return best;
}

Real BorelOde::seed_radius() const {
  const long terms = static_cast<long>(seed_.coeffs.size());
  Real ratio = pow(Real(2), Real(-static_cast<double>(working_precision() + 16) / static_cast<double>(terms)));
  return radius_ * min(ratio, Real(1) / 8);
}

BorelState BorelOde::seed_state(const Complex& z) const {
  BorelState s;
  for (std::size_t i = 1; i <= depth_; ++i) {
    // w_j = z^{j+i} j!/(j+i)!
    Complex w = pow(z, static_cast<long>(i)) / factorial(i);
    CMatrix acc(rows(), cols_);
    for (std::size_t j = 0; j < seed_.coeffs.size(); ++j) {
      if (j > 0) w = w * z * static_cast<long>(j) / static_cast<long>(j + i);
      const CMatrix& b = seed_.coeffs[j];
      for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
          if (!b(r, c).is_zero()) acc(r, c) += b(r, c) * w;
    }
    s.u.push_back(std::move(acc));
  }
  return s;
}

void BorelOde::rhs(const std::vector<CMatrix>& u, CMatrix& out) const {
  const std::size_t n = rows();
  const CMatrix& u1 = u[0];
  for (std::size_t r = 0; r < n; ++r) {
    const bool next_same = r + 1 < n && sys_.block_of_row(r + 1) == sys_.block_of_row(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      Complex v = lam_[r] * u1(r, c);
      if (next_same) v += u1(r + 1, c);
      if (c > 0) v -= u1(r, c - 1);
      out(r, c) = std::move(v);
    }
  }
  for (std::size_t m = 1; m <= sys_.b_order(); ++m) {
    const CMatrix& b = sys_.b_coeffs()[m - 1];
    const CMatrix& um = u[m - 1];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t l = 0; l < n; ++l) {
        if (b(r, l).is_zero()) continue;
        for (std::size_t c = 0; c < cols_; ++c)
          if (!um(l, c).is_zero()) out(r, c) += b(r, l) * um(l, c);
      }
  }
}

namespace {

// Coefficient of t^k in sum_m B_m E (z + t)^{m-1}/(m-1)!.
CMatrix forcing(const LevelOneSystem& sys, std::size_t cols, const Complex& z, std::size_t k) {
  CMatrix out(sys.dimension(), cols);
  for (std::size_t m = k + 1; m <= sys.b_order(); ++m) {
    const CMatrix& b = sys.b_coeffs()[m - 1];
    Complex w = pow(z, static_cast<long>(m - 1 - k)) / (factorial(k) * factorial(m - 1 - k));
    for (std::size_t r = 0; r < sys.dimension(); ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (!b(r, c).is_zero()) out(r, c) += b(r, c) * w;
  }
  return out;
}

Real state_size(const std::vector<CMatrix>& u) {
  Real s = Real::zero(working_precision());
  for (const CMatrix& m : u) s = max(s, max_abs(m));
  return s;
}

}  // namespace

TaylorDisc BorelOde::expand(const Complex& z, const BorelState& s, const Real& step) const {
  const long prec = working_precision();
  const Real tol = epsilon(prec + 8);
  const std::size_t kmax = static_cast<std::size_t>(4 * prec + 64);
  std::vector<Complex> d;
  for (const Complex& a : a_) d.push_back(z - a);
  TaylorDisc disc{z, step, {s.u}};
  Real scale = max(state_size(s.u), Real(1e-300));
  Real hk = Real(1).rounded(prec);
  int quiet = 0;
  CMatrix r(rows(), cols_);
  for (std::size_t k = 0; k < kmax; ++k) {
    const std::vector<CMatrix>& uk = disc.coeffs[k];
    rhs(uk, r);
    if (k + 1 <= sys_.b_order()) r += forcing(sys_, cols_, z, k);
    std::vector<CMatrix> next;
    CMatrix u1(rows(), cols_);
    for (std::size_t row = 0; row < rows(); ++row)
      for (std::size_t c = 0; c < cols_; ++c)
        u1(row, c) = (r(row, c) - uk[0](row, c) * static_cast<long>(k)) / (d[row] * static_cast<long>(k + 1));
    next.push_back(std::move(u1));
    for (std::size_t i = 1; i < depth_; ++i) next.push_back(scaled(uk[i - 1], Complex(Real(1) / static_cast<long>(k + 1))));
    hk = hk * step;
    Real term = state_size(next) * hk;
    // The derivative series carries an extra factor k.
    term = term * static_cast<long>(k + 2);
    scale = max(scale, term);
    disc.coeffs.push_back(std::move(next));
    if (k >= 4 && term <= tol * scale) {
      if (++quiet >= 2) return disc;
    } else {
      quiet = 0;
    }
  }
  throw NumericalError("Borel continuation: Taylor series did not converge at " + z.str(8));
}

CMatrix BorelOde::g_hat(const Complex& z, const BorelState& s) const {
  CMatrix r(rows(), cols_);
  rhs(s.u, r);
  r += forcing(sys_, cols_, z, 0);
  for (std::size_t row = 0; row < rows(); ++row) {
    Complex d = z - a_[row];
    for (std::size_t c = 0; c < cols_; ++c) r(row, c) = r(row, c) / d;
  }
  return r;
}

Continuation::Continuation(const BorelOde& ode, Complex start, BorelState state)
    : ode_(&ode), pos_(std::move(start)), state_(std::move(state)) {}

Continuation::Continuation(const BorelOde& ode, const Complex& start)
    : Continuation(ode, start, ode.seed_state(start)) {}

Real Continuation::step_bound(const Complex& z) const {
  Real b = ode_->distance_to_singular(z) / 2;
  if (!max_step_.is_zero()) b = min(b, max_step_);
  return b;
}

void Continuation::advance(const Complex& to, const Visitor& visit) {
  Complex t = to - pos_;
  TaylorDisc disc = ode_->expand(pos_, state_, t.abs() * margin_);
  state_ = disc.state_at(t);
  if (visit) visit(disc, to);
  pos_ = to;
  ++steps_;
}

void Continuation::line_to(const Complex& target, const Visitor& visit) {
  while (!(pos_ == target)) {
    Complex delta = target - pos_;
    Real rem = delta.abs();
    Real h = step_bound(pos_);
    if (rem <= h) {
      advance(target, visit);
    } else {
      advance(pos_ + delta * (h / rem), visit);
    }
  }
}

void Continuation::arc(const Complex& center, const Real& radius, const Real& angle_from, const Real& angle_to,
                       const Visitor& visit) {
  Complex expected = center + polar(radius, angle_from);
  if (abs(expected - pos_) > radius * 1e-20 + epsilon(working_precision() / 2)) {
    throw ValidationError("continuation arc does not start at the current point");
  }
  Real a = angle_from;
  const int dir = angle_to >= angle_from ? 1 : -1;
  while (!(a == angle_to)) {
    Real delta = step_bound(pos_) / radius;
    Real rem = abs(angle_to - a);
    a = rem <= delta ? angle_to : a + delta * dir;
    advance(center + polar(radius, a), visit);
  }
}

void Continuation::follow(const PathSpec& path, const Visitor& visit) {
  for (const PathSegment& s : path.segments()) {
    if (s.kind == PathSegment::Kind::line) {
      line_to(s.to, visit);
    } else {
      arc(s.center, s.radius, s.angle_from, s.angle_to, visit);
    }
  }
}

}  // namespace levelone
