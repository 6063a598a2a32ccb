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
#include "levelone/borel/pade.hpp"

#include <algorithm>
#include <optional>

#include "levelone/core/error.hpp"
#include "levelone/core/linalg.hpp"

namespace levelone {

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& t) {
  Complex acc = Complex::zero(working_precision());
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

// Coefficients of c(t + d) in powers of t.
std::vector<Complex> shift_poly(std::vector<Complex> c, const Complex& d) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) c[k - 1] += c[k] * d;
  return c;
}

}  // namespace

Complex PadeApproximant::evaluate(const Complex& xi) const {
  Complex t = xi - center;
  return horner(p, t) / horner(q, t);
}

std::vector<Complex> PadeApproximant::taylor(const Complex& at, std::size_t order) const {
  std::vector<Complex> ps = shift_poly(p, at - center);
  std::vector<Complex> qs = shift_poly(q, at - center);
  ps.resize(std::max(ps.size(), order + 1), Complex::zero(working_precision()));
  std::vector<Complex> out;
  for (std::size_t k = 0; k <= order; ++k) {
    Complex v = ps[k];
    for (std::size_t j = 1; j <= k && j < qs.size(); ++j) v -= qs[j] * out[k - j];
    out.push_back(v / qs[0]);
  }
  return out;
}

PadeApproximant pade(const std::vector<Complex>& c, const Complex& center, std::size_t l, std::size_t m) {
  if (l + m + 1 > c.size()) throw ValidationError("pade: not enough coefficients");
  auto coef = [&](long k) { return k < 0 ? Complex::zero(working_precision()) : c[static_cast<std::size_t>(k)]; };
  PadeApproximant r;
  r.center = center;
  r.q.assign(m + 1, Complex::zero(working_precision()));
  r.q[0] = Complex(1);
  if (m > 0) {
    CMatrix a(m, m), b(m, 1);
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= m; ++j) a(i - 1, j - 1) = coef(static_cast<long>(l + i) - static_cast<long>(j));
      b(i - 1, 0) = -coef(static_cast<long>(l + i));
    }
    CMatrix x = solve(a, b);
    for (std::size_t j = 1; j <= m; ++j) r.q[j] = x(j - 1, 0);
  }
  for (std::size_t i = 0; i <= l; ++i) {
    Complex v = Complex::zero(working_precision());
    for (std::size_t j = 0; j <= std::min(i, m); ++j) v += r.q[j] * c[i - j];
    r.p.push_back(v);
  }
  Real worst = Real::zero(working_precision());
  for (std::size_t k = l + m + 1; k < c.size(); ++k) {
    Complex v = Complex::zero(working_precision());
    Real scale = Real(1e-300);
    for (std::size_t j = 0; j <= m && j <= k; ++j) {
      Complex t = r.q[j] * c[k - j];
      scale = max(scale, mag(t));
      v += t;
    }
    worst = max(worst, mag(v) / scale);
  }
  r.extra_residual = worst;
  return r;
}

namespace {

std::optional<PadeApproximant> try_pade(const std::vector<Complex>& c, const Complex& center, std::size_t degree,
                                       std::size_t m) {
  try {
    return pade(c, center, degree - m, m);
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

// Rational function behind the coefficients, if a low degree reproduces all of them.
std::optional<PadeApproximant> detect_rational(const std::vector<Complex>& c, const Complex& center) {
  const Real tol = epsilon(working_precision() / 2);
  for (std::size_t d = 0; d + 5 <= c.size(); ++d) {
    // Polynomials and the two near-diagonal splits.
    for (std::size_t m : {std::size_t{0}, d / 2, (d + 1) / 2}) {
      auto a = try_pade(c, center, d, m);
      if (a && a->extra_residual < tol) return a;
    }
  }
  return std::nullopt;
}

struct Stabilized {
  PadeApproximant approx;
  Complex value;
  Real agreement;
  std::size_t degree;
};

Stabilized stabilize(const std::vector<Complex>& c, const Complex& center, const Complex& zeta) {
  std::vector<std::pair<std::size_t, PadeApproximant>> found;
  for (std::size_t d = c.size() - 1; d + 1 > 0 && found.size() < 3; --d) {
    auto a = try_pade(c, center, d, d / 2);
    if (a) found.emplace_back(d, std::move(*a));
    if (d == 0) break;
  }
  if (found.size() < 3) throw NumericalError("pade: fewer than three nonsingular approximants");
  Complex v0 = found[0].second.evaluate(zeta);
  Complex v1 = found[1].second.evaluate(zeta);
  Complex v2 = found[2].second.evaluate(zeta);
  Real scale = max(abs(v0), Real(1e-300));
  Real agreement = max(abs(v0 - v1), abs(v1 - v2)) / scale;
  return {found[0].second, v0, agreement, found[0].first};
}

}  // namespace

PadeResult pade_continue(const TruncatedSeries& ts, const Complex& zeta, const PadeOptions& opts,
                         const PathSpec* path) {
  if (ts.variable() != Variable::xi) throw ValidationError("pade_continue: series must be in xi");
  if (ts.order() + 1 < 8) throw ValidationError("pade_continue: need at least 8 coefficients");
  const Complex origin = Complex::zero(working_precision());
  if (auto r = detect_rational(ts.coeffs(), origin)) {
    if (!opts.singular.empty() && !opts.clearance.is_zero()) {
      for (const Complex& p : opts.singular)
        if (abs(zeta - p) <= opts.clearance) throw ValidationError("pade_continue: zeta within the clearance");
    }
    return {r->evaluate(zeta), Real::zero(working_precision()), true, r->p.size() + r->q.size() - 2, 0};
  }
  PadeResult out;
  Stabilized s = stabilize(ts.coeffs(), origin, zeta);
  if (path != nullptr) {
    if (opts.singular.empty()) throw ValidationError("pade_continue: path re-expansion needs the singular support");
    if (path->distance_to(opts.singular) < opts.clearance) throw ValidationError("path clearance violated");
    PadeApproximant current = s.approx;
    Complex center = origin;
    for (const Complex& w : path->waypoints()) {
      while (!(center == w)) {
        Real dist = Real(1e300);
        for (const Complex& p : opts.singular) dist = min(dist, abs(center - p));
        Complex delta = w - center;
        Real h = dist / 2;
        Complex next = delta.abs() <= h ? w : center + delta * (h / delta.abs());
        std::vector<Complex> c = current.taylor(next, ts.order());
        Stabilized t = stabilize(c, next, next);
        current = t.approx;
        center = next;
        ++out.reexpansions;
      }
    }
    s = stabilize(current.taylor(center, ts.order()), center, zeta);
  }
  if (s.agreement > Real(opts.tolerance)) {
    throw NumericalError("pade_continue: approximants did not stabilize, agreement " + s.agreement.str(4));
  }
  out.value = s.value;
  out.agreement = s.agreement;
  out.degree = s.degree;
  return out;
}

}  // namespace levelone
