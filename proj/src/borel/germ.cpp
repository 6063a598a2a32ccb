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
#include "levelone/borel/germ.hpp"

#include "levelone/system/system.hpp"

namespace levelone {

std::pair<Complex, long> exponent_class(const Complex& e) {
  Real n = floor(e.re() + merge_tolerance());
  Complex lam = e - Complex(n);
  if (lam.re().sign() < 0) lam.re() = Real::zero(lam.re().precision());
  return {lam, n.to_long()};
}

namespace {

// Series whose coefficient i is h[i - offset], truncated to order.
TruncatedSeries shifted(const TruncatedSeries& h, std::size_t offset, std::size_t order) {
  std::vector<Complex> c(order + 1, Complex::zero(working_precision()));
  for (std::size_t i = 0; i <= h.order() && i + offset <= order; ++i) c[i + offset] = h[i];
  return {Variable::xi, std::move(c)};
}

Complex binomial(int p, int q) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  return Complex(Real(b));
}

}  // namespace

void LogPolynomialGerm::add(const Complex& exponent, int p, const TruncatedSeries& h) {
  auto [lam, n] = exponent_class(exponent);
  add_term({lam, p, n + 1, h});
}

void LogPolynomialGerm::add_term(GermTerm t) {
  if (t.lambda.re().sign() < 0 || t.lambda.re() >= 1) {
    auto [lam, n] = exponent_class(t.lambda);
    t.lambda = lam;
    t.shift += n;
  }
  for (GermTerm& u : terms_) {
    if (u.p != t.p || !same_value(u.lambda, t.lambda)) continue;
    const long s = std::min(u.shift, t.shift);
    const long end = std::min(u.shift + static_cast<long>(u.h.order()), t.shift + static_cast<long>(t.h.order()));
    const std::size_t order = static_cast<std::size_t>(end - s);
    u.h = shifted(u.h, static_cast<std::size_t>(u.shift - s), order) +
          shifted(t.h, static_cast<std::size_t>(t.shift - s), order);
    u.shift = s;
    return;
  }
  terms_.push_back(std::move(t));
}

Complex LogPolynomialGerm::evaluate(const Real& r, const Real& arg) const {
  Complex total = Complex::zero(working_precision());
  const Complex log_xi(log(r), arg);
  const Complex ell = log_xi / (Complex::i() * ldexp(pi(), 1));
  const Complex xi = polar(r, arg);
  for (const GermTerm& t : terms_) {
    Complex v = t.h.evaluate(xi) * exp((t.lambda + Complex(t.shift - 1)) * log_xi);
    if (t.p > 0) v = v * pow(ell, static_cast<long>(t.p));
    total += v;
  }
  return total;
}

int LogPolynomialGerm::log_degree() const {
  int d = -1;
  for (const GermTerm& t : terms_) d = std::max(d, t.p);
  return d;
}

bool LogPolynomialGerm::is_simple_moderate(long min_shift) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].shift < min_shift) return false;
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (terms_[i].p == terms_[j].p && same_value(terms_[i].lambda, terms_[j].lambda)) return false;
  }
  return true;
}

void LogPolynomialGerm::prune(const Real& tol) {
  std::vector<GermTerm> kept;
  for (GermTerm& t : terms_) {
    std::size_t lead = 0;
    while (lead <= t.h.order() && mag(t.h[lead]) <= tol) ++lead;
    if (lead > t.h.order()) continue;
    if (lead > 0) {
      std::vector<Complex> c(t.h.coeffs().begin() + static_cast<long>(lead), t.h.coeffs().end());
      t.h = TruncatedSeries(Variable::xi, std::move(c));
      t.shift += static_cast<long>(lead);
    }
    kept.push_back(std::move(t));
  }
  terms_ = std::move(kept);
}

LogPolynomialGerm variation(const LogPolynomialGerm& g) {
  LogPolynomialGerm out(g.center());
  for (const GermTerm& t : g.terms()) {
    // var(xi^nu ell^p) = xi^nu [(1 - e) ell^p - e sum_{q<p} C(p,q) (-1)^{p-q} ell^q], e = e^{-2 pi i lambda}.
    Complex e = t.lambda.is_zero() ? Complex(1) : exp(Complex::i() * ldexp(pi(), 1) * t.lambda * -1);
    Complex lead = Complex(1) - e;
    if (!lead.is_zero()) out.add_term({t.lambda, t.p, t.shift, t.h * lead});
    for (int q = 0; q < t.p; ++q) {
      Complex c = e * binomial(t.p, q);
      if ((t.p - q) % 2 == 0) c = -c;
      out.add_term({t.lambda, q, t.shift, t.h * c});
    }
  }
  return out;
}

LogPolynomialGerm variation(const LogPolynomialGerm& g, int times) {
  LogPolynomialGerm out = g;
  for (int i = 0; i < times; ++i) out = variation(out);
  return out;
}

LogPolynomialGerm operator*(const LogPolynomialGerm& a, const LogPolynomialGerm& b) {
  LogPolynomialGerm out(a.center());
  for (const GermTerm& s : a.terms())
    for (const GermTerm& t : b.terms())
      out.add(s.lambda + t.lambda + Complex(s.shift + t.shift - 2), s.p + t.p, s.h * t.h);
  return out;
}

LogPolynomialGerm operator+(const LogPolynomialGerm& a, const LogPolynomialGerm& b) {
  LogPolynomialGerm out = a;
  for (const GermTerm& t : b.terms()) out.add_term(t);
  return out;
}

LogPolynomialGerm operator-(const LogPolynomialGerm& a, const LogPolynomialGerm& b) {
  LogPolynomialGerm out = a;
  for (const GermTerm& t : b.terms()) out.add_term({t.lambda, t.p, t.shift, t.h * Complex(-1)});
  return out;
}

GermAccessor variation(GermAccessor g) {
  return [g = std::move(g)](const Real& r, const Real& arg) { return g(r, arg) - g(r, arg - ldexp(pi(), 1)); };
}

}  // namespace levelone
