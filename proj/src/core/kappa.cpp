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

#include "levelone/core/kappa.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace levelone {

namespace {

using Coeffs = std::vector<Complex>;

Coeffs zeros(int order, long prec) { return Coeffs(static_cast<std::size_t>(order) + 1, Complex::zero(prec)); }

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  const int n = static_cast<int>(a.size()) - 1;
  Coeffs r = zeros(n, a[0].precision());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exp of a series, via E' = s' E.
Coeffs series_exp(const Coeffs& s) {
  const int n = static_cast<int>(s.size()) - 1;
  Coeffs e = zeros(n, s[0].precision());
  e[0] = exp(s[0]);
  for (int k = 1; k <= n; ++k) {
    Complex acc = Complex::zero(s[0].precision());
    for (int j = 1; j <= k; ++j) acc += s[j] * e[k - j] * j;
    e[k] = acc / k;
  }
  return e;
}

// Bernoulli number B_{2k} from zeta(2k), cached per precision.
Real bernoulli_even(int k, long prec) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, Real> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(prec, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Real z = Real::zero(prec + 32);
  mpfr_zeta_ui(z.raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
  Real two_pi = ldexp(pi(prec + 32), 1);
  Real b = ldexp(z * factorial(static_cast<unsigned long>(2 * k), prec + 32), 1) / pow(two_pi, 2L * k);
  if (k % 2 == 0) b = -b;
  b = b.rounded(prec);
  cache.emplace(key, b);
  return b;
}

// Taylor coefficients in v of ln Gamma(w + v) by the Stirling series; |w| must be large.
Coeffs lngamma_stirling(const Complex& w, int order, long prec) {
  Coeffs s = zeros(order, prec);
  Complex lw = log(w);
  // (w + v - 1/2) ln(w + v) - (w + v) + ln(2 pi)/2
  Coeffs lnw = zeros(order, prec);
  lnw[0] = lw;
  Complex wp = w;
  for (int m = 1; m <= order; ++m) {
    lnw[m] = Complex(Real(m % 2 == 1 ? 1 : -1).rounded(prec)) / (wp * m);
    wp = wp * w;
  }
  Coeffs lin = zeros(order, prec);
  lin[0] = w - Complex(Real(0.5).rounded(prec));
  if (order >= 1) lin[1] = Complex(Real(1).rounded(prec));
  s = mul(lin, lnw);
  s[0] -= w;
  if (order >= 1) s[1] -= Complex(Real(1).rounded(prec));
  s[0] += Complex(ldexp(log(ldexp(pi(prec), 1)), -1));
  // sum_k B_{2k} / (2k (2k-1)) (w + v)^{-(2k-1)}
  Real tol = epsilon(prec + 8) * max(Real(1), abs(s[0]));
  Complex winv = Complex(Real(1).rounded(prec)) / w;
  Complex winv2 = winv * winv;
  Complex wpow = winv;  // w^{-(2k-1)}
  for (int k = 1; k < 4 * prec; ++k) {
    Real c = bernoulli_even(k, prec) / (static_cast<long>(2 * k) * static_cast<long>(2 * k - 1));
    const long e = 2L * k - 1;
    // (w + v)^{-e} = w^{-e} sum_m binom(-e, m) (v/w)^m
    Complex term = wpow * c;
    if (term.abs() < tol) break;
    Complex bin = term;
    for (int m = 0; m <= order; ++m) {
      s[m] += bin;
      bin = bin * winv * (-(e + m)) / (m + 1);
    }
    wpow = wpow * winv2;
  }
  return s;
}

}  // namespace

std::vector<Complex> rgamma_taylor(const Complex& z0, int order) {
  const long prec = working_precision() + 32;
  PrecisionScope scope(prec);
  Complex z = z0.rounded(prec);
  // 1/Gamma(z + u) = prod_{i<N} (z + i + u) / Gamma(z + N + u)
  const double target = 0.15 * static_cast<double>(prec) + 10.0;
  double re = z.re().to_double();
  int shift = re >= target ? 0 : static_cast<int>(std::ceil(target - re));
  Coeffs poly = zeros(order, prec);
  poly[0] = Complex(Real(1));
  for (int i = 0; i < shift; ++i) {
    Coeffs f = zeros(order, prec);
    f[0] = z + i;
    if (order >= 1) f[1] = Complex(Real(1));
    poly = mul(poly, f);
  }
  Coeffs lg = lngamma_stirling(z + shift, order, prec);
  for (Complex& c : lg) c = -c;
  Coeffs result = mul(poly, series_exp(lg));
  const long out = prec - 32;
  for (Complex& c : result) c = c.rounded(out);
  return result;
}

std::vector<Complex> kappa_table(int pmax, const Complex& lam) {
  if (pmax < 0) throw std::invalid_argument("kappa: negative order");
  const long prec = working_precision() + 32;
  Coeffs g;
  Complex two_pi_i;
  {
    PrecisionScope scope(prec);
    Complex l = lam.rounded(prec);
    // t = lam + u: 1/Gamma(1 - lam - u) has coefficients (-1)^k g_k with g from rgamma_taylor(1 - lam).
    Coeffs r = rgamma_taylor(Complex(Real(1)) - l, pmax);
    for (int k = 1; k <= pmax; k += 2) r[k] = -r[k];
    // exp(-i pi (lam + u))
    Real p = pi();
    Coeffs e = zeros(pmax, prec);
    Complex mip = Complex(Real::zero(prec), -p);
    e[0] = exp(mip * l);
    for (int k = 1; k <= pmax; ++k) e[k] = e[k - 1] * mip / k;
    g = mul(e, r);
    two_pi_i = Complex(Real::zero(prec), ldexp(p, 1));
  }
  const long out = prec - 32;
  std::vector<Complex> kap(static_cast<std::size_t>(pmax) + 1);
  Real fact = Real(1).rounded(prec);
  for (int p = 0; p <= pmax; ++p) {
    if (p > 0) fact = fact * p;
    kap[p] = (two_pi_i * g[p] * fact).rounded(out);
  }
  return kap;
}

Complex kappa(int p, const Complex& lam) { return kappa_table(p, lam).back(); }

}  // namespace levelone
