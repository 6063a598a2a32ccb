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

#include "levelone/core/complex.hpp"

#include <algorithm>
#include <ostream>

namespace levelone {

namespace {

long pmin(const Complex& a, const Complex& b) { return std::min(a.precision(), b.precision()); }

}  // namespace

Complex Complex::i(long prec) {
  long p = prec > 0 ? prec : working_precision();
  Complex z = zero(p);
  mpfr_set_ui(z.im_.raw(), 1, MPFR_RNDN);
  return z;
}

Complex Complex::parse(std::string_view re, std::string_view im, long prec) {
  return {Real::parse(re, prec), Real::parse(im, prec)};
}

long Complex::precision() const { return std::min(re_.precision(), im_.precision()); }

Real Complex::norm() const {
  Real r = Real::zero(precision());
  mpfr_fmma(r.raw(), re_.raw(), re_.raw(), im_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& b) { return *this = *this + b; }
Complex& Complex::operator-=(const Complex& b) { return *this = *this - b; }
Complex& Complex::operator*=(const Complex& b) { return *this = *this * b; }
Complex& Complex::operator/=(const Complex& b) { return *this = *this / b; }

std::string Complex::str(int digits) const {
  std::string s = re_.str(digits);
  if (im_.sign() >= 0) s += "+";
  return s + im_.str(digits) + "i";
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re() + b.re(), a.im() + b.im()}; }

Complex operator-(const Complex& a, const Complex& b) { return {a.re() - b.re(), a.im() - b.im()}; }

Complex operator*(const Complex& a, const Complex& b) {
  long p = pmin(a, b);
  Complex r = Complex::zero(p);
  mpfr_fmms(r.re().raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fmma(r.im().raw(), a.re().raw(), b.im().raw(), a.im().raw(), b.re().raw(), MPFR_RNDN);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  long p = pmin(a, b);
  Real d = b.norm();
  Complex r = Complex::zero(p);
  mpfr_fmma(r.re().raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fmms(r.im().raw(), a.im().raw(), b.re().raw(), a.re().raw(), b.im().raw(), MPFR_RNDN);
  return {r.re() / d, r.im() / d};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re() * b, a.im() * b}; }
Complex operator*(const Real& a, const Complex& b) { return {b.re() * a, b.im() * a}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re() / b, a.im() / b}; }

bool operator==(const Complex& a, const Complex& b) { return a.re() == b.re() && a.im() == b.im(); }

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  Real s = Real::zero(z.precision());
  Real c = Real::zero(z.precision());
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return {m * c, m * s};
}

Complex log(const Complex& z) { return {log(z.abs()), z.arg()}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  Real r = z.abs();
  Real a = sqrt(ldexp(r + abs(z.re()), -1));
  if (z.re().sign() >= 0) return {a, z.im() / ldexp(a, 1)};
  Real b = z.im().sign() >= 0 ? a : -a;
  return {abs(z.im()) / ldexp(a, 1), b};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1).rounded(z.precision())) / pow(z, -n);
  Complex result(Real(1).rounded(z.precision()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.is_zero()) return w.is_zero() ? Complex(Real(1).rounded(z.precision())) : z;
  return exp(w * log(z));
}

Complex expi(const Real& t) {
  Real s = Real::zero(t.precision());
  Real c = Real::zero(t.precision());
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
  return {c, s};
}

Complex polar(const Real& r, const Real& t) { return expi(t) * r; }

Real abs(const Complex& z) { return z.abs(); }

Real mag(const Complex& z) { return max(abs(z.re()), abs(z.im())); }

Complex pow_arg(const Real& r, const Real& t, const Complex& w) {
  return exp(Complex(log(r), t) * w);
}

std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(20); }

}  // namespace levelone
