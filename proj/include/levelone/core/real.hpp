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

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace levelone {

// Process-wide default precision in bits (256 unless changed).
long default_precision();
void set_default_precision(long bits);

// Precision used for freshly constructed values on this thread.
long working_precision();

// Overrides the working precision of the current thread for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/// Arbitrary precision real number.
///
/// Binary operations round to the smaller precision of their operands.
/// Integer and double operands do not lower the precision.
class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(unsigned long v);
  Real(double v);
  explicit Real(const mpz_class& z, long prec = 0);
  explicit Real(const mpq_class& q, long prec = 0);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  // Zero with the given precision.
  static Real zero(long prec);
  // Decimal or scientific text; throws std::invalid_argument.
  static Real parse(std::string_view text, long prec = 0);

  long precision() const;
  Real rounded(long prec) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double() const;
  long to_long() const;
  // Nearest integer, exact.
  mpz_class to_integer() const;
  // Scientific notation. digits == 0 gives enough digits to round trip.
  std::string str(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // Binary exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
  long exponent() const;

  Real operator-() const;
  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);

 private:
  explicit Real(long prec, int);
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

Real add_si(const Real& a, long b);
Real mul_si(const Real& a, long b);
Real div_si(const Real& a, long b);
Real si_div(long a, const Real& b);
Real mul_d(const Real& a, double b);

template <std::integral I>
Real operator+(const Real& a, I b) { return add_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator+(I a, const Real& b) { return add_si(b, static_cast<long>(a)); }
template <std::integral I>
Real operator-(const Real& a, I b) { return add_si(a, -static_cast<long>(b)); }
template <std::integral I>
Real operator-(I a, const Real& b) { return add_si(-b, static_cast<long>(a)); }
template <std::integral I>
Real operator*(const Real& a, I b) { return mul_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator*(I a, const Real& b) { return mul_si(b, static_cast<long>(a)); }
template <std::integral I>
Real operator/(const Real& a, I b) { return div_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator/(I a, const Real& b) { return si_div(static_cast<long>(a), b); }
template <std::floating_point F>
Real operator*(const Real& a, F b) { return mul_d(a, static_cast<double>(b)); }
template <std::floating_point F>
Real operator*(F a, const Real& b) { return mul_d(b, static_cast<double>(a)); }

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);
template <std::integral I>
bool operator==(const Real& a, I b) { return mpfr_cmp_si(a.raw(), static_cast<long>(b)) == 0; }
template <std::integral I>
std::partial_ordering operator<=>(const Real& a, I b) {
  int c = mpfr_cmp_si(a.raw(), static_cast<long>(b));
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
template <std::floating_point F>
std::partial_ordering operator<=>(const Real& a, F b) {
  int c = mpfr_cmp_d(a.raw(), static_cast<double>(b));
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
// lgamma/gamma of a real argument.
Real gamma(const Real& x);
Real factorial(unsigned long n, long prec = 0);

Real pi(long prec = 0);
Real euler_gamma(long prec = 0);
// 2^{-bits}
Real epsilon(long bits);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace levelone
