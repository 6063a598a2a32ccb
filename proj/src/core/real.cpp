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

#include "levelone/core/real.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace levelone {

namespace {

std::atomic<long> g_default_precision{256};
thread_local long t_precision = 0;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long checked(long prec) {
  if (prec < MPFR_PREC_MIN || prec > 1L << 24) {
    throw std::invalid_argument("precision out of range: " + std::to_string(prec));
  }
  return prec;
}

long pick(long prec) { return prec > 0 ? prec : working_precision(); }

}  // namespace

long default_precision() { return g_default_precision.load(); }

void set_default_precision(long bits) { g_default_precision.store(checked(bits)); }

long working_precision() { return t_precision > 0 ? t_precision : g_default_precision.load(); }

PrecisionScope::PrecisionScope(long bits) : saved_(t_precision) { t_precision = checked(bits); }

PrecisionScope::~PrecisionScope() { t_precision = saved_; }

Real::Real(long prec, int) { mpfr_init2(value_, prec); }

Real::Real() : Real(working_precision(), 0) { mpfr_set_zero(value_, 1); }

Real::Real(int v) : Real(working_precision(), 0) { mpfr_set_si(value_, v, kRnd); }

Real::Real(long v) : Real(working_precision(), 0) { mpfr_set_si(value_, v, kRnd); }

Real::Real(unsigned long v) : Real(working_precision(), 0) { mpfr_set_ui(value_, v, kRnd); }

Real::Real(double v) : Real(working_precision(), 0) { mpfr_set_d(value_, v, kRnd); }

Real::Real(const mpz_class& z, long prec) : Real(pick(prec), 0) {
  mpfr_set_z(value_, z.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& q, long prec) : Real(pick(prec), 0) {
  mpfr_set_q(value_, q.get_mpq_t(), kRnd);
}

Real::Real(const Real& other) : Real(mpfr_get_prec(other.value_), 0) {
  mpfr_set(value_, other.value_, kRnd);
}

// A moved-from value keeps a null limb pointer and is only destroyed or reassigned.
Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
  } else {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
  }
  mpfr_set(value_, other.value_, kRnd);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

Real Real::zero(long prec) {
  Real r(checked(prec), 0);
  mpfr_set_zero(r.value_, 1);
  return r;
}

Real Real::parse(std::string_view text, long prec) {
  std::string s(text);
  // Trim whitespace.
  auto b = s.find_first_not_of(" \t\n\r");
  auto e = s.find_last_not_of(" \t\n\r");
  if (b == std::string::npos) throw std::invalid_argument("empty number");
  s = s.substr(b, e - b + 1);
  Real r(pick(prec), 0);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRnd);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  if (!r.is_finite()) throw std::invalid_argument("non-finite number: '" + s + "'");
  return r;
}

long Real::precision() const { return mpfr_get_prec(value_); }

Real Real::rounded(long prec) const {
  Real r(checked(prec), 0);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

double Real::to_double() const { return mpfr_get_d(value_, kRnd); }

long Real::to_long() const { return mpfr_get_si(value_, kRnd); }

mpz_class Real::to_integer() const {
  mpz_class z;
  Real r = round(*this);
  mpfr_get_z(z.get_mpz_t(), r.value_, kRnd);
  return z;
}

std::string Real::str(int digits) const {
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::size_t n = digits > 0 ? static_cast<std::size_t>(digits)
                             : mpfr_get_str_ndigits(10, mpfr_get_prec(value_));
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, n, value_, kRnd);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // Drop trailing zeros of the mantissa.
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

long Real::exponent() const {
  if (is_zero()) return LONG_MIN / 4;
  return mpfr_get_exp(value_);
}

Real Real::operator-() const {
  Real r(precision(), 0);
  mpfr_neg(r.value_, value_, kRnd);
  return r;
}

Real& Real::operator+=(const Real& b) { return *this = *this + b; }
Real& Real::operator-=(const Real& b) { return *this = *this - b; }
Real& Real::operator*=(const Real& b) { return *this = *this * b; }
Real& Real::operator/=(const Real& b) { return *this = *this / b; }

namespace {

long pmin(const Real& a, const Real& b) { return std::min(a.precision(), b.precision()); }

}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r = Real::zero(pmin(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), kRnd);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = Real::zero(pmin(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), kRnd);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = Real::zero(pmin(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), kRnd);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = Real::zero(pmin(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), kRnd);
  return r;
}

Real add_si(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_add_si(r.raw(), a.raw(), b, kRnd);
  return r;
}

Real mul_si(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), b, kRnd);
  return r;
}

Real div_si(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_div_si(r.raw(), a.raw(), b, kRnd);
  return r;
}

Real si_div(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), kRnd);
  return r;
}

Real mul_d(const Real& a, double b) {
  Real r = Real::zero(a.precision());
  mpfr_mul_d(r.raw(), a.raw(), b, kRnd);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define LEVELONE_UNARY(name, fn)                \
  Real name(const Real& x) {                    \
    Real r = Real::zero(x.precision());         \
    fn(r.raw(), x.raw(), kRnd);                 \
    return r;                                   \
  }

LEVELONE_UNARY(abs, mpfr_abs)
LEVELONE_UNARY(sqrt, mpfr_sqrt)
LEVELONE_UNARY(exp, mpfr_exp)
LEVELONE_UNARY(log, mpfr_log)
LEVELONE_UNARY(sin, mpfr_sin)
LEVELONE_UNARY(cos, mpfr_cos)
LEVELONE_UNARY(gamma, mpfr_gamma)

#undef LEVELONE_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r = Real::zero(pmin(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = Real::zero(pmin(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::zero(pmin(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
  return r;
}

Real floor(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real round(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_rint(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = Real::zero(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, kRnd);
  return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real factorial(unsigned long n, long prec) {
  Real r = Real::zero(pick(prec));
  mpfr_fac_ui(r.raw(), n, kRnd);
  return r;
}

Real pi(long prec) {
  Real r = Real::zero(pick(prec));
  mpfr_const_pi(r.raw(), kRnd);
  return r;
}

Real euler_gamma(long prec) {
  Real r = Real::zero(pick(prec));
  mpfr_const_euler(r.raw(), kRnd);
  return r;
}

Real epsilon(long bits) {
  Real r = Real::zero(working_precision());
  mpfr_set_ui_2exp(r.raw(), 1, -bits, kRnd);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(20); }

}  // namespace levelone
