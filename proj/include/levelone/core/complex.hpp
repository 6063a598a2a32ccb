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

#include <concepts>
#include <string>
#include <utility>

#include "levelone/core/real.hpp"

namespace levelone {

/// Arbitrary precision complex number; precision is the smaller of its parts.
class Complex {
 public:
  Complex() = default;
  Complex(const Real& re) : re_(re), im_(Real::zero(re.precision())) {}
  Complex(Real&& re) : re_(std::move(re)), im_(Real::zero(re_.precision())) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(int v) : re_(v) {}
  Complex(long v) : re_(v) {}
  Complex(double v) : re_(v) {}

  static Complex zero(long prec) { return {Real::zero(prec), Real::zero(prec)}; }
  static Complex i(long prec = 0);
  static Complex parse(std::string_view re, std::string_view im, long prec = 0);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  long precision() const;
  Complex rounded(long prec) const { return {re_.rounded(prec), im_.rounded(prec)}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex conj() const { return {re_, -im_}; }
  // |z|^2
  Real norm() const;
  Real abs() const { return hypot(re_, im_); }
  // Principal argument in (-pi, pi].
  Real arg() const { return atan2(im_, re_); }

  Complex operator-() const { return {-re_, -im_}; }
  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);
  Complex& operator*=(const Complex& b);
  Complex& operator/=(const Complex& b);

  std::string str(int digits = 0) const;

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

template <std::integral I>
Complex operator*(const Complex& a, I b) { return {a.re() * b, a.im() * b}; }
template <std::integral I>
Complex operator*(I a, const Complex& b) { return {b.re() * a, b.im() * a}; }
template <std::integral I>
Complex operator/(const Complex& a, I b) { return {a.re() / b, a.im() / b}; }
template <std::integral I>
Complex operator+(const Complex& a, I b) { return {a.re() + b, a.im()}; }
template <std::integral I>
Complex operator-(const Complex& a, I b) { return {a.re() - b, a.im()}; }
template <std::integral I>
Complex operator-(I a, const Complex& b) { return {a - b.re(), -b.im()}; }
template <std::floating_point F>
Complex operator*(const Complex& a, F b) { return {a.re() * b, a.im() * b}; }
template <std::floating_point F>
Complex operator*(F a, const Complex& b) { return {b.re() * a, b.im() * a}; }

bool operator==(const Complex& a, const Complex& b);

Complex exp(const Complex& z);
// Principal branch.
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
// exp(w log z) with the principal logarithm.
Complex pow(const Complex& z, const Complex& w);
// e^{i t}
Complex expi(const Real& t);
Complex polar(const Real& r, const Real& t);
Real abs(const Complex& z);
// max(|re|, |im|), a cheap norm for tolerances.
Real mag(const Complex& z);
// exp((ln r + i t) * w), power with an explicit argument t of the base.
Complex pow_arg(const Real& r, const Real& t, const Complex& w);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace levelone
