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

#include "levelone/core/series.hpp"

namespace levelone {

/// h(xi) xi^{lambda + shift - 1} (ln xi / 2 pi i)^p, with Re lambda in [0, 1).
struct GermTerm {
  Complex lambda;
  int p = 0;
  long shift = 0;
  TruncatedSeries h{Variable::xi, std::size_t{0}};
};

/// Finite sum of log-power terms around a center omega; xi is the local variable xi - omega.
class LogPolynomialGerm {
 public:
  LogPolynomialGerm() = default;
  explicit LogPolynomialGerm(Complex center) : center_(std::move(center)) {}

  const Complex& center() const { return center_; }
  const std::vector<GermTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Adds h(xi) xi^e (ln xi / 2 pi i)^p for any complex e; merges terms of equal class and p.
  void add(const Complex& exponent, int p, const TruncatedSeries& h);
  void add_term(GermTerm t);

  // Value at center + r e^{i arg}, with ln xi = ln r + i arg.
  Complex evaluate(const Real& r, const Real& arg) const;
  // Largest log power, -1 when empty.
  int log_degree() const;
  // No pole beyond the simple one once the given integer offset is allowed.
  bool is_simple_moderate(long min_shift = 0) const;
  // Drops terms whose series is zero to the tolerance.
  void prune(const Real& tol);

 private:
  Complex center_;
  std::vector<GermTerm> terms_;
};

// var f(xi) = f(xi) - f(xi e^{-2 pi i}), in closed form.
LogPolynomialGerm variation(const LogPolynomialGerm& g);
LogPolynomialGerm variation(const LogPolynomialGerm& g, int times);
LogPolynomialGerm operator*(const LogPolynomialGerm& a, const LogPolynomialGerm& b);
LogPolynomialGerm operator+(const LogPolynomialGerm& a, const LogPolynomialGerm& b);
LogPolynomialGerm operator-(const LogPolynomialGerm& a, const LogPolynomialGerm& b);

/// A germ known only through its values: f(r, arg) on every sheet.
using GermAccessor = std::function<Complex(const Real& r, const Real& arg)>;

// Pointwise loop difference f(r, arg) - f(r, arg - 2 pi).
GermAccessor variation(GermAccessor g);

// Splits a complex exponent into its class in Re [0, 1) and the integer part.
std::pair<Complex, long> exponent_class(const Complex& e);

}  // namespace levelone
