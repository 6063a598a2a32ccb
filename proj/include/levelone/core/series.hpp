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

#include <cstddef>
#include <string>
#include <vector>

#include "levelone/core/complex.hpp"

namespace levelone {

enum class Variable { x, xi };

std::string to_string(Variable v);

/// Power series truncated at order N (coefficients 0..N).
class TruncatedSeries {
 public:
  TruncatedSeries(Variable var, std::size_t order);
  TruncatedSeries(Variable var, std::vector<Complex> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  Variable variable() const { return var_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t m) const { return coeffs_[m]; }
  Complex& operator[](std::size_t m) { return coeffs_[m]; }

  Complex evaluate(const Complex& z) const;
  TruncatedSeries truncated(std::size_t order) const;
  TruncatedSeries derivative() const;
  bool is_zero() const;

 private:
  Variable var_;
  std::vector<Complex> coeffs_;
};

enum class SeriesOp { add, mul };

// Coefficientwise sum or truncated Cauchy product; the result has the smaller order.
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const Complex& s);

// x^m -> xi^{m-1}/Gamma(m). Requires a zero constant term; the result has order N-1.
TruncatedSeries borel_coeffs(const TruncatedSeries& s);

}  // namespace levelone
