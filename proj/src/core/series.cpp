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

#include "levelone/core/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "levelone/core/error.hpp"

namespace levelone {

std::string to_string(Variable v) { return v == Variable::x ? "x" : "xi"; }

TruncatedSeries::TruncatedSeries(Variable var, std::size_t order) : var_(var), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(Variable var, std::vector<Complex> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Complex TruncatedSeries::evaluate(const Complex& z) const {
  Complex acc = coeffs_.back();
  for (std::size_t m = coeffs_.size() - 1; m-- > 0;) acc = acc * z + coeffs_[m];
  return acc;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
  return {var_, std::move(c)};
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return {var_, 0};
  std::vector<Complex> c(order());
  for (std::size_t m = 1; m <= order(); ++m) c[m - 1] = coeffs_[m] * static_cast<long>(m);
  return {var_, std::move(c)};
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) { return c.is_zero(); });
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  if (a.variable() != b.variable()) {
    throw ValidationError("series variable mismatch: " + to_string(a.variable()) + " vs " +
                          to_string(b.variable()));
  }
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(a.variable(), n);
  if (op == SeriesOp::add) {
    for (std::size_t m = 0; m <= n; ++m) r[m] = a[m] + b[m];
    return r;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_arith(a, b, SeriesOp::add);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_arith(a, b, SeriesOp::mul);
}

TruncatedSeries operator*(const TruncatedSeries& a, const Complex& s) {
  std::vector<Complex> c(a.coeffs());
  for (Complex& v : c) v = v * s;
  return {a.variable(), std::move(c)};
}

TruncatedSeries borel_coeffs(const TruncatedSeries& s) {
  if (s.variable() != Variable::x) throw ValidationError("borel_coeffs expects a series in x");
  if (!s[0].is_zero()) throw ValidationError("borel_coeffs: nonzero constant term");
  if (s.order() == 0) return {Variable::xi, 0};
  std::vector<Complex> c(s.order());
  Real fact(1);
  for (std::size_t m = 1; m <= s.order(); ++m) {
    if (m > 1) fact = fact * static_cast<long>(m - 1);
    c[m - 1] = s[m] / fact;
  }
  return {Variable::xi, std::move(c)};
}

}  // namespace levelone
