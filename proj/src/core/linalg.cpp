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

#include "levelone/core/linalg.hpp"

#include <utility>

#include "levelone/core/error.hpp"

namespace levelone {

Real max_abs(const CMatrix& m) {
  Real r = Real::zero(working_precision());
  for (const Complex& v : m.data()) {
    Real a = mag(v);
    if (a > r) r = a;
  }
  return r;
}

CMatrix conj_transpose(const CMatrix& m) {
  CMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
  return t;
}

CMatrix rounded(const CMatrix& m, long prec) {
  CMatrix r(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.data().size(); ++k) r.data()[k] = m.data()[k].rounded(prec);
  return r;
}

CMatrix solve(const CMatrix& a_in, const CMatrix& b_in) {
  const std::size_t n = a_in.rows();
  if (a_in.cols() != n || b_in.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  CMatrix a = a_in;
  CMatrix b = b_in;
  const std::size_t m = b.cols();
  Real scale = max_abs(a);
  Real tiny = scale * epsilon(working_precision() - 8);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    Real best = mag(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      Real v = mag(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= tiny || best.is_zero()) throw NumericalError("solve: matrix is singular to working precision");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
    }
    Complex inv = Complex(Real(1)) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Complex f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
      a(i, k) = Complex::zero(working_precision());
    }
  }
  CMatrix x(n, m);
  for (std::size_t jj = 0; jj < m; ++jj) {
    for (std::size_t ii = n; ii-- > 0;) {
      Complex s = b(ii, jj);
      for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x(j, jj);
      x(ii, jj) = s / a(ii, ii);
    }
  }
  return x;
}

CMatrix inverse(const CMatrix& a) { return solve(a, CMatrix::identity(a.rows())); }

LeastSquaresResult least_squares(const CMatrix& a, const CMatrix& b) {
  CMatrix ah = conj_transpose(a);
  CMatrix x = solve(ah * a, ah * b);
  CMatrix r = a * x - b;
  Real denom = max(Real(1), max_abs(b));
  return {std::move(x), max_abs(r) / denom};
}

}  // namespace levelone
