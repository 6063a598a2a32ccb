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

#include <optional>
#include <string>

#include "levelone/core/error.hpp"
#include "levelone/core/gaussian_rational.hpp"
#include "levelone/core/linalg.hpp"

namespace levelone {

/// Square matrix N with N^index = 0, certified by explicit powering.
template <class T>
class NilpotentMatrix {
 public:
  // Throws NumericalError when no power up to n vanishes.
  static NilpotentMatrix certify(Matrix<T> m);

  const Matrix<T>& matrix() const { return m_; }
  int index() const { return index_; }

 private:
  NilpotentMatrix(Matrix<T> m, int index) : m_(std::move(m)), index_(index) {}
  Matrix<T> m_;
  int index_;
};

namespace detail {

inline bool negligible(const Matrix<GaussianRational>& p, const Matrix<GaussianRational>&) { return p.is_zero(); }

// Entrywise max below 2^{-prec/2} relative to the input scale.
inline bool negligible(const CMatrix& p, const CMatrix& base) {
  Real scale = max(Real(1), max_abs(base));
  long prec = working_precision();
  return max_abs(p) <= epsilon(prec / 2) * pow(scale, static_cast<long>(base.rows()));
}

}  // namespace detail

template <class T>
NilpotentMatrix<T> NilpotentMatrix<T>::certify(Matrix<T> m) {
  if (m.rows() != m.cols()) throw ValidationError("nilpotent matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n == 0 || m.is_zero()) return {std::move(m), n == 0 ? 0 : 1};
  Matrix<T> p = m;
  for (int k = 1; k <= n; ++k) {
    if (detail::negligible(p, m)) return {std::move(m), k};
    p = p * m;
  }
  throw NumericalError("matrix is not nilpotent to tolerance");
}

// log(I + N) for nilpotent N = M - I, as a finite series.
template <class T>
Matrix<T> nilpotent_log(const Matrix<T>& m) {
  Matrix<T> nmat = m - Matrix<T>::identity(m.rows());
  auto cert = NilpotentMatrix<T>::certify(nmat);
  Matrix<T> result(m.rows(), m.cols());
  Matrix<T> power = cert.matrix();
  for (int k = 1; k < cert.index(); ++k) {
    Matrix<T> term = scaled(power, T(1) / T(static_cast<long>(k)));
    if (k % 2 == 1) result += term; else result -= term;
    power = power * cert.matrix();
  }
  return result;
}

// exp(N) = I + N + N^2/2 + ... for nilpotent N.
template <class T>
Matrix<T> nilpotent_exp(const Matrix<T>& n) {
  auto cert = NilpotentMatrix<T>::certify(n);
  Matrix<T> result = Matrix<T>::identity(n.rows());
  Matrix<T> term = Matrix<T>::identity(n.rows());
  for (int k = 1; k < cert.index(); ++k) {
    term = scaled(term * cert.matrix(), T(1) / T(static_cast<long>(k)));
    result += term;
  }
  return result;
}

}  // namespace levelone
