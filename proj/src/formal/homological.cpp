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

#include "levelone/formal/homological.hpp"

#include <omp.h>

#include "levelone/core/error.hpp"

namespace levelone {

TruncatedSeries BlockMatrixSeries::entry(std::size_t i, std::size_t j, Variable var) const {
  std::vector<Complex> c;
  for (const CMatrix& m : coeffs) c.push_back(m(i, j));
  return {var, std::move(c)};
}

TruncatedSeries BorelSeries::entry(std::size_t i, std::size_t j) const {
  std::vector<Complex> c;
  for (const CMatrix& m : coeffs) c.push_back(m(i, j));
  return {Variable::xi, std::move(c)};
}

namespace {

// (Lambda F)[r][c] with Lambda = (+)(lam_j I + J_{n_j}).
Complex lambda_times(const LevelOneSystem& sys, const CMatrix& f, std::size_t r, std::size_t c) {
  std::size_t j = sys.block_of_row(r);
  Complex v = sys.block(j).effective_lambda() * f(r, c);
  if (r + 1 < sys.dimension() && sys.block_of_row(r + 1) == j) v += f(r + 1, c);
  return v;
}

// (F J)[r][c] for the column block structure of the first cols columns.
Complex times_jordan(const LevelOneSystem& sys, const CMatrix& f, std::size_t r, std::size_t c) {
  if (c == 0 || sys.block_of_row(c) != sys.block_of_row(c - 1)) return Complex::zero(working_precision());
  return f(r, c - 1);
}

// (F Lambda_cols)[r][c]
Complex times_lambda(const LevelOneSystem& sys, const CMatrix& f, std::size_t r, std::size_t c) {
  return f(r, c) * sys.block(sys.block_of_row(c)).effective_lambda() + times_jordan(sys, f, r, c);
}

// sum_{i=imin}^{m} B_i F_{m-i}, row r, column c.
Complex b_convolution(const LevelOneSystem& sys, const std::vector<CMatrix>& f, std::size_t m, std::size_t r,
                      std::size_t c, std::size_t imin = 1) {
  Complex acc = Complex::zero(working_precision());
  const std::size_t n = sys.dimension();
  for (std::size_t i = imin; i <= m && i <= sys.b_order(); ++i) {
    const CMatrix& b = sys.b_coeffs()[i - 1];
    const CMatrix& g = f[m - i];
    for (std::size_t l = 0; l < n; ++l) {
      if (b(r, l).is_zero() || g(l, c).is_zero()) continue;
      acc += b(r, l) * g(l, c);
    }
  }
  return acc;
}

}  // namespace

BlockMatrixSeries solve_first_block(const LevelOneSystem& sys, int order, EliminationOrder elim) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  const std::size_t n = sys.dimension();
  const std::size_t cols = static_cast<std::size_t>(sys.block(0).size);
  const Complex& a0 = sys.block(0).a;
  const Real tiny = merge_tolerance();
  std::vector<CMatrix> f;
  f.push_back(CMatrix::truncated_identity(n, cols));
  std::vector<bool> same(sys.block_count());
  for (std::size_t j = 0; j < sys.block_count(); ++j) same[j] = same_value(sys.block(j).a, a0);

  auto solve_same_a = [&](std::size_t m) {
    // (m - lam_j) X - J X + X J = R, unknowns on rows with a_j = a_0.
    CMatrix& x = f[m];
    for (std::size_t j = 0; j < sys.block_count(); ++j) {
      if (!same[j]) continue;
      const std::size_t r0 = sys.offset(j);
      const std::size_t nj = static_cast<std::size_t>(sys.block(j).size);
      Complex diag = Complex(static_cast<long>(m)) - (sys.block(j).effective_lambda() - sys.block(0).effective_lambda());
      if (abs(diag) < tiny) {
        throw NumericalError("homological system: singular step at block (" + std::to_string(j + 1) +
                             ",1), order " + std::to_string(m));
      }
      auto entry = [&](std::size_t l, std::size_t c) {
        const std::size_t r = r0 + l;
        Complex rhs = b_convolution(sys, f, m + 1, r, c, 1);
        if (l + 1 < nj) rhs += x(r + 1, c);
        rhs -= times_jordan(sys, x, r, c);
        x(r, c) = rhs / diag;
      };
      if (elim == EliminationOrder::rows_outer) {
        for (std::size_t l = nj; l-- > 0;)
          for (std::size_t c = 0; c < cols; ++c) entry(l, c);
      } else {
        for (std::size_t c = 0; c < cols; ++c)
          for (std::size_t l = nj; l-- > 0;) entry(l, c);
      }
    }
  };

  for (std::size_t m = 1; m <= static_cast<std::size_t>(order); ++m) {
    f.emplace_back(n, cols);
    const CMatrix& prev = f[m - 1];
    // Rows with a_j != a_0 first: (a_0 - a_j) F_m = [B F]_m - (m-1) F_{m-1} + Lambda F_{m-1} - F_{m-1} Lambda_0.
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t j = sys.block_of_row(r);
      if (same[j]) continue;
      Complex d = a0 - sys.block(j).a;
      for (std::size_t c = 0; c < cols; ++c) {
        Complex rhs = b_convolution(sys, f, m, r, c);
        rhs -= prev(r, c) * static_cast<long>(m - 1);
        rhs += lambda_times(sys, prev, r, c);
        rhs -= times_lambda(sys, prev, r, c);
        f[m](r, c) = rhs / d;
      }
    }
    // The x^{m+1} equation fixes the rows with a_j = a_0; B_1 does not couple them.
    solve_same_a(m);
  }
  return {std::move(f)};
}

namespace {

BlockMatrixSeries assemble(const LevelOneSystem& sys, const std::vector<BlockMatrixSeries>& parts) {
  const std::size_t n = sys.dimension();
  BlockMatrixSeries out;
  const std::size_t order = parts.front().order();
  out.coeffs.assign(order + 1, CMatrix(n, n));
  for (std::size_t k = 0; k < sys.block_count(); ++k) {
    NormalizedSystem ns = normalize_block(sys, k);
    for (std::size_t m = 0; m <= order; ++m)
      for (std::size_t r = 0; r < n; ++r)
        for (int c = 0; c < sys.block(k).size; ++c)
          out.coeffs[m](ns.row_map[r], sys.offset(k) + c) = parts[k].coeffs[m](r, c);
  }
  return out;
}

BlockMatrixSeries column_study(const LevelOneSystem& sys, std::size_t k, int order, EliminationOrder elim) {
  return solve_first_block(normalize_block(sys, k).system, order, elim);
}

}  // namespace

BlockMatrixSeries solve_homological_serial(const LevelOneSystem& sys, int order, EliminationOrder elim) {
  std::vector<BlockMatrixSeries> parts;
  for (std::size_t k = 0; k < sys.block_count(); ++k) parts.push_back(column_study(sys, k, order, elim));
  return assemble(sys, parts);
}

BlockMatrixSeries solve_homological(const LevelOneSystem& sys, int order, Columns cols, EliminationOrder elim) {
  if (cols == Columns::first_block) return solve_first_block(sys, order, elim);
  const long prec = working_precision();
  const int count = static_cast<int>(sys.block_count());
  std::vector<BlockMatrixSeries> parts(sys.block_count());
  std::string failure;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    PrecisionScope scope(prec);
    try {
      parts[k] = column_study(sys, static_cast<std::size_t>(k), order, elim);
    } catch (const std::exception& e) {
#pragma omp critical
      failure = e.what();
    }
  }
  if (!failure.empty()) throw NumericalError(failure);
  return assemble(sys, parts);
}

Real homological_residual(const LevelOneSystem& sys, const BlockMatrixSeries& f) {
  const std::size_t n = sys.dimension();
  const std::size_t cols = f.cols();
  Real worst = Real::zero(working_precision());
  for (std::size_t m = 1; m <= f.order(); ++m) {
    const CMatrix& cur = f.coeffs[m];
    const CMatrix& prev = f.coeffs[m - 1];
    Real scale = max(Real(1), max(max_abs(cur), max_abs(prev) * static_cast<long>(m)));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        // (m-1) F_{m-1} - D F_m + F_m D - Lambda F_{m-1} + F_{m-1} Lambda - sum B_i F_{m-i}
        Complex res = prev(r, c) * static_cast<long>(m - 1);
        res -= (sys.block(sys.block_of_row(r)).a - sys.block(sys.block_of_row(c)).a) * cur(r, c);
        res -= lambda_times(sys, prev, r, c);
        res += times_lambda(sys, prev, r, c);
        res -= b_convolution(sys, f.coeffs, m, r, c);
        Real e = mag(res) / scale;
        if (e > worst) worst = e;
      }
    }
  }
  return worst;
}

BorelSeries borel_first_block(const BlockMatrixSeries& series) {
  const std::size_t rows = series.rows(), cols = series.cols();
  BorelSeries out;
  out.delta = series.coeffs[0];
  if (!(out.delta == CMatrix::truncated_identity(rows, cols))) {
    throw ValidationError("borel_first_block: coefficient 0 is not the truncated identity");
  }
  Real fact(1);
  for (std::size_t m = 1; m <= series.order(); ++m) {
    if (m > 1) fact = fact * static_cast<long>(m - 1);
    CMatrix c(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < cols; ++k) c(r, k) = series.coeffs[m](r, k) / fact;
    out.coeffs.push_back(std::move(c));
  }
  if (out.coeffs.empty()) out.coeffs.emplace_back(rows, cols);
  return out;
}

}  // namespace levelone
