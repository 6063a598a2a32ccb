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
#include "levelone/stokes/laplace.hpp"

#include <omp.h>

#include <cmath>

#include "levelone/borel/connection.hpp"
#include "levelone/core/error.hpp"

namespace levelone {

namespace {

constexpr double kExpansionMargin = 1.25;

// J_k = int_0^1 tau^k e^{-beta tau} d tau for k < count, by backward recurrence from a series at the top.
std::vector<Complex> exp_moments(const Complex& beta, std::size_t count) {
  const long prec = working_precision();
  const Complex eb = exp(-beta);
  const std::size_t top = count - 1;
  Complex term(Real(1) / static_cast<long>(top + 1));
  Complex sum = term;
  const Real tol = epsilon(prec + 8);
  const double bmag = beta.abs().to_double();
  for (std::size_t j = 0;; ++j) {
    term = term * beta / static_cast<long>(top + j + 2);
    sum += term;
    if (static_cast<double>(top + j) > bmag && term.abs() <= tol * sum.abs()) break;
  }
  std::vector<Complex> out(count);
  out[top] = sum * eb;
  for (std::size_t k = top; k > 0; --k) out[k - 1] = (beta * out[k] + eb) / static_cast<long>(k);
  return out;
}

struct Accumulator {
  const std::vector<Complex>& xs;
  std::vector<CMatrix> sums;
  std::vector<Real> errors;

  Accumulator(const std::vector<Complex>& x, std::size_t rows, std::size_t cols) : xs(x) {
    for (std::size_t q = 0; q < xs.size(); ++q) {
      sums.emplace_back(rows, cols);
      errors.push_back(Real::zero(working_precision()));
    }
  }

  // Integral of sum_k g[k] t^k e^{-(a + t)/x} for t from 0 to h, exact up to the truncation of g.
  void segment(const Complex& a, const Complex& h, const std::vector<CMatrix>& g, const Real& truncation) {
    const long prec = working_precision();
    std::vector<CMatrix> scaled_g;
    Complex hp = h;
    Real majorant = Real::zero(prec);
    for (const CMatrix& gk : g) {
      majorant += max_abs(gk) * hp.abs();
      scaled_g.push_back(scaled(gk, hp));
      hp = hp * h;
    }
    for (std::size_t q = 0; q < xs.size(); ++q) {
      const Complex beta = h / xs[q];
      std::vector<Complex> j = exp_moments(beta, g.size());
      CMatrix& out = sums[q];
      const Complex ea = exp(-(a / xs[q]));
      CMatrix part(out.rows(), out.cols());
      for (std::size_t k = 0; k < g.size(); ++k)
        for (std::size_t r = 0; r < out.rows(); ++r)
          for (std::size_t c = 0; c < out.cols(); ++c)
            if (!scaled_g[k](r, c).is_zero()) part(r, c) += scaled_g[k](r, c) * j[k];
      for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) += part(r, c) * ea;
      // Truncation of g plus rounding amplified by the backward recurrence.
      const Real peak = ea.abs() * max(Real(1), exp(-beta.re()));
      const Real rounding = majorant * epsilon(prec - 16) * exp(beta.abs());
      errors[q] += peak * (truncation * h.abs() + rounding);
    }
  }
};

}  // namespace

std::vector<LateralSumSample> lateral_sums(const BorelOde& ode, const Real& theta, Side side,
                                           const std::vector<Complex>& xs, const LaplaceOptions& opts) {
  if (xs.empty()) return {};
  const long prec = working_precision();
  const Complex dir = expi(theta);
  Real kappa_min;
  Real x_min;
  for (std::size_t q = 0; q < xs.size(); ++q) {
    Real kq = (dir / xs[q]).re();
    if (kq.sign() <= 0) throw ValidationError("lateral_sum: x = " + xs[q].str(10) + " is outside the half plane");
    if (q == 0 || kq < kappa_min) kappa_min = kq;
    if (q == 0 || xs[q].abs() < x_min) x_min = xs[q].abs();
  }
  const std::vector<Complex>& singular = ode.singular_points();
  const Real nu = default_clearance(singular);
  Real length = Real(static_cast<double>(prec + 20) * std::log(2.0)) / kappa_min;
  for (const Complex& p : singular) length = max(length, p.abs() + nu * 4);
  const Real start = min(ode.seed_radius(), nu / 2);
  PathSpec path = lateral_path(singular, theta, nu, start, length, side);

  Accumulator acc(xs, ode.rows(), ode.cols());
  // Piece [0, start] from the formal series, whose remainder is below the seed tolerance.
  acc.segment(Complex::zero(prec), path.start(), ode.seed().coeffs, epsilon(prec + 8));
  Continuation walk(ode, path.start());
  walk.set_max_step(x_min * opts.panel_factor);
  walk.set_expansion_margin(kExpansionMargin);
  walk.follow(path, [&](const TaylorDisc& disc, const Complex& to) {
    std::vector<CMatrix> g;
    Real size = Real::zero(prec);
    for (std::size_t k = 1; k < disc.coeffs.size(); ++k) {
      g.push_back(scaled(disc.coeffs[k][0], Complex(static_cast<long>(k))));
      size = max(size, max_abs(g.back()) * pow(disc.step, static_cast<long>(k - 1)));
    }
    acc.segment(disc.center, to - disc.center, g, size * epsilon(prec + 8));
  });
  // Tail beyond the truncation point.
  const Real g_end = max_abs(walk.g_hat());
  std::vector<LateralSumSample> out;
  const CMatrix e = CMatrix::truncated_identity(ode.rows(), ode.cols());
  for (std::size_t q = 0; q < xs.size(); ++q) {
    Real kq = (dir / xs[q]).re();
    Real tail = g_end * exp(-(length * kq)) / kq;
    out.push_back({xs[q], side, e + acc.sums[q], acc.errors[q] + tail});
  }
  return out;
}

LateralSumSample lateral_sum(const LevelOneSystem& sys, std::size_t k, const Real& theta, Side side, const Complex& x,
                             int order, const LaplaceOptions& opts) {
  BorelOde ode = column_equation(sys, k, order);
  return lateral_sums(ode, theta, side, {x}, opts).front();
}

namespace kernels {

namespace {

struct TaskResult {
  std::vector<LateralSumSample> samples;
};

TaskResult run_task(const LevelOneSystem& sys, std::size_t k, Side side, const Real& theta,
                    const std::vector<Complex>& xs, int order, const LaplaceOptions& opts) {
  BorelOde ode = column_equation(sys, k, order);
  return {lateral_sums(ode, theta, side, xs, opts)};
}

SumTable assemble(const LevelOneSystem& sys, const std::vector<Complex>& xs, const std::vector<TaskResult>& results) {
  const std::size_t n = sys.dimension();
  SumTable t;
  t.plus.assign(xs.size(), CMatrix(n, n));
  t.minus.assign(xs.size(), CMatrix(n, n));
  t.error = Real::zero(working_precision());
  for (std::size_t k = 0; k < sys.block_count(); ++k) {
    NormalizedSystem ns = normalize_block(sys, k);
    for (int s = 0; s < 2; ++s) {
      const TaskResult& res = results[2 * k + static_cast<std::size_t>(s)];
      std::vector<CMatrix>& dest = s == 0 ? t.plus : t.minus;
      for (std::size_t q = 0; q < xs.size(); ++q) {
        const LateralSumSample& smp = res.samples[q];
        t.error = max(t.error, smp.error_estimate);
        for (std::size_t r = 0; r < n; ++r)
          for (int c = 0; c < sys.block(k).size; ++c)
            dest[q](ns.row_map[r], sys.offset(k) + static_cast<std::size_t>(c)) = smp.value(r, static_cast<std::size_t>(c));
      }
    }
  }
  return t;
}

}  // namespace

SumTable laplace_sums_serial(const LevelOneSystem& sys, const Real& theta, const std::vector<Complex>& xs, int order,
                             const LaplaceOptions& opts) {
  std::vector<TaskResult> results;
  for (std::size_t k = 0; k < sys.block_count(); ++k)
    for (Side side : {Side::right, Side::left}) results.push_back(run_task(sys, k, side, theta, xs, order, opts));
  return assemble(sys, xs, results);
}

SumTable laplace_sums_parallel(const LevelOneSystem& sys, const Real& theta, const std::vector<Complex>& xs,
                               int order, const LaplaceOptions& opts) {
  const long prec = working_precision();
  const int count = static_cast<int>(2 * sys.block_count());
  std::vector<TaskResult> results(static_cast<std::size_t>(count));
  std::string failure;
  bool validation = false;
#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < count; ++task) {
    PrecisionScope scope(prec);
    const std::size_t k = static_cast<std::size_t>(task / 2);
    const Side side = task % 2 == 0 ? Side::right : Side::left;
    try {
      results[static_cast<std::size_t>(task)] = run_task(sys, k, side, theta, xs, order, opts);
    } catch (const Error& e) {
#pragma omp critical
      {
        failure = e.what();
        validation = e.kind() == ErrorKind::validation;
      }
    }
  }
  if (!failure.empty()) {
    if (validation) throw ValidationError(failure);
    throw NumericalError(failure);
  }
  return assemble(sys, xs, results);
}

}  // namespace kernels

}  // namespace levelone
