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
#include "levelone/stokes/stokes.hpp"

#include <algorithm>
#include <functional>

#include "levelone/core/error.hpp"
#include "levelone/core/kappa.hpp"
#include "levelone/stokes/quadrature.hpp"

namespace levelone {

namespace {

using KappaTable = std::function<std::vector<Complex>(int pmax, const Complex& lam)>;

Complex lambda_difference(const LevelOneSystem& sys, std::size_t j, std::size_t k) {
  return sys.block(j).effective_lambda() - sys.block(k).effective_lambda();
}

bool block_is_zero(const CMatrix& m, const LevelOneSystem& sys, std::size_t j, std::size_t k) {
  for (int l = 0; l < sys.block(j).size; ++l)
    for (int r = 0; r < sys.block(k).size; ++r)
      if (!m(sys.offset(j) + static_cast<std::size_t>(l), sys.offset(k) + static_cast<std::size_t>(r)).is_zero())
        return false;
  return true;
}

CMatrix apply_map(const CMatrix& k, const LevelOneSystem& sys, const KappaTable& table) {
  assert_offdiagonal_pattern(k, sys);
  const std::size_t n = sys.dimension();
  CMatrix c(n, n);
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    for (std::size_t kb = 0; kb < sys.block_count(); ++kb) {
      if (j == kb || block_is_zero(k, sys, j, kb)) continue;
      const int nj = sys.block(j).size, nk = sys.block(kb).size;
      const std::vector<Complex> kap = table(nj + nk - 2, lambda_difference(sys, j, kb));
      const std::size_t rj = sys.offset(j), ck = sys.offset(kb);
      for (int l = 0; l < nj; ++l) {
        for (int r = 0; r < nk; ++r) {
          Complex acc = Complex::zero(working_precision());
          for (int a = l; a < nj; ++a) {
            for (int b = 0; b <= r; ++b) {
              const Complex& v = k(rj + static_cast<std::size_t>(a), ck + static_cast<std::size_t>(b));
              if (v.is_zero()) continue;
              Complex term = kap[static_cast<std::size_t>(a - l + r - b)] * v /
                             (factorial(static_cast<unsigned long>(a - l)) * factorial(static_cast<unsigned long>(r - b)));
              if ((r - b) % 2 == 1) term = -term;
              acc += term;
            }
          }
          c(rj + static_cast<std::size_t>(l), ck + static_cast<std::size_t>(r)) = acc;
        }
      }
    }
  }
  return c;
}

}  // namespace

void assert_offdiagonal_pattern(const CMatrix& m, const LevelOneSystem& sys) {
  for (std::size_t j = 0; j < sys.block_count(); ++j)
    for (std::size_t k = 0; k < sys.block_count(); ++k)
      if (same_value(sys.block(j).a, sys.block(k).a) && !block_is_zero(m, sys, j, k)) {
        throw ValidationError("matrix violates the zero pattern in block (" + std::to_string(j + 1) + "," +
                              std::to_string(k + 1) + ")");
      }
}

CMatrix connection_to_stokes(const CMatrix& k, const LevelOneSystem& sys) {
  return apply_map(k, sys, [](int pmax, const Complex& lam) { return kappa_table(pmax, lam); });
}

StokesMatrix connection_to_stokes(const ConnectionMatrix& k, const LevelOneSystem& sys) {
  StokesMatrix s;
  s.theta_star = theta_star(k.theta);
  s.c = connection_to_stokes(k.total, sys);
  s.residual = Real::zero(working_precision());
  s.off_pattern = Real::zero(working_precision());
  s.quadrature_error = Real::zero(working_precision());
  return s;
}

CMatrix stokes_to_connection(const CMatrix& c, const LevelOneSystem& sys) {
  assert_offdiagonal_pattern(c, sys);
  const std::size_t n = sys.dimension();
  CMatrix k(n, n);
  const Real tiny = epsilon(working_precision() / 2);
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    for (std::size_t kb = 0; kb < sys.block_count(); ++kb) {
      if (j == kb || block_is_zero(c, sys, j, kb)) continue;
      const int nj = sys.block(j).size, nk = sys.block(kb).size;
      const std::vector<Complex> kap = kappa_table(nj + nk - 2, lambda_difference(sys, j, kb));
      if (kap[0].abs() < tiny) throw NumericalError("stokes_to_connection: kappa_0 vanishes");
      const std::size_t rj = sys.offset(j), ck = sys.offset(kb);
      for (int l = nj - 1; l >= 0; --l) {
        for (int r = 0; r < nk; ++r) {
          Complex acc = c(rj + static_cast<std::size_t>(l), ck + static_cast<std::size_t>(r));
          for (int a = l; a < nj; ++a) {
            for (int b = 0; b <= r; ++b) {
              if (a == l && b == r) continue;
              const Complex& v = k(rj + static_cast<std::size_t>(a), ck + static_cast<std::size_t>(b));
              if (v.is_zero()) continue;
              Complex term = kap[static_cast<std::size_t>(a - l + r - b)] * v /
                             (factorial(static_cast<unsigned long>(a - l)) * factorial(static_cast<unsigned long>(r - b)));
              if ((r - b) % 2 == 1) term = -term;
              acc -= term;
            }
          }
          k(rj + static_cast<std::size_t>(l), ck + static_cast<std::size_t>(r)) = acc / kap[0];
        }
      }
    }
  }
  return k;
}

std::vector<std::pair<Complex, CMatrix>> delta_plus_split(const CMatrix& c, const LevelOneSystem& sys) {
  const std::size_t n = sys.dimension();
  std::vector<std::pair<Complex, CMatrix>> out;
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    for (std::size_t k = 0; k < sys.block_count(); ++k) {
      if (block_is_zero(c, sys, j, k)) continue;
      const Complex w = sys.block(j).a - sys.block(k).a;
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return same_value(e.first, w); });
      if (it == out.end()) {
        out.emplace_back(w, CMatrix(n, n));
        it = out.end() - 1;
      }
      for (int l = 0; l < sys.block(j).size; ++l)
        for (int r = 0; r < sys.block(k).size; ++r) {
          const std::size_t row = sys.offset(j) + static_cast<std::size_t>(l);
          const std::size_t col = sys.offset(k) + static_cast<std::size_t>(r);
          it->second(row, col) = c(row, col);
        }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (!same_value(a.first.abs(), b.first.abs())) return a.first.abs() < b.first.abs();
    return a.first.arg() < b.first.arg();
  });
  return out;
}

StokesMatrix stokes_from_jumps(const LevelOneSystem& sys, const Real& theta, int order, const JumpOptions& opts) {
  const std::size_t n = sys.dimension();
  const Real ts = theta_star(theta);
  int max_log = 0;
  for (const JordanBlockSpec& a : sys.blocks())
    for (const JordanBlockSpec& b : sys.blocks()) max_log = std::max(max_log, a.size + b.size - 2);
  if (opts.radii.size() < static_cast<std::size_t>(2 * (max_log + 1))) {
    throw ValidationError("stokes_from_jumps: too few sample points for the log degree");
  }
  std::vector<Complex> xs;
  std::vector<Complex> logs;
  for (double rho : opts.radii) {
    xs.push_back(polar(Real(rho), theta));
    logs.emplace_back(log(Real(rho)), ts);
  }
  kernels::SumTable table = opts.parallel ? kernels::laplace_sums_parallel(sys, theta, xs, order, opts.laplace)
                                          : kernels::laplace_sums_serial(sys, theta, xs, order, opts.laplace);
  std::vector<CMatrix> jumps;
  for (std::size_t q = 0; q < xs.size(); ++q) jumps.push_back(solve(table.minus[q], table.plus[q] - table.minus[q]));

  StokesMatrix out;
  out.theta_star = ts;
  out.c = CMatrix(n, n);
  out.residual = Real::zero(working_precision());
  out.off_pattern = Real::zero(working_precision());
  out.quadrature_error = table.error;
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    for (std::size_t k = 0; k < sys.block_count(); ++k) {
      const Complex w = sys.block(j).a - sys.block(k).a;
      const int nj = sys.block(j).size, nk = sys.block(k).size;
      const std::size_t rj = sys.offset(j), ck = sys.offset(k);
      const bool on_ray = w.abs() > merge_tolerance() && same_angle(w.arg(), theta);
      if (!on_ray) {
        for (const CMatrix& m : jumps)
          for (int l = 0; l < nj; ++l)
            for (int r = 0; r < nk; ++r)
              out.off_pattern = max(out.off_pattern, m(rj + static_cast<std::size_t>(l), ck + static_cast<std::size_t>(r)).abs());
        continue;
      }
      // Unknown C[a,b] at column a * nk + b; equation per (sample, l, r).
      const Complex dlam = lambda_difference(sys, j, k);
      const std::size_t unknowns = static_cast<std::size_t>(nj * nk);
      CMatrix design(xs.size() * unknowns, unknowns);
      CMatrix rhs(xs.size() * unknowns, 1);
      for (std::size_t q = 0; q < xs.size(); ++q) {
        const Complex& lx = logs[q];
        const Complex scale = exp(w / xs[q] - dlam * lx);
        for (int l = 0; l < nj; ++l) {
          for (int r = 0; r < nk; ++r) {
            const std::size_t row = q * unknowns + static_cast<std::size_t>(l * nk + r);
            rhs(row, 0) = jumps[q](rj + static_cast<std::size_t>(l), ck + static_cast<std::size_t>(r)) * scale;
            for (int a = l; a < nj; ++a)
              for (int b = 0; b <= r; ++b) {
                Complex coef = pow(lx, static_cast<long>(a - l)) * pow(-lx, static_cast<long>(r - b)) /
                               (factorial(static_cast<unsigned long>(a - l)) * factorial(static_cast<unsigned long>(r - b)));
                design(row, static_cast<std::size_t>(a * nk + b)) = coef;
              }
          }
        }
      }
      LeastSquaresResult ls = least_squares(design, rhs);
      out.residual = max(out.residual, ls.relative_residual);
      for (int a = 0; a < nj; ++a)
        for (int b = 0; b < nk; ++b)
          out.c(rj + static_cast<std::size_t>(a), ck + static_cast<std::size_t>(b)) = ls.x(static_cast<std::size_t>(a * nk + b), 0);
    }
  }
  return out;
}

namespace {

// Integral of xi^{lam-1} ln^q xi e^{-xi}, q = 0..pmax, along one ray of branch arg phi from t0 to t1.
void ray_integral(std::vector<Complex>& acc, int pmax, const Complex& lam, const Real& phi, const Real& t0,
                  const Real& t1, int sign, const GaussRule& rule) {
  const Real half = (t1 - t0) / 2;
  const Real mid = (t1 + t0) / 2;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    Real t = mid + half * rule.nodes[i];
    Complex lx(log(t), phi);
    Complex base = exp((lam - Complex(1)) * lx - Complex(t)) * (half * rule.weights[i]);
    if (sign < 0) base = -base;
    for (int q = 0; q <= pmax; ++q) {
      acc[static_cast<std::size_t>(q)] += base;
      base = base * lx;
    }
  }
}

std::vector<Complex> hankel_table(int pmax, const Complex& lam, const HankelOptions& opts) {
  const Real two_pi = ldexp(pi(), 1);
  const GaussRule& rule = gauss_legendre(40);
  std::vector<Complex> acc(static_cast<std::size_t>(pmax + 1), Complex::zero(working_precision()));
  const Real delta(opts.delta), cutoff(opts.cutoff);
  // Panel ends: doubling from delta to 1, then unit steps.
  std::vector<Real> ends{delta};
  while (ends.back() < 1) ends.push_back(min(ends.back() * 2, Real(1)));
  while (ends.back() < cutoff) ends.push_back(min(ends.back() + 1, cutoff));
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    // In along arg -2 pi, out along arg 0.
    ray_integral(acc, pmax, lam, -two_pi, ends[i], ends[i + 1], -1, rule);
    ray_integral(acc, pmax, lam, Real::zero(working_precision()), ends[i], ends[i + 1], 1, rule);
  }
  // Circle of radius delta counterclockwise from arg -2 pi to 0, in four panels.
  for (int s = 0; s < 4; ++s) {
    const Real a0 = -two_pi + two_pi * s / 4;
    const Real half = two_pi / 8;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      Real phi = a0 + half + half * rule.nodes[i];
      Complex lx(log(delta), phi);
      Complex xi = polar(delta, phi);
      // d xi = i xi d phi
      Complex base = exp((lam - Complex(1)) * lx - xi) * xi * Complex::i() * (half * rule.weights[i]);
      for (int q = 0; q <= pmax; ++q) {
        acc[static_cast<std::size_t>(q)] += base;
        base = base * lx;
      }
    }
  }
  return acc;
}

}  // namespace

Complex hankel_kappa(int p, const Complex& lam, const HankelOptions& opts) {
  return hankel_table(p, lam, opts)[static_cast<std::size_t>(p)];
}

CMatrix hankel_connection_to_stokes(const CMatrix& k, const LevelOneSystem& sys, const HankelOptions& opts) {
  return apply_map(k, sys, [&](int pmax, const Complex& lam) { return hankel_table(pmax, lam, opts); });
}

}  // namespace levelone
