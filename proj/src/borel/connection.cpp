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
#include "levelone/borel/connection.hpp"

#include <omp.h>

#include <algorithm>

#include "levelone/core/error.hpp"

namespace levelone {

namespace {

struct Model {
  std::vector<Complex> classes;
  int log_bound = 0;
  std::size_t unknowns() const { return classes.size() * static_cast<std::size_t>(log_bound + 1); }
};

Model build_model(const BorelOde& ode, const Complex& omega) {
  const LevelOneSystem& sys = ode.system();
  const Complex& a0 = sys.block(0).a;
  const Complex lam0 = sys.block(0).effective_lambda();
  Model m;
  m.classes.push_back(Complex::zero(working_precision()));
  int nmax = 0;
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    const JordanBlockSpec& b = sys.block(j);
    if (!same_value(b.a - a0, omega)) continue;
    nmax = std::max(nmax, b.size);
    Complex mu = exponent_class(b.effective_lambda() - lam0).first;
    bool merged = false;
    for (const Complex& c : m.classes) {
      Complex gap = exp(Complex::i() * ldexp(pi(), 1) * (mu - c)) - Complex(1);
      if (same_value(mu, c) || gap.abs() <= merge_tolerance()) {
        merged = true;
      } else if (gap.abs() < Real(1e-6)) {
        throw NumericalError("model-order ambiguity: exponent classes " + mu.str(10) + " and " + c.str(10) +
                             " are nearly congruent mod Z");
      }
    }
    if (!merged) m.classes.push_back(mu);
  }
  m.log_bound = nmax + sys.block(0).size - 1;
  return m;
}

std::size_t class_index(const Model& m, const Complex& mu) {
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    Complex gap = exp(Complex::i() * ldexp(pi(), 1) * (mu - m.classes[i])) - Complex(1);
    if (same_value(mu, m.classes[i]) || gap.abs() <= merge_tolerance()) return i;
  }
  throw NumericalError("exponent class missing from the major model");
}

struct Ring {
  Real radius;
  std::vector<Real> base_angles;             // sheet 0, per n
  std::vector<std::vector<CMatrix>> values;  // [n][s]
};

// Samples g on the ring of the given radius, angles theta* - 2 pi (n + 1/2)/N - 2 pi s.
Ring sample_ring(const Continuation& arrival, const Complex& omega, const Real& ts, const Real& radius, int angles,
                 int sheets) {
  Continuation w = arrival;
  const Real two_pi = ldexp(pi(), 1);
  Real start = ts - pi();
  w.line_to(omega + polar(radius, start));
  Ring ring{radius, {}, std::vector<std::vector<CMatrix>>(static_cast<std::size_t>(angles))};
  Real prev = start;
  for (int s = 0; s < sheets; ++s) {
    for (int n = 0; n < angles; ++n) {
      Real alpha = ts - two_pi * (2 * n + 1) / (2 * angles) - two_pi * s;
      w.arc(omega, radius, prev, alpha);
      prev = alpha;
      if (s == 0) ring.base_angles.push_back(alpha);
      ring.values[static_cast<std::size_t>(n)].push_back(w.g_hat());
    }
  }
  return ring;
}

// Design matrix of one angle: rows are sheets, columns (class, log power).
CMatrix design(const Model& m, const Real& radius, const Real& alpha, int sheets) {
  const Real two_pi = ldexp(pi(), 1);
  const Complex two_pi_i = Complex::i() * two_pi;
  CMatrix a(static_cast<std::size_t>(sheets), m.unknowns());
  for (int s = 0; s < sheets; ++s) {
    Complex log_xi(log(radius), alpha - two_pi * s);
    Complex ell = log_xi / two_pi_i;
    for (std::size_t c = 0; c < m.classes.size(); ++c) {
      Complex base = exp(m.classes[c] * log_xi);
      for (int p = 0; p <= m.log_bound; ++p) {
        a(static_cast<std::size_t>(s), c * static_cast<std::size_t>(m.log_bound + 1) + static_cast<std::size_t>(p)) = base;
        base = base * ell;
      }
    }
  }
  return a;
}

struct RingFit {
  // laurent[u][e][q - qmin]
  std::vector<std::vector<std::vector<Complex>>> laurent;
  long qmin = -2;
  Real residual;
  Real scale;
};

RingFit fit_ring(const Model& m, const Ring& ring, std::size_t entries, int sheets) {
  const std::size_t angles = ring.base_angles.size();
  const std::size_t u_count = m.unknowns();
  RingFit fit;
  fit.residual = Real::zero(working_precision());
  fit.scale = Real::zero(working_precision());
  std::vector<CMatrix> phi;  // per angle, u x entries
  for (std::size_t n = 0; n < angles; ++n) {
    CMatrix f(static_cast<std::size_t>(sheets), entries);
    for (int s = 0; s < sheets; ++s) {
      const CMatrix& v = ring.values[n][static_cast<std::size_t>(s)];
      for (std::size_t e = 0; e < entries; ++e) f(static_cast<std::size_t>(s), e) = v.data()[e];
    }
    fit.scale = max(fit.scale, max_abs(f));
    LeastSquaresResult ls = least_squares(design(m, ring.radius, ring.base_angles[n], sheets), f);
    fit.residual = max(fit.residual, ls.relative_residual);
    phi.push_back(std::move(ls.x));
  }
  // Laurent coefficients by the trapezoid rule on the ring.
  const long qcount = static_cast<long>(angles);
  fit.laurent.assign(u_count, std::vector<std::vector<Complex>>(entries));
  for (long qi = 0; qi < qcount; ++qi) {
    const long q = fit.qmin + qi;
    std::vector<Complex> weight;
    for (std::size_t n = 0; n < angles; ++n) {
      weight.push_back(polar(pow(ring.radius, -q), -ring.base_angles[n] * q) / static_cast<long>(angles));
    }
    for (std::size_t u = 0; u < u_count; ++u) {
      for (std::size_t e = 0; e < entries; ++e) {
        Complex acc = Complex::zero(working_precision());
        for (std::size_t n = 0; n < angles; ++n) acc += phi[n](u, e) * weight[n];
        fit.laurent[u][e].push_back(std::move(acc));
      }
    }
  }
  return fit;
}

// Value of the fitted model at radius r, angle alpha (any sheet).
Complex model_value(const Model& m, const RingFit& fit, std::size_t e, const Real& r, const Real& alpha) {
  const Real two_pi = ldexp(pi(), 1);
  Complex log_xi(log(r), alpha);
  Complex ell = log_xi / (Complex::i() * two_pi);
  Complex total = Complex::zero(working_precision());
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    Complex base = exp(m.classes[c] * log_xi);
    for (int p = 0; p <= m.log_bound; ++p) {
      const std::size_t u = c * static_cast<std::size_t>(m.log_bound + 1) + static_cast<std::size_t>(p);
      const std::vector<Complex>& lc = fit.laurent[u][e];
      Complex phi = Complex::zero(working_precision());
      for (std::size_t i = 0; i < lc.size(); ++i) {
        const long q = fit.qmin + static_cast<long>(i);
        phi += lc[i] * polar(pow(r, q), alpha * q);
      }
      total += base * phi;
      base = base * ell;
    }
  }
  return total;
}

CMatrix k_block(const BorelOde& ode, const Model& m, const RingFit& fit, const Complex& omega) {
  const LevelOneSystem& sys = ode.system();
  const std::size_t cols = ode.cols();
  CMatrix k(sys.dimension(), cols);
  const Complex lam0 = sys.block(0).effective_lambda();
  for (std::size_t r = 0; r < sys.dimension(); ++r) {
    const JordanBlockSpec& b = sys.block(sys.block_of_row(r));
    if (!same_value(b.a - sys.block(0).a, omega)) continue;
    auto [mu, shift] = exponent_class(b.effective_lambda() - lam0);
    const std::size_t u = class_index(m, mu) * static_cast<std::size_t>(m.log_bound + 1);
    const long idx = shift - 1 - fit.qmin;
    if (idx < 0 || idx >= static_cast<long>(fit.laurent[u][0].size())) {
      throw NumericalError("major fit: exponent outside the sampled Laurent range");
    }
    for (std::size_t c = 0; c < cols; ++c) k(r, c) = fit.laurent[u][r * cols + c][static_cast<std::size_t>(idx)];
  }
  return k;
}

LogPolynomialGerm entry_germ(const Model& m, const RingFit& fit, std::size_t e, const Complex& omega,
                             const Real& radius, long qmax, const Real& threshold) {
  LogPolynomialGerm g(omega);
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    for (int p = 0; p <= m.log_bound; ++p) {
      const std::size_t u = c * static_cast<std::size_t>(m.log_bound + 1) + static_cast<std::size_t>(p);
      const std::vector<Complex>& lc = fit.laurent[u][e];
      // The principal major keeps no holomorphic term.
      long hi = (c == 0 && p == 0) ? -1 : qmax;
      long lo = fit.qmin;
      auto visible = [&](long q) {
        return mag(lc[static_cast<std::size_t>(q - fit.qmin)]) * pow(radius, q) > threshold;
      };
      while (lo <= hi && !visible(lo)) ++lo;
      while (hi >= lo && !visible(hi)) --hi;
      if (lo > hi) continue;
      std::vector<Complex> h;
      for (long q = lo; q <= hi; ++q) h.push_back(lc[static_cast<std::size_t>(q - fit.qmin)]);
      g.add(m.classes[c] + Complex(lo), p, TruncatedSeries(Variable::xi, std::move(h)));
    }
  }
  return g;
}

}  // namespace

PrincipalMajor extract_principal_major(const BorelOde& ode, const Complex& omega, const MajorOptions& opts) {
  const LevelOneSystem& sys = ode.system();
  const Real theta = omega.arg();
  PrincipalMajor out;
  out.omega = omega;
  out.theta_star = theta_star(theta);
  out.cols = ode.cols();
  out.clearance = default_clearance(ode.singular_points());
  const Model model = build_model(ode, omega);
  out.classes = model.classes;
  out.log_bound = model.log_bound;
  out.sheets = std::max<int>(3, static_cast<int>(model.unknowns()) + opts.extra_sheets);

  out.path = gamma_plus(ode.singular_points(), omega, theta, out.clearance, ode.seed_radius());
  Continuation walk(ode, out.path.start());
  walk.follow(out.path);

  const std::size_t entries = sys.dimension() * ode.cols();
  const Real r1 = out.clearance * opts.primary_radius;
  const Real r2 = out.clearance * opts.check_radius;
  Ring ring1 = sample_ring(walk, omega, out.theta_star, r1, opts.angles, out.sheets);
  Ring ring2 = sample_ring(walk, omega, out.theta_star, r2, opts.angles, out.sheets);
  RingFit fit1 = fit_ring(model, ring1, entries, out.sheets);
  RingFit fit2 = fit_ring(model, ring2, entries, out.sheets);
  out.fit_residual = max(fit1.residual, fit2.residual);

  out.k = k_block(ode, model, fit1, omega);
  CMatrix k2 = k_block(ode, model, fit2, omega);
  out.radius_agreement = max_abs(out.k - k2) / max(Real(1), max_abs(out.k));

  // Held-out check: the fit of the first ring predicts the samples of the second.
  Real worst = Real::zero(working_precision());
  const Real scale = max(fit2.scale, Real(1e-300));
  const Real two_pi = ldexp(pi(), 1);
  for (std::size_t n = 0; n < ring2.base_angles.size(); ++n) {
    for (int s = 0; s < out.sheets; ++s) {
      const CMatrix& v = ring2.values[n][static_cast<std::size_t>(s)];
      for (std::size_t e = 0; e < entries; ++e) {
        Complex pred = model_value(model, fit1, e, r2, ring2.base_angles[n] - two_pi * s);
        worst = max(worst, mag(pred - v.data()[e]) / scale);
      }
    }
  }
  out.holdout_residual = worst;

  const Real threshold = merge_tolerance() * max(fit1.scale, Real(1e-300));
  for (std::size_t e = 0; e < entries; ++e) {
    out.germs.push_back(entry_germ(model, fit1, e, omega, r1, opts.laurent_max, threshold));
  }

  const Real tol(opts.tolerance);
  auto check = [&](const Real& v, const char* what) {
    if (v > tol) {
      throw NumericalError(std::string("major at omega = ") + omega.str(12) + ": " + what + " " + v.str(4) +
                           " above tolerance");
    }
  };
  check(out.fit_residual, "fit residual");
  check(out.holdout_residual, "held-out residual");
  check(out.radius_agreement, "ring radius disagreement");
  return out;
}

BorelOde column_equation(const LevelOneSystem& sys, std::size_t k, int order) {
  NormalizedSystem ns = normalize_block(sys, k);
  BlockMatrixSeries series = solve_first_block(ns.system, order);
  return BorelOde(ns.system, borel_first_block(series));
}

const CMatrix* ConnectionMatrix::block(const Complex& omega) const {
  for (std::size_t i = 0; i < omegas.size(); ++i)
    if (same_value(omegas[i], omega)) return &blocks[i];
  return nullptr;
}

namespace {

std::vector<ConnectionBlock> column_blocks(const LevelOneSystem& sys, std::size_t k, const Real& theta, int order,
                                           const MajorOptions& opts) {
  std::vector<ConnectionBlock> out;
  std::vector<Complex> omegas = column_omegas_on_ray(sys, k, theta);
  if (omegas.empty()) return out;
  BorelOde ode = column_equation(sys, k, order);
  for (const Complex& w : omegas) {
    try {
      out.push_back({w, k, extract_principal_major(ode, w, opts)});
    } catch (const Error& e) {
      throw NumericalError("connection block (omega = " + w.str(12) + ", column block " + std::to_string(k + 1) +
                           "): " + e.what());
    }
  }
  return out;
}

ConnectionMatrix assemble(const LevelOneSystem& sys, const Real& theta,
                          std::vector<std::vector<ConnectionBlock>> parts) {
  const std::size_t n = sys.dimension();
  ConnectionMatrix out;
  out.theta = theta;
  out.total = CMatrix(n, n);
  for (const Complex& w : omegas_on_ray(sys, theta)) {
    out.omegas.push_back(w);
    out.blocks.emplace_back(n, n);
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    NormalizedSystem ns = normalize_block(sys, k);
    for (ConnectionBlock& cb : parts[k]) {
      std::size_t wi = 0;
      while (wi < out.omegas.size() && !same_value(out.omegas[wi], cb.omega)) ++wi;
      if (wi == out.omegas.size()) {
        out.omegas.push_back(cb.omega);
        out.blocks.emplace_back(n, n);
      }
      CMatrix& blk = out.blocks[wi];
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t orow = ns.row_map[r];
        const std::size_t j = sys.block_of_row(orow);
        // Zero pattern by construction: only rows with a_j - a_k = omega are written.
        if (!same_value(sys.block(j).a - sys.block(k).a, cb.omega)) continue;
        for (std::size_t c = 0; c < cb.major.cols; ++c) blk(orow, sys.offset(k) + c) = cb.major.k(r, c);
      }
      out.details.push_back(std::move(cb));
    }
  }
  for (const CMatrix& b : out.blocks) out.total += b;
  assert_connection_pattern(sys, out);
  return out;
}

}  // namespace

ConnectionMatrix connection_matrix_serial(const LevelOneSystem& sys, const Real& theta, int order,
                                          const MajorOptions& opts) {
  std::vector<std::vector<ConnectionBlock>> parts;
  for (std::size_t k = 0; k < sys.block_count(); ++k) parts.push_back(column_blocks(sys, k, theta, order, opts));
  return assemble(sys, theta, std::move(parts));
}

ConnectionMatrix connection_matrix(const LevelOneSystem& sys, const Real& theta, int order, const MajorOptions& opts) {
  const long prec = working_precision();
  const int count = static_cast<int>(sys.block_count());
  std::vector<std::vector<ConnectionBlock>> parts(sys.block_count());
  std::string failure;
  bool validation = false;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    PrecisionScope scope(prec);
    try {
      parts[static_cast<std::size_t>(k)] = column_blocks(sys, static_cast<std::size_t>(k), theta, order, opts);
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
  return assemble(sys, theta, std::move(parts));
}

void assert_connection_pattern(const LevelOneSystem& sys, const ConnectionMatrix& k) {
  for (std::size_t i = 0; i < k.omegas.size(); ++i) {
    const CMatrix& b = k.blocks[i];
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(r, c).is_zero()) continue;
        const Complex d = sys.block(sys.block_of_row(r)).a - sys.block(sys.block_of_row(c)).a;
        if (!same_value(d, k.omegas[i])) {
          throw NumericalError("connection matrix violates its zero pattern at (" + std::to_string(r + 1) + "," +
                               std::to_string(c + 1) + ")");
        }
      }
  }
}

}  // namespace levelone
