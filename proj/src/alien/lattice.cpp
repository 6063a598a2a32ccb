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
#include "levelone/alien/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "levelone/core/error.hpp"

namespace levelone {

namespace {

using IntVec = std::vector<mpz_class>;

mpq_class exact_value(const Real& x) {
  if (x.is_zero()) return mpq_class(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
  mpq_class q(m);
  if (e >= 0) {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return mpq_class(s);
  }
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(-e));
  q = mpq_class(m, d);
  q.canonicalize();
  return q;
}

mpz_class round_q(const mpq_class& q) {
  mpq_class h = q + mpq_class(1, 2);
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

mpq_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return mpq_class(s);
}

// Gram-Schmidt data of the rows: mu[i][j] and squared norms.
void gram_schmidt(const std::vector<IntVec>& b, std::vector<std::vector<mpq_class>>& mu, std::vector<mpq_class>& norms) {
  const std::size_t n = b.size();
  const std::size_t dim = b[0].size();
  std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(dim));
  mu.assign(n, std::vector<mpq_class>(n));
  norms.assign(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < dim; ++d) star[i][d] = b[i][d];
    for (std::size_t j = 0; j < i; ++j) {
      if (norms[j] == 0) continue;
      mpq_class s = 0;
      for (std::size_t d = 0; d < dim; ++d) s += mpq_class(b[i][d]) * star[j][d];
      mu[i][j] = s / norms[j];
      for (std::size_t d = 0; d < dim; ++d) star[i][d] -= mu[i][j] * star[j][d];
    }
    for (std::size_t d = 0; d < dim; ++d) norms[i] += star[i][d] * star[i][d];
  }
}

// LLL reduction with delta = 3/4 of linearly independent integer rows.
void lll(std::vector<IntVec>& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  std::vector<std::vector<mpq_class>> mu;
  std::vector<mpq_class> norms;
  gram_schmidt(b, mu, norms);
  const mpq_class delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      mpz_class q = round_q(mu[k][j]);
      if (q == 0) continue;
      for (std::size_t d = 0; d < b[k].size(); ++d) b[k][d] -= q * b[j][d];
      for (std::size_t i = 0; i < j; ++i) mu[k][i] -= mpq_class(q) * mu[j][i];
      mu[k][j] -= mpq_class(q);
    }
    if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt(b, mu, norms);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Every reduced row whose coefficients annihilate x to working precision.
std::vector<WeightVector> relations(const std::vector<Complex>& x) {
  const long prec = working_precision();
  const std::size_t n = x.size();
  const long scale_bits = prec / 2;
  std::vector<IntVec> rows(n, IntVec(n + 2));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][i] = 1;
    rows[i][n] = ldexp(x[i].re(), scale_bits).to_integer();
    rows[i][n + 1] = ldexp(x[i].im(), scale_bits).to_integer();
  }
  lll(rows);
  Real size = Real(1);
  for (const Complex& v : x) size = max(size, v.abs());
  std::vector<WeightVector> out;
  for (const IntVec& row : rows) {
    WeightVector r(n);
    bool nonzero = false;
    Real weight = Real(1);
    Complex residual = Complex::zero(prec);
    bool fits = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!row[i].fits_slong_p()) fits = false;
      if (!fits) break;
      r[i] = row[i].get_si();
      nonzero = nonzero || r[i] != 0;
      weight += Real(std::labs(r[i]));
      residual += x[i] * r[i];
    }
    if (!fits || !nonzero) continue;
    if (residual.abs() <= epsilon(scale_bits) * size * weight) out.push_back(std::move(r));
  }
  return out;
}

// Basis of the Z-module spanned by integer points of Z^2: a (g1, y), (0, g2) with 0 <= y < g2.
std::vector<std::pair<mpz_class, mpz_class>> hermite_basis(std::vector<std::pair<mpz_class, mpz_class>> rows) {
  std::vector<std::pair<mpz_class, mpz_class>> basis;
  // Column one by Euclid on the first coordinates.
  auto reduce_column = [](std::vector<std::pair<mpz_class, mpz_class>>& r, bool first) {
    auto key = [first](const std::pair<mpz_class, mpz_class>& p) -> const mpz_class& { return first ? p.first : p.second; };
    std::optional<std::pair<mpz_class, mpz_class>> pivot;
    std::vector<std::pair<mpz_class, mpz_class>> rest;
    for (auto& row : r) {
      if (key(row) == 0) {
        rest.push_back(row);
        continue;
      }
      if (!pivot) {
        pivot = row;
        continue;
      }
      auto a = *pivot;
      auto b = row;
      while (key(b) != 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), key(a).get_mpz_t(), key(b).get_mpz_t());
        std::pair<mpz_class, mpz_class> t{a.first - q * b.first, a.second - q * b.second};
        a = b;
        b = t;
      }
      pivot = a;
      rest.push_back(b);
    }
    r = rest;
    if (pivot && key(*pivot) < 0) pivot = std::pair<mpz_class, mpz_class>{-pivot->first, -pivot->second};
    return pivot;
  };
  auto p1 = reduce_column(rows, true);
  auto p2 = reduce_column(rows, false);
  if (p1 && p2) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), p1->second.get_mpz_t(), p2->second.get_mpz_t());
    p1->second -= q * p2->second;
  }
  if (p1) basis.push_back(*p1);
  if (p2) basis.push_back(*p2);
  return basis;
}

std::vector<Complex> distinct(const std::vector<Complex>& values) {
  std::vector<Complex> out;
  for (const Complex& v : values) {
    bool seen = false;
    for (const Complex& u : out) seen = seen || same_value(u, v);
    if (!seen) out.push_back(v);
  }
  return out;
}

}  // namespace

Complex TorusGrading::value_of(const WeightVector& m) const {
  Complex s = Complex::zero(working_precision());
  for (std::size_t r = 0; r < basis.size(); ++r)
    if (m[r] != 0) s += basis[r] * m[r];
  return s;
}

std::optional<mpq_class> rational_reconstruct(const Real& x, long bits) {
  const mpq_class exact = exact_value(x);
  const mpq_class tol = mpq_class(max(Real(1), abs(x)).to_integer() + 1) / (mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(3 * bits)));
  mpz_class bound = mpz_class(1) << static_cast<mp_bitcnt_t>(bits);
  // Convergents h/k of the continued fraction.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  mpq_class rest = exact;
  for (int iter = 0; iter < 4 * bits + 8; ++iter) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > bound) return std::nullopt;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    mpq_class approx(h1, k1);
    approx.canonicalize();
    if (abs(approx - exact) <= tol) return approx;
    rest -= mpq_class(a);
    if (rest == 0) return approx;
    rest = 1 / rest;
  }
  return std::nullopt;
}

std::optional<WeightVector> integer_relation(const std::vector<Complex>& x) {
  std::vector<WeightVector> rels = relations(x);
  if (rels.empty()) return std::nullopt;
  return rels.front();
}

WeightVector integer_coordinates(const Complex& value, const std::vector<Complex>& basis) {
  const std::size_t nu = basis.size();
  if (value.abs() <= merge_tolerance()) return WeightVector(nu, 0);
  if (nu == 0) throw ValidationError("value " + value.str(12) + " is not in the lattice of an empty basis");
  std::vector<Complex> x = basis;
  x.push_back(value);
  for (const WeightVector& r : relations(x)) {
    if (std::labs(r[nu]) != 1) continue;
    WeightVector m(nu);
    for (std::size_t i = 0; i < nu; ++i) m[i] = -r[i] * r[nu];
    return m;
  }
  throw ValidationError("value " + value.str(12) + " is not an integer combination of the lattice basis");
}

TorusGrading lattice_basis(const std::vector<Complex>& values, const std::optional<std::vector<Complex>>& user_basis) {
  TorusGrading g;
  g.values = distinct(values);
  if (user_basis) {
    g.basis = *user_basis;
    g.user_supplied = true;
    for (const Complex& b : g.basis)
      if (b.abs() <= merge_tolerance()) throw ValidationError("lattice basis contains zero");
    if (g.basis.size() > 1 && integer_relation(g.basis)) {
      throw ValidationError("lattice basis is not Z-linearly independent");
    }
    for (const Complex& v : g.values) g.weights.push_back(integer_coordinates(v, g.basis));
    return g;
  }
  const long bits = working_precision() / 4;
  std::vector<std::pair<mpq_class, mpq_class>> q;
  mpz_class den = 1;
  for (const Complex& v : g.values) {
    auto re = rational_reconstruct(v.re(), bits);
    auto im = rational_reconstruct(v.im(), bits);
    if (!re || !im) {
      throw ValidationError("no exact lattice basis: value " + v.str(12) + " is not rational-complex; supply a lattice basis");
    }
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), re->get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), im->get_den_mpz_t());
    q.emplace_back(*re, *im);
  }
  std::vector<std::pair<mpz_class, mpz_class>> rows;
  for (const auto& [re, im] : q) {
    mpq_class x = re * den, y = im * den;
    rows.emplace_back(x.get_num(), y.get_num());
  }
  auto hb = hermite_basis(rows);
  for (const auto& [x, y] : hb) g.basis.emplace_back(Real(mpq_class(x, den)), Real(mpq_class(y, den)));
  // Exact coordinates by back-substitution on the triangular basis.
  for (const auto& [x, y] : rows) {
    WeightVector m(hb.size(), 0);
    mpz_class rx = x, ry = y;
    std::size_t idx = 0;
    if (!hb.empty() && hb[0].first != 0) {
      mpz_class c = rx / hb[0].first;
      m[0] = c.get_si();
      ry -= c * hb[0].second;
      idx = 1;
    }
    if (idx < hb.size()) m[idx] = mpz_class(ry / hb[idx].second).get_si();
    g.weights.push_back(std::move(m));
  }
  return g;
}

TorusGrading lattice_basis(const LevelOneSystem& sys, const std::optional<std::vector<Complex>>& user_basis) {
  std::vector<Complex> a;
  for (const JordanBlockSpec& b : sys.blocks()) a.push_back(b.a);
  return lattice_basis(a, user_basis);
}

WeightVector weights_of(const LevelOneSystem& sys, std::size_t j, const TorusGrading& grading) {
  const Complex& a = sys.block(j).a;
  for (std::size_t i = 0; i < grading.values.size(); ++i)
    if (same_value(grading.values[i], a)) return grading.weights[i];
  return integer_coordinates(a, grading.basis);
}

}  // namespace levelone
