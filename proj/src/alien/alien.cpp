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
#include "levelone/alien/alien.hpp"

#include <algorithm>
#include <sstream>

namespace levelone {

namespace {

template <class T>
bool negligible(const Matrix<T>& m, const Real&) {
  return m.is_zero();
}

template <>
bool negligible(const CMatrix& m, const Real& scale) {
  return m.is_zero() || max_abs(m) <= epsilon(working_precision() / 2) * scale;
}

Real magnitude(const CMatrix& m) { return max_abs(m); }
Real magnitude(const Matrix<GaussianRational>& m) { return max_abs(to_complex(m)); }

template <class T>
void accumulate(GradedMatrix<T>& into, const WeightVector& key, const Matrix<T>& m) {
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, m);
  } else {
    it->second += m;
  }
}

template <class T>
GradedMatrix<T> pruned(GradedMatrix<T> g) {
  for (auto it = g.begin(); it != g.end();) it = it->second.is_zero() ? g.erase(it) : std::next(it);
  return g;
}

template <class T>
GradedMatrix<T> graded_scaled(const GradedMatrix<T>& g, const T& s) {
  GradedMatrix<T> out;
  for (const auto& [k, m] : g) out.emplace(k, scaled(m, s));
  return out;
}

template <class T>
void graded_add(GradedMatrix<T>& into, const GradedMatrix<T>& g) {
  for (const auto& [k, m] : g) accumulate(into, k, m);
}

// Components keyed by Stokes value, summed per omega and sorted by modulus.
template <class T>
std::vector<AlienComponentOf<T>> label(const GradedMatrix<T>& g, const LevelOneSystem& sys, const TorusGrading& grading,
                                       const Real& theta, bool derivation) {
  const std::vector<Complex> on_ray = omegas_on_ray(sys, theta);
  Real scale = Real(1);
  for (const auto& [k, m] : g) scale = max(scale, magnitude(m));
  std::vector<AlienComponentOf<T>> out;
  for (const auto& [key, m] : g) {
    if (negligible(m, scale)) continue;
    const Complex w = grading.value_of(key);
    auto hit = std::find_if(on_ray.begin(), on_ray.end(), [&](const Complex& v) { return same_value(v, w); });
    if (hit == on_ray.end()) {
      std::string where = "component at omega = " + w.str(12) + " is not a Stokes value in the direction";
      if (derivation) throw NumericalError("alien_derivations: " + where);
      throw ValidationError("delta_plus_components: " + where);
    }
    auto same = std::find_if(out.begin(), out.end(), [&](const auto& c) { return same_value(c.omega, *hit); });
    if (same != out.end()) {
      same->matrix += m;
      continue;
    }
    out.push_back({*hit, theta_star(theta), key, m});
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    auto ia = std::find_if(on_ray.begin(), on_ray.end(), [&](const Complex& v) { return same_value(v, a.omega); });
    auto ib = std::find_if(on_ray.begin(), on_ray.end(), [&](const Complex& v) { return same_value(v, b.omega); });
    return ia < ib;
  });
  return out;
}

std::string real_text(const Real& x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.20Rg", x.raw());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// Parts below 2^{-prec/2} of the modulus are rounding noise and are left out.
std::string number_text(const Complex& z) {
  const Real chop = epsilon(working_precision() / 2) * max(Real(1), z.abs());
  const bool re = abs(z.re()) > chop, im = abs(z.im()) > chop;
  if (!im) return re ? real_text(z.re()) : "0";
  const std::string i = real_text(abs(z.im())) + "i";
  if (!re) return (z.im().sign() < 0 ? "-" : "") + i;
  return real_text(z.re()) + (z.im().sign() < 0 ? "-" : "+") + i;
}

std::string complex_text(const Complex& z) { return "(" + number_text(z) + ")"; }

std::string symbol_of(const JordanBlockSpec& b) {
  if (!b.lambda_symbol.empty()) return b.lambda_symbol;
  if (b.lam.is_zero()) return "";
  return complex_text(b.lam);
}

std::string exponent_text(const JordanBlockSpec& j, const JordanBlockSpec& k) {
  const std::string sj = symbol_of(j), sk = symbol_of(k);
  if (sj.empty() && sk.empty()) return "";
  if (sk.empty()) return sj;
  if (sj.empty()) return "-(" + sk + ")";
  if (sj == sk) return "";
  return sj + " - (" + sk + ")";
}

std::string poly_text(const std::vector<Complex>& p) {
  std::string s;
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (p[q].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += complex_text(p[q]);
    if (q == 1) s += " ln x";
    if (q > 1) s += " ln^" + std::to_string(q) + " x";
  }
  return s.empty() ? "0" : s;
}

}  // namespace

CMatrix to_complex(const Matrix<GaussianRational>& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  return out;
}

Matrix<GaussianRational> exact_matrix(const CMatrix& m, long bits) {
  Matrix<GaussianRational> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto re = rational_reconstruct(m(r, c).re(), bits);
      auto im = rational_reconstruct(m(r, c).im(), bits);
      if (!re || !im) throw ValidationError("entry " + m(r, c).str(12) + " is not rational-complex");
      out(r, c) = GaussianRational(*re, *im);
    }
  return out;
}

template <class T>
GradedMatrix<T> graded(const Matrix<T>& c, const LevelOneSystem& sys, const TorusGrading& grading) {
  std::vector<WeightVector> w;
  for (std::size_t j = 0; j < sys.block_count(); ++j) w.push_back(weights_of(sys, j, grading));
  GradedMatrix<T> out;
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t col = 0; col < c.cols(); ++col) {
      if (c(r, col).is_zero()) continue;
      const WeightVector& a = w[sys.block_of_row(r)];
      const WeightVector& b = w[sys.block_of_row(col)];
      WeightVector key(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) key[i] = a[i] - b[i];
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, Matrix<T>(c.rows(), c.cols())).first;
      it->second(r, col) = c(r, col);
    }
  return out;
}

template <class T>
GradedMatrix<T> graded_product(const GradedMatrix<T>& a, const GradedMatrix<T>& b) {
  GradedMatrix<T> out;
  for (const auto& [ka, ma] : a)
    for (const auto& [kb, mb] : b) {
      WeightVector key(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) key[i] = ka[i] + kb[i];
      accumulate(out, key, ma * mb);
    }
  return pruned(std::move(out));
}

template <class T>
GradedMatrix<T> graded_log1p(const GradedMatrix<T>& n, std::size_t dim) {
  GradedMatrix<T> out;
  GradedMatrix<T> power = pruned(n);
  for (std::size_t k = 1; k < std::max<std::size_t>(dim, 2) && !power.empty(); ++k) {
    T coef = T(1) / T(static_cast<long>(k));
    if (k % 2 == 0) coef = -coef;
    graded_add(out, graded_scaled(power, coef));
    power = graded_product(power, n);
  }
  return pruned(std::move(out));
}

template <class T>
GradedMatrix<T> graded_expm1(const GradedMatrix<T>& n, std::size_t dim) {
  GradedMatrix<T> out;
  GradedMatrix<T> term = pruned(n);
  for (std::size_t k = 1; k <= std::max<std::size_t>(dim, 1) && !term.empty(); ++k) {
    graded_add(out, term);
    term = graded_scaled(graded_product(term, n), T(1) / T(static_cast<long>(k + 1)));
  }
  return pruned(std::move(out));
}

template <class T>
std::vector<AlienComponentOf<T>> delta_plus_components(const Matrix<T>& c, const LevelOneSystem& sys,
                                                       const TorusGrading& grading, const Real& theta) {
  return label(graded(c, sys, grading), sys, grading, theta, false);
}

template <class T>
std::vector<AlienComponentOf<T>> alien_derivations(const Matrix<T>& c, const LevelOneSystem& sys,
                                                   const TorusGrading& grading, const Real& theta) {
  GradedMatrix<T> g = graded(c, sys, grading);
  for (const auto& [key, m] : g)
    if (std::all_of(key.begin(), key.end(), [](long v) { return v == 0; }))
      throw ValidationError("alien_derivations: Stokes matrix has entries between blocks with equal a");
  return label(graded_log1p(g, c.rows()), sys, grading, theta, true);
}

template <class T>
GradedMatrix<T> reconstruct(const std::vector<AlienComponentOf<T>>& components, std::size_t dim) {
  GradedMatrix<T> n;
  for (const auto& c : components) accumulate(n, c.weight, c.matrix);
  return graded_expm1(n, dim);
}

#define LEVELONE_ALIEN_INSTANTIATE(T)                                                                          \
  template GradedMatrix<T> graded(const Matrix<T>&, const LevelOneSystem&, const TorusGrading&);               \
  template GradedMatrix<T> graded_product(const GradedMatrix<T>&, const GradedMatrix<T>&);                     \
  template GradedMatrix<T> graded_log1p(const GradedMatrix<T>&, std::size_t);                                  \
  template GradedMatrix<T> graded_expm1(const GradedMatrix<T>&, std::size_t);                                  \
  template std::vector<AlienComponentOf<T>> delta_plus_components(const Matrix<T>&, const LevelOneSystem&,     \
                                                                  const TorusGrading&, const Real&);           \
  template std::vector<AlienComponentOf<T>> alien_derivations(const Matrix<T>&, const LevelOneSystem&,         \
                                                              const TorusGrading&, const Real&);               \
  template GradedMatrix<T> reconstruct(const std::vector<AlienComponentOf<T>>&, std::size_t);

LEVELONE_ALIEN_INSTANTIATE(Complex)
LEVELONE_ALIEN_INSTANTIATE(GaussianRational)

#undef LEVELONE_ALIEN_INSTANTIATE

std::vector<BridgeRelation> bridge_report(const std::vector<AlienComponent>& components, const LevelOneSystem& sys) {
  std::vector<BridgeRelation> out;
  for (const AlienComponent& comp : components) {
    for (std::size_t k = 0; k < sys.block_count(); ++k) {
      for (std::size_t j = 0; j < sys.block_count(); ++j) {
        const int nj = sys.block(j).size, nk = sys.block(k).size;
        const std::size_t rj = sys.offset(j), ck = sys.offset(k);
        bool any = false;
        for (int a = 0; a < nj && !any; ++a)
          for (int b = 0; b < nk && !any; ++b)
            any = !comp.matrix(rj + static_cast<std::size_t>(a), ck + static_cast<std::size_t>(b)).is_zero();
        if (!any) continue;
        BridgeRelation rel;
        rel.omega = comp.omega;
        rel.column_block = k;
        rel.row_block = j;
        rel.exponent = sys.block(j).lam - sys.block(k).lam;
        rel.exponent_text = exponent_text(sys.block(j), sys.block(k));
        const int degree = nj + nk - 2;
        rel.p.assign(static_cast<std::size_t>(nj),
                     std::vector<std::vector<Complex>>(static_cast<std::size_t>(nk),
                                                       std::vector<Complex>(static_cast<std::size_t>(degree + 1), Complex(0))));
        // x^{J_j} D x^{-J_k}: sum over a >= l, b <= r of ln^{a-l}/(a-l)! D[a,b] (-ln)^{r-b}/(r-b)!.
        for (int l = 0; l < nj; ++l)
          for (int r = 0; r < nk; ++r)
            for (int a = l; a < nj; ++a)
              for (int b = 0; b <= r; ++b) {
                const Complex& d = comp.matrix(rj + static_cast<std::size_t>(a), ck + static_cast<std::size_t>(b));
                if (d.is_zero()) continue;
                Complex term = d / (factorial(static_cast<unsigned long>(a - l)) * factorial(static_cast<unsigned long>(r - b)));
                if ((r - b) % 2 == 1) term = -term;
                rel.p[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)][static_cast<std::size_t>(a - l + r - b)] += term;
              }
        std::ostringstream os;
        const std::string x = rel.exponent_text.empty() ? "" : " x^{" + rel.exponent_text + "}";
        bool first = true;
        for (int r = 0; r < nk; ++r)
          for (int l = 0; l < nj; ++l) {
            const auto& p = rel.p[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
            if (std::all_of(p.begin(), p.end(), [](const Complex& c) { return c.is_zero(); })) continue;
            if (!first) os << "\n";
            first = false;
            os << "Delta_{" << number_text(comp.omega) << "}(F[" << ck + static_cast<std::size_t>(r) + 1 << "]) <- F["
               << rj + static_cast<std::size_t>(l) + 1 << "]" << x << " * " << poly_text(p);
          }
        rel.text = os.str();
        out.push_back(std::move(rel));
      }
    }
  }
  return out;
}

std::string bridge_text(const std::vector<BridgeRelation>& relations) {
  std::string s;
  for (const BridgeRelation& r : relations) s += r.text + "\n";
  return s;
}

}  // namespace levelone
