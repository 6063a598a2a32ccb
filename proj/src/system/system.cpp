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

#include "levelone/system/system.hpp"

#include <algorithm>

#include "levelone/core/error.hpp"

namespace levelone {

LevelOneSystem::LevelOneSystem(std::vector<JordanBlockSpec> blocks, std::vector<CMatrix> b_coeffs)
    : blocks_(std::move(blocks)), b_(std::move(b_coeffs)) {
  if (blocks_.empty()) throw ValidationError("system needs at least one block");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].size < 1) throw ValidationError("block " + std::to_string(j + 1) + " has size < 1");
    offsets_.push_back(n_);
    for (int r = 0; r < blocks_[j].size; ++r) row_block_.push_back(j);
    n_ += static_cast<std::size_t>(blocks_[j].size);
  }
  for (std::size_t m = 0; m < b_.size(); ++m) {
    if (b_[m].rows() != n_ || b_[m].cols() != n_) {
      throw ValidationError("B coefficient of x^" + std::to_string(m + 1) + " is not " + std::to_string(n_) +
                            "x" + std::to_string(n_));
    }
  }
}

CMatrix LevelOneSystem::b(std::size_t m) const {
  if (m >= 1 && m <= b_.size()) return b_[m - 1];
  return CMatrix(n_, n_);
}

Real merge_tolerance() { return epsilon(working_precision() / 4); }

bool same_value(const Complex& a, const Complex& b) {
  Real scale = max(Real(1), max(abs(a), abs(b)));
  return abs(a - b) < merge_tolerance() * scale;
}

Diagnostics validate_prepared(const LevelOneSystem& sys) {
  Diagnostics d;
  const auto& bl = sys.blocks();
  for (std::size_t j = 0; j < bl.size(); ++j) {
    const Real& re = bl[j].lam.re();
    if (re.sign() < 0 || re >= 1) {
      d.violations.push_back("exponent range: block " + std::to_string(j + 1) + " has Re(lambda) outside [0,1)");
    }
  }
  if (!bl[0].a.is_zero() || !bl[0].lam.is_zero()) {
    d.violations.push_back("normalization: first block must have a = 0 and lambda = 0");
  }
  bool all_equal = true;
  for (const auto& b : bl) all_equal = all_equal && same_value(b.a, bl[0].a);
  if (all_equal) d.violations.push_back("single level one: all Stokes values a_j are equal");
  if (sys.b_order() >= 1) {
    const CMatrix& b1 = sys.b_coeffs()[0];
    Real tol = merge_tolerance() * max(Real(1), max_abs(b1));
    for (std::size_t j = 0; j < bl.size(); ++j) {
      for (std::size_t k = 0; k < bl.size(); ++k) {
        if (!same_value(bl[j].a, bl[k].a)) continue;
        bool zero = true;
        for (int r = 0; r < bl[j].size; ++r)
          for (int c = 0; c < bl[k].size; ++c)
            zero = zero && mag(b1(sys.offset(j) + r, sys.offset(k) + c)) <= tol;
        if (!zero) {
          d.violations.push_back("block (" + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                 ") of B_1 must vanish since a_j = a_k");
        }
      }
    }
  }
  return d;
}

NormalizedSystem normalize_block(const LevelOneSystem& sys, std::size_t k) {
  if (k >= sys.block_count()) throw ValidationError("normalize_block: block index out of range");
  NormalizedSystem out;
  out.k = k;
  out.perm.push_back(k);
  for (std::size_t j = 0; j < sys.block_count(); ++j)
    if (j != k) out.perm.push_back(j);
  const JordanBlockSpec& front = sys.block(k);
  std::vector<JordanBlockSpec> blocks;
  for (std::size_t j : out.perm) {
    JordanBlockSpec b = sys.block(j);
    b.a = b.a - front.a;
    Complex d = b.effective_lambda() - front.effective_lambda();
    // Representative with real part in [0,1); the integer moves into shift.
    Real fl = floor(d.re());
    long s = fl.to_long();
    b.lam = d - s;
    if (b.lam.re() >= 1) {
      b.lam = b.lam - 1;
      ++s;
    }
    b.shift = -s;
    if (j == k) {
      b.lam = Complex::zero(working_precision());
      b.shift = 0;
    }
    blocks.push_back(std::move(b));
    for (int r = 0; r < sys.block(j).size; ++r) out.row_map.push_back(sys.offset(j) + r);
  }
  std::vector<CMatrix> b;
  const std::size_t n = sys.dimension();
  for (const CMatrix& m : sys.b_coeffs()) {
    CMatrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) = m(out.row_map[r], out.row_map[c]);
    b.push_back(std::move(p));
  }
  out.system = LevelOneSystem(std::move(blocks), std::move(b));
  return out;
}

Real principal_angle(const Real& t) {
  Real two_pi = 2 * pi(t.precision());
  Real r = t - two_pi * floor(t / two_pi);  // [0, 2 pi)
  if (r > pi(t.precision())) r = r - two_pi;
  return r;
}

Real theta_star(const Real& theta) {
  Real t = principal_angle(theta);
  if (t.sign() > 0) t = t - 2 * pi(t.precision());
  return t;
}

bool same_angle(const Real& a, const Real& b) {
  Real d = abs(principal_angle(a - b));
  return d < merge_tolerance();
}

namespace {

void push_unique(std::vector<Complex>& v, const Complex& z) {
  for (const Complex& w : v)
    if (same_value(w, z)) return;
  v.push_back(z);
}

void sort_by_modulus(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) { return a.abs() < b.abs(); });
}

}  // namespace

StokesValueSet stokes_values(const LevelOneSystem& sys) {
  StokesValueSet s;
  push_unique(s.omega, Complex::zero(working_precision()));
  for (const auto& b : sys.blocks()) push_unique(s.omega, b.a);
  for (const auto& bj : sys.blocks()) {
    for (const auto& bk : sys.blocks()) {
      Complex d = bj.a - bk.a;
      if (same_value(bj.a, bk.a)) continue;
      push_unique(s.bold_omega, d);
    }
  }
  for (const Complex& w : s.bold_omega) {
    Real t = w.arg();
    auto it = std::find_if(s.directions.begin(), s.directions.end(),
                           [&](const Direction& d) { return same_angle(d.theta, t); });
    if (it == s.directions.end()) {
      s.directions.push_back({t, {w}});
    } else {
      it->omegas.push_back(w);
    }
  }
  for (auto& d : s.directions) sort_by_modulus(d.omegas);
  std::sort(s.directions.begin(), s.directions.end(),
            [](const Direction& a, const Direction& b) { return a.theta < b.theta; });
  return s;
}

std::vector<Complex> omegas_on_ray(const LevelOneSystem& sys, const Real& theta) {
  std::vector<Complex> out;
  for (const auto& bj : sys.blocks()) {
    for (const auto& bk : sys.blocks()) {
      if (same_value(bj.a, bk.a)) continue;
      Complex d = bj.a - bk.a;
      if (same_angle(d.arg(), theta)) push_unique(out, d);
    }
  }
  sort_by_modulus(out);
  return out;
}

std::vector<Complex> column_omegas_on_ray(const LevelOneSystem& sys, std::size_t k, const Real& theta) {
  std::vector<Complex> out;
  const Complex& ak = sys.block(k).a;
  for (const auto& bj : sys.blocks()) {
    if (same_value(bj.a, ak)) continue;
    Complex d = bj.a - ak;
    if (same_angle(d.arg(), theta)) push_unique(out, d);
  }
  sort_by_modulus(out);
  return out;
}

}  // namespace levelone
