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

#include <cstddef>
#include <string>
#include <vector>

#include "levelone/core/linalg.hpp"

namespace levelone {

/// One Jordan block: exponential e^{-a/x}, monodromy exponent lam, size n.
struct JordanBlockSpec {
  Complex a;
  Complex lam;
  int size = 1;
  // Integer removed from lam by normalize_block; the block equation uses lam - shift.
  long shift = 0;
  std::string id;
  // Optional display name of the exponent for symbolic reports.
  std::string lambda_symbol;

  Complex effective_lambda() const { return lam - shift; }
};

/// x^2 Y' = (A0(x) + B(x)) Y with A0 = (+)_j a_j I + x (lam_j I + J).
class LevelOneSystem {
 public:
  LevelOneSystem() = default;
  // b_coeffs[m-1] is the coefficient of x^m in B(x).
  LevelOneSystem(std::vector<JordanBlockSpec> blocks, std::vector<CMatrix> b_coeffs);

  const std::vector<JordanBlockSpec>& blocks() const { return blocks_; }
  const JordanBlockSpec& block(std::size_t j) const { return blocks_[j]; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t dimension() const { return n_; }
  // First row of block j.
  std::size_t offset(std::size_t j) const { return offsets_[j]; }
  // Block containing row r.
  std::size_t block_of_row(std::size_t r) const { return row_block_[r]; }

  const std::vector<CMatrix>& b_coeffs() const { return b_; }
  std::size_t b_order() const { return b_.size(); }
  // Coefficient of x^m, zero outside 1..M.
  CMatrix b(std::size_t m) const;

 private:
  std::vector<JordanBlockSpec> blocks_;
  std::vector<CMatrix> b_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> row_block_;
  std::size_t n_ = 0;
};

// Tolerance used to decide that two Stokes values or exponents coincide.
Real merge_tolerance();
bool same_value(const Complex& a, const Complex& b);

struct Diagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

Diagnostics validate_prepared(const LevelOneSystem& sys);

/// The k-th column-block study: block k moved first, a_j -> a_j - a_k, lam_j -> (lam_j - lam_k) mod 1.
struct NormalizedSystem {
  LevelOneSystem system;
  std::size_t k = 0;
  // perm[i] is the original index of normalized block i.
  std::vector<std::size_t> perm;
  // Row r of the normalized system is row row_map[r] of the original.
  std::vector<std::size_t> row_map;
};

NormalizedSystem normalize_block(const LevelOneSystem& sys, std::size_t k);

/// One anti-Stokes direction and its Stokes values sorted by modulus.
struct Direction {
  // Argument in (-pi, pi].
  Real theta;
  std::vector<Complex> omegas;
};

struct StokesValueSet {
  std::vector<Complex> omega;       // distinct a_j
  std::vector<Complex> bold_omega;  // distinct nonzero a_j - a_k
  std::vector<Direction> directions;  // sorted by theta
};

StokesValueSet stokes_values(const LevelOneSystem& sys);

// Argument reduced into (-pi, pi].
Real principal_angle(const Real& t);
// The determination theta* in (-2 pi, 0] of a direction.
Real theta_star(const Real& theta);
bool same_angle(const Real& a, const Real& b);
// Stokes values a_j - a_k on the ray of argument theta, sorted by modulus.
std::vector<Complex> omegas_on_ray(const LevelOneSystem& sys, const Real& theta);
// Values a_j - a_k on the ray, for the study of column block k only.
std::vector<Complex> column_omegas_on_ray(const LevelOneSystem& sys, std::size_t k, const Real& theta);

}  // namespace levelone
