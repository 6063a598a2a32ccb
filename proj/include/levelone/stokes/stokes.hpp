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

#include <utility>
#include <vector>

#include "levelone/borel/connection.hpp"
#include "levelone/stokes/laplace.hpp"

namespace levelone {

/// Stokes-Ramis matrix I + C in the direction theta*.
struct StokesMatrix {
  Real theta_star;
  CMatrix c;
  // Relative residual of the jump fit, zero for the algebraic route.
  Real residual;
  // Largest entry of the measured jump outside the pattern.
  Real off_pattern;
  // Quadrature error estimate of the lateral sums.
  Real quadrature_error;
};

struct JumpOptions {
  // Sample radii on the ray of argument theta*.
  std::vector<double> radii{0.05, 0.06, 0.07, 0.08, 0.09, 0.10, 0.11, 0.12, 0.13, 0.14};
  bool parallel = true;
  LaplaceOptions laplace;
};

/// Fits C in s+ - s- = s- x^L e^{Q} C e^{-Q} x^{-L} from lateral sums sampled on the ray.
StokesMatrix stokes_from_jumps(const LevelOneSystem& sys, const Real& theta, int order, const JumpOptions& opts = {});

/// C^{j,k}[l,r] = sum_{a >= l, b <= r} kappa_{a-l+r-b}(lam_j - lam_k) (-1)^{r-b} K[a,b] / ((a-l)! (r-b)!).
CMatrix connection_to_stokes(const CMatrix& k, const LevelOneSystem& sys);
StokesMatrix connection_to_stokes(const ConnectionMatrix& k, const LevelOneSystem& sys);

/// Inverse map by back-substitution on the kappa_0 diagonal.
CMatrix stokes_to_connection(const CMatrix& c, const LevelOneSystem& sys);

/// Components of C by Stokes value omega = a_j - a_k, in order of modulus; zero ones are omitted.
std::vector<std::pair<Complex, CMatrix>> delta_plus_split(const CMatrix& c, const LevelOneSystem& sys);

// Throws ValidationError if a block with a_j = a_k is nonzero.
void assert_offdiagonal_pattern(const CMatrix& m, const LevelOneSystem& sys);

struct HankelOptions {
  double delta = 1e-3;
  double cutoff = 50;
};

// Numerical integral of xi^{lam-1} ln^p xi e^{-xi} over the Hankel contour around R+.
Complex hankel_kappa(int p, const Complex& lam, const HankelOptions& opts = {});
// connection_to_stokes with every kappa replaced by its Hankel quadrature.
CMatrix hankel_connection_to_stokes(const CMatrix& k, const LevelOneSystem& sys, const HankelOptions& opts = {});

}  // namespace levelone
