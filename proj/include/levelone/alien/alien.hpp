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

#include <map>
#include <string>
#include <vector>

#include "levelone/alien/lattice.hpp"
#include "levelone/core/error.hpp"
#include "levelone/core/gaussian_rational.hpp"
#include "levelone/core/linalg.hpp"

namespace levelone {

/// Polynomial in commuting monomials mu^m with matrix coefficients.
template <class T>
using GradedMatrix = std::map<WeightVector, Matrix<T>>;

/// One homogeneous component: omega* = sum m_r b_r with theta*, its weights and its matrix.
template <class T>
struct AlienComponentOf {
  Complex omega;
  Real theta_star;
  WeightVector weight;
  Matrix<T> matrix;
};

using AlienComponent = AlienComponentOf<Complex>;
using ExactAlienComponent = AlienComponentOf<GaussianRational>;

// T_mu C T_mu^{-1}: entry (r, c) carries mu^{m_r - m_c}.
template <class T>
GradedMatrix<T> graded(const Matrix<T>& c, const LevelOneSystem& sys, const TorusGrading& grading);

template <class T>
GradedMatrix<T> graded_product(const GradedMatrix<T>& a, const GradedMatrix<T>& b);

// log(I + N) and exp(N) - I for a nilpotent graded N, truncated at the dimension.
template <class T>
GradedMatrix<T> graded_log1p(const GradedMatrix<T>& n, std::size_t dim);
template <class T>
GradedMatrix<T> graded_expm1(const GradedMatrix<T>& n, std::size_t dim);

/// Components of C split by Stokes value: the coefficients of T C T^{-1}, labelled by omega.
template <class T>
std::vector<AlienComponentOf<T>> delta_plus_components(const Matrix<T>& c, const LevelOneSystem& sys,
                                                       const TorusGrading& grading, const Real& theta);

/// Dotted alien derivations in the direction theta: homogeneous components of log(I + T C T^{-1}).
/// A nonzero component whose omega is not a Stokes value on the ray raises NumericalError.
template <class T>
std::vector<AlienComponentOf<T>> alien_derivations(const Matrix<T>& c, const LevelOneSystem& sys,
                                                   const TorusGrading& grading, const Real& theta);

// exp(sum Delta mu^m) - I, the graded Stokes matrix rebuilt from the derivations.
template <class T>
GradedMatrix<T> reconstruct(const std::vector<AlienComponentOf<T>>& components, std::size_t dim);

/// One term of Delta_omega(F^k) = sum_j F^j x^{lam_j - lam_k} P^{jk}(ln x).
struct BridgeRelation {
  Complex omega;
  std::size_t column_block = 0;
  std::size_t row_block = 0;
  Complex exponent;
  std::string exponent_text;
  // p[l][r][q]: coefficient of ln^q x in entry (l, r) of x^{J_j} Delta x^{-J_k}.
  std::vector<std::vector<std::vector<Complex>>> p;
  std::string text;
};

std::vector<BridgeRelation> bridge_report(const std::vector<AlienComponent>& components, const LevelOneSystem& sys);

// Plain text rendering, one relation per line.
std::string bridge_text(const std::vector<BridgeRelation>& relations);

// Exact scalar used in the alien algebra, as a complex number.
inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
Matrix<GaussianRational> exact_matrix(const CMatrix& m, long bits);
CMatrix to_complex(const Matrix<GaussianRational>& m);

}  // namespace levelone
