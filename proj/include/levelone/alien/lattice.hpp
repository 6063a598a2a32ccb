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

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "levelone/system/system.hpp"

namespace levelone {

using WeightVector = std::vector<long>;

/// Basis b_1..b_nu of the lattice spanned by the values a_j, with the integer coordinates of each a_j.
struct TorusGrading {
  std::vector<Complex> basis;
  // Distinct values a_j and their coordinates, in order of first appearance.
  std::vector<Complex> values;
  std::vector<WeightVector> weights;
  bool user_supplied = false;

  std::size_t rank() const { return basis.size(); }
  // sum_r m[r] b_r
  Complex value_of(const WeightVector& m) const;
};

// Rational with denominator at most 2^{bits} within 2^{-3 bits} relative; empty if none.
std::optional<mpq_class> rational_reconstruct(const Real& x, long bits);

// Integer vector r with sum_i r_i x_i = 0 to 2^{-precision/2}, found by LLL; empty if none is that small.
std::optional<WeightVector> integer_relation(const std::vector<Complex>& x);

/// Lattice basis of the values. With a user basis the values are checked to be integral combinations
/// of it; otherwise the values must be rational-complex and the basis is their Hermite normal form.
TorusGrading lattice_basis(const std::vector<Complex>& values,
                           const std::optional<std::vector<Complex>>& user_basis = std::nullopt);
TorusGrading lattice_basis(const LevelOneSystem& sys,
                           const std::optional<std::vector<Complex>>& user_basis = std::nullopt);

// Integer coordinates of a value in the basis; throws ValidationError when not integral.
WeightVector integer_coordinates(const Complex& value, const std::vector<Complex>& basis);
// Weights m_j of block j.
WeightVector weights_of(const LevelOneSystem& sys, std::size_t j, const TorusGrading& grading);

}  // namespace levelone
