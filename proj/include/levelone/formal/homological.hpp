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
#include <vector>

#include "levelone/core/linalg.hpp"
#include "levelone/core/series.hpp"
#include "levelone/system/system.hpp"

namespace levelone {

/// Matrix-valued truncated series sum_m F_m x^m with n x cols coefficients.
struct BlockMatrixSeries {
  std::vector<CMatrix> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  std::size_t rows() const { return coeffs.front().rows(); }
  std::size_t cols() const { return coeffs.front().cols(); }
  // Scalar series of one entry.
  TruncatedSeries entry(std::size_t i, std::size_t j, Variable var = Variable::x) const;
};

enum class Columns { first_block, all };

// Traversal of the coupled entries of a block with a_j = a_k. Both give the same result.
enum class EliminationOrder { rows_outer, cols_outer };

// Solves x^2 F' - A0 F + F A0^{(1)} = B F for the first column block, F_0 = I.
BlockMatrixSeries solve_first_block(const LevelOneSystem& sys, int order,
                                    EliminationOrder elim = EliminationOrder::rows_outer);

// Full gauge F (cols = all) is assembled from normalize_block over every k.
BlockMatrixSeries solve_homological(const LevelOneSystem& sys, int order, Columns cols,
                                    EliminationOrder elim = EliminationOrder::rows_outer);

// Serial reference for the cols = all assembly.
BlockMatrixSeries solve_homological_serial(const LevelOneSystem& sys, int order,
                                           EliminationOrder elim = EliminationOrder::rows_outer);

// Max over m of the residual of the homological system, relative to the size of F_m.
// The series covers the first cols() columns, which must be whole leading blocks.
Real homological_residual(const LevelOneSystem& sys, const BlockMatrixSeries& f);

/// Borel data of F - I: coeffs[i] multiplies xi^i; delta is the removed identity part.
struct BorelSeries {
  std::vector<CMatrix> coeffs;
  CMatrix delta;

  std::size_t order() const { return coeffs.size() - 1; }
  TruncatedSeries entry(std::size_t i, std::size_t j) const;
};

BorelSeries borel_first_block(const BlockMatrixSeries& series);

}  // namespace levelone
