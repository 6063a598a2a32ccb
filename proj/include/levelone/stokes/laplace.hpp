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

#include <vector>

#include "levelone/borel/ode.hpp"
#include "levelone/borel/path.hpp"

namespace levelone {

/// Lateral Borel-Laplace sum at one x.
struct LateralSumSample {
  Complex x;
  Side side = Side::right;
  // E + integral of g e^{-xi/x}; rows x cols of the column study, or n x n once assembled.
  CMatrix value;
  Real error_estimate;
};

struct LaplaceOptions {
  // Integration segments are at most this multiple of the smallest |x|.
  double panel_factor = 8;
};

/// Laplace integrals of the Borel transform of one column study along the ray of argument
/// theta, passing the singular points on the right (Side::right, the + sum) or the left.
/// Every x must satisfy Re(e^{i theta}/x) > 0.
std::vector<LateralSumSample> lateral_sums(const BorelOde& ode, const Real& theta, Side side,
                                           const std::vector<Complex>& xs, const LaplaceOptions& opts = {});

// Single sample of column block k of the system.
LateralSumSample lateral_sum(const LevelOneSystem& sys, std::size_t k, const Real& theta, Side side, const Complex& x,
                             int order, const LaplaceOptions& opts = {});

namespace kernels {

/// Assembled n x n lateral sums on both sides for every x.
struct SumTable {
  std::vector<CMatrix> plus;
  std::vector<CMatrix> minus;
  Real error;
};

// One task per (column block, side). The parallel version runs them with OpenMP.
SumTable laplace_sums_serial(const LevelOneSystem& sys, const Real& theta, const std::vector<Complex>& xs, int order,
                             const LaplaceOptions& opts = {});
SumTable laplace_sums_parallel(const LevelOneSystem& sys, const Real& theta, const std::vector<Complex>& xs,
                               int order, const LaplaceOptions& opts = {});

}  // namespace kernels

}  // namespace levelone
