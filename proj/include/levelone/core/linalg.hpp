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

#include "levelone/core/complex.hpp"
#include "levelone/core/matrix.hpp"

namespace levelone {

using CMatrix = Matrix<Complex>;

// Largest entry magnitude (max of |re|, |im|).
Real max_abs(const CMatrix& m);
CMatrix conj_transpose(const CMatrix& m);
// Rounds every entry to prec bits.
CMatrix rounded(const CMatrix& m, long prec);

// Solves A X = B by LU with partial pivoting. Throws NumericalError if A is singular.
CMatrix solve(const CMatrix& a, const CMatrix& b);
CMatrix inverse(const CMatrix& a);

struct LeastSquaresResult {
  CMatrix x;
  // max_abs(A X - B) / max(1, max_abs(B))
  Real relative_residual;
};

// Overdetermined A X = B in the least-squares sense via the normal equations.
LeastSquaresResult least_squares(const CMatrix& a, const CMatrix& b);

}  // namespace levelone
