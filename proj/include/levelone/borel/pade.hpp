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

#include "levelone/borel/path.hpp"
#include "levelone/core/series.hpp"

namespace levelone {

/// P(t)/Q(t) with t = xi - center and Q(0) = 1.
struct PadeApproximant {
  Complex center;
  std::vector<Complex> p;
  std::vector<Complex> q;
  // Residual of the Pade equations beyond those used, relative to the coefficients.
  Real extra_residual;

  Complex evaluate(const Complex& xi) const;
  // Taylor coefficients at xi = at, up to order.
  std::vector<Complex> taylor(const Complex& at, std::size_t order) const;
};

// [L/M] approximant of the series at center. Throws NumericalError if the system is singular.
PadeApproximant pade(const std::vector<Complex>& coeffs, const Complex& center, std::size_t l, std::size_t m);

struct PadeOptions {
  double tolerance = 1e-8;
  // Singular support and clearance for path re-expansion.
  std::vector<Complex> singular;
  Real clearance;
};

struct PadeResult {
  Complex value;
  // Spread of three consecutive orders relative to the value; zero when rational.
  Real agreement;
  bool rational = false;
  std::size_t degree = 0;
  std::size_t reexpansions = 0;
};

/// Continuation of a xi-series to zeta by near-diagonal Pade approximants.
///
/// A series that agrees with a low-degree rational function to 2^{-prec/2} is treated as
/// that function. Otherwise the diagonal sequence must stabilize over three orders.
/// With a path, the approximant is re-expanded at steps below half the distance to the
/// singular support and zeta is evaluated from the last center.
PadeResult pade_continue(const TruncatedSeries& ts, const Complex& zeta, const PadeOptions& opts = {},
                         const PathSpec* path = nullptr);

}  // namespace levelone
