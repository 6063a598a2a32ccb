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

#include "levelone/core/real.hpp"

namespace levelone {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// m-point rule at the working precision, computed by Newton iteration and cached.
const GaussRule& gauss_legendre(int m);

// Nodes needed for 2^{-bits} accuracy on a Bernstein ellipse with parameter rho.
int gauss_points(long bits, double rho);

}  // namespace levelone
