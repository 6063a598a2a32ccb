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

#include "levelone/core/complex.hpp"

namespace levelone {

// Taylor coefficients g_0..g_order of 1/Gamma(z0 + u) in u.
std::vector<Complex> rgamma_taylor(const Complex& z0, int order);

// kappa_p(lam) = 2 pi i (d/dt)^p [exp(-i pi t) / Gamma(1 - t)] at t = lam.
Complex kappa(int p, const Complex& lam);

// kappa_0(lam), ..., kappa_pmax(lam) from a single expansion.
std::vector<Complex> kappa_table(int pmax, const Complex& lam);

}  // namespace levelone
