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
#include "levelone/stokes/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "levelone/core/error.hpp"

namespace levelone {

namespace {

// P_m(x) and P_{m-1}(x) by the three-term recurrence.
std::pair<Real, Real> legendre(int m, const Real& x) {
  Real p0 = Real(1).rounded(x.precision());
  Real p1 = x;
  for (int k = 2; k <= m; ++k) {
    Real p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return {p1, p0};
}

GaussRule compute_rule(int m) {
  const long prec = working_precision();
  GaussRule rule;
  const Real tol = epsilon(prec - 4);
  for (int i = 1; i <= m; ++i) {
    Real x(std::cos(M_PI * (i - 0.25) / (m + 0.5)));
    x = x.rounded(prec);
    Real dp;
    for (int it = 0; it < 200; ++it) {
      auto [pm, pm1] = legendre(m, x);
      dp = (x * pm - pm1) * m / (x * x - 1);
      Real dx = pm / dp;
      x -= dx;
      if (abs(dx) <= tol) break;
      if (it == 199) throw NumericalError("Gauss-Legendre nodes did not converge");
    }
    auto [pm, pm1] = legendre(m, x);
    dp = (x * pm - pm1) * m / (x * x - 1);
    rule.nodes.push_back(x);
    rule.weights.push_back(Real(2) / ((1 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int m) {
  if (m < 1) throw ValidationError("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<std::pair<int, long>, std::unique_ptr<GaussRule>> cache;
  const std::pair<int, long> key{m, working_precision()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto rule = std::make_unique<GaussRule>(compute_rule(m));
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return *it->second;
}

int gauss_points(long bits, double rho) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) / (2 * std::log2(rho)))) + 1;
}

}  // namespace levelone
