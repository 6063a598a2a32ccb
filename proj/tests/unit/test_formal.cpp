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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "levelone/formal/homological.hpp"

using namespace levelone;

TEST(HomologicalTest, FactorialEntryExact) {
  auto f = solve_first_block(fixtures::resonant4x4(), 40);
  // Oracle: c_2 = -1, c_m = (m-1) c_{m-1}.
  mpz_class c = -1;
  EXPECT_TRUE(f.coeffs[1](3, 0).is_zero());
  for (int m = 2; m <= 40; ++m) {
    if (m > 2) c *= (m - 1);
    EXPECT_TRUE(f.coeffs[m](3, 0) == Complex(Real(c))) << m;
    EXPECT_TRUE(f.coeffs[m](3, 0).re().to_integer() == c);
  }
}

TEST(HomologicalTest, CoupledRecurrences) {
  auto f = solve_first_block(fixtures::resonant4x4(), 30);
  // x^2 f3' - f3 = x^2 + x f4 and x^2 f2' - f2 = x^2 + x f3, coefficientwise.
  for (int m = 1; m <= 30; ++m) {
    for (int row : {1, 2}) {
      Complex lhs = f.coeffs[m - 1](row, 0) * (m - 1) - f.coeffs[m](row, 0);
      Complex rhs = (m == 2 ? Complex(1) : Complex(0)) + f.coeffs[m - 1](row + 1, 0);
      EXPECT_LE(abs(lhs - rhs), epsilon(200) * max(Real(1), abs(lhs))) << m << " " << row;
    }
  }
}

TEST(HomologicalTest, ZeroCouplingGivesIdentity) {
  auto sys = fixtures::three_block();
  LevelOneSystem free(sys.blocks(), {});
  auto f = solve_homological(free, 10, Columns::all);
  EXPECT_TRUE(f.coeffs[0] == CMatrix::identity(4));
  for (int m = 1; m <= 10; ++m) EXPECT_TRUE(f.coeffs[m].is_zero());
}

TEST(HomologicalTest, ResidualAndGevreyBound) {
  for (const auto& sys : {fixtures::resonant4x4(), fixtures::coupled2x2(), fixtures::three_block()}) {
    auto f = solve_homological(sys, 40, Columns::all);
    EXPECT_LT(homological_residual(sys, f), epsilon(working_precision() - 32));
    auto first = solve_first_block(sys, 40);
    EXPECT_LT(homological_residual(sys, first), epsilon(working_precision() - 32));
    Real sup(0);
    for (int m = 1; m <= 40; ++m) {
      Real ratio = max_abs(f.coeffs[m]) / pow(factorial(m), Real(1.05));
      sup = max(sup, ratio);
    }
    EXPECT_LT(sup, 100);
  }
}

TEST(HomologicalTest, CoefficientOneVanishesOnEqualStokesBlocks) {
  // Holds when B_1 and B_2 have no coupling between blocks with equal a_j.
  auto sys = fixtures::resonant4x4();
  auto f = solve_homological(sys, 5, Columns::all);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (same_value(sys.block(sys.block_of_row(r)).a, sys.block(sys.block_of_row(c)).a))
        EXPECT_TRUE(f.coeffs[1](r, c).is_zero()) << r << c;
}

TEST(HomologicalTest, EliminationOrderDoesNotMatter) {
  for (const auto& sys : {fixtures::resonant4x4(), fixtures::three_block()}) {
    auto a = solve_homological(sys, 25, Columns::all, EliminationOrder::rows_outer);
    auto b = solve_homological(sys, 25, Columns::all, EliminationOrder::cols_outer);
    for (int m = 0; m <= 25; ++m) EXPECT_LE(max_abs(a.coeffs[m] - b.coeffs[m]), epsilon(240) * max(Real(1), max_abs(a.coeffs[m])));
  }
}

TEST(HomologicalTest, ParallelAssemblyMatchesSerial) {
  auto sys = fixtures::three_block();
  auto a = solve_homological(sys, 20, Columns::all);
  auto b = solve_homological_serial(sys, 20);
  for (int m = 0; m <= 20; ++m) EXPECT_TRUE(a.coeffs[m] == b.coeffs[m]);
}

TEST(HomologicalTest, FirstBlockIsFirstColumnsOfFullGauge) {
  auto sys = fixtures::three_block();
  auto full = solve_homological(sys, 15, Columns::all);
  auto first = solve_first_block(sys, 15);
  for (int m = 0; m <= 15; ++m) EXPECT_TRUE(full.coeffs[m].block(0, 0, 4, 1) == first.coeffs[m]);
}

TEST(BorelFirstBlockTest, GeometricEntryAndDelta) {
  auto f = solve_first_block(fixtures::resonant4x4(), 20);
  auto b = borel_first_block(f);
  EXPECT_TRUE(b.delta == CMatrix::truncated_identity(4, 1));
  EXPECT_TRUE(b.coeffs[0](3, 0).is_zero());
  for (std::size_t i = 1; i <= b.order(); ++i) EXPECT_TRUE(b.coeffs[i](3, 0) == Complex(-1)) << i;
  LevelOneSystem free(fixtures::resonant4x4().blocks(), {});
  auto z = borel_first_block(solve_first_block(free, 6));
  for (const auto& c : z.coeffs) EXPECT_TRUE(c.is_zero());
}

TEST(BorelFirstBlockTest, LogEntryMatchesClosedFormTaylor) {
  // f3-hat(xi) = (2 xi + ln(1 - xi)) / (xi - 1) = sum_m (H_{m+1} - 2) xi^m ... computed from the product form.
  auto b = borel_first_block(solve_first_block(fixtures::resonant4x4(), 13));
  // (2 xi + ln(1-xi)) = xi - sum_{j>=2} xi^j / j ; divided by (xi - 1) = -(1 + xi + xi^2 + ...)
  std::vector<Real> num(13, Real(0));
  num[1] = Real(1);
  for (int j = 2; j < 13; ++j) num[j] = Real(-1) / j;
  for (int i = 0; i < 12; ++i) {
    Real want(0);
    for (int j = 0; j <= i; ++j) want -= num[j];
    EXPECT_LT(abs(b.coeffs[i](2, 0) - Complex(want)), epsilon(240)) << i;
  }
}
