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

#include <random>

#include "fixtures.hpp"
#include "levelone/alien/alien.hpp"
#include "levelone/alien/lattice.hpp"
#include "levelone/core/error.hpp"
#include "levelone/stokes/stokes.hpp"

using namespace levelone;

namespace {

using QMatrix = Matrix<GaussianRational>;

GaussianRational random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  long a = 0, b = 0;
  while (a == 0 && b == 0) {
    a = num(rng);
    b = num(rng);
  }
  return GaussianRational(mpq_class(a, den(rng)), mpq_class(b, den(rng)));
}

// Stokes matrix of the thirteen-block structure in the direction 0, 1-based positions.
QMatrix hyper_c(std::mt19937_64& rng) {
  QMatrix c(13, 13);
  for (auto [j, l] : std::vector<std::pair<int, int>>{{1, 8}, {2, 1}, {4, 6}, {12, 10}, {3, 7}, {13, 9}, {2, 8}})
    c(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(l - 1)) = random_q(rng);
  return c;
}

QMatrix unit(int j, int l, const GaussianRational& v, std::size_t n = 13) {
  QMatrix m(n, n);
  m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(l - 1)) = v;
  return m;
}

const ExactAlienComponent* find(const std::vector<ExactAlienComponent>& comps, const Complex& w) {
  for (const auto& c : comps)
    if (same_value(c.omega, w)) return &c;
  return nullptr;
}

}  // namespace

TEST(LatticeTest, RationalReconstruction) {
  auto tenth = rational_reconstruct(Real(1) / 10, 64);
  ASSERT_TRUE(tenth);
  EXPECT_EQ(*tenth, mpq_class(1, 10));
  auto third = rational_reconstruct(Real(-7) / 3, 64);
  ASSERT_TRUE(third);
  EXPECT_EQ(*third, mpq_class(-7, 3));
  EXPECT_FALSE(rational_reconstruct(pi(), 64));
}

TEST(LatticeTest, ResonantBasis) {
  TorusGrading g = lattice_basis(fixtures::resonant4x4());
  ASSERT_EQ(g.rank(), 1u);
  EXPECT_TRUE(g.basis[0] == Complex(1));
  auto sys = fixtures::resonant4x4();
  EXPECT_EQ(weights_of(sys, 0, g), WeightVector{0});
  EXPECT_EQ(weights_of(sys, 1, g), WeightVector{1});
}

TEST(LatticeTest, TrivialLattice) {
  TorusGrading g = lattice_basis(std::vector<Complex>{Complex(0)});
  EXPECT_EQ(g.rank(), 0u);
  EXPECT_EQ(g.weights.front(), WeightVector{});
}

TEST(LatticeTest, RationalComplexHermiteBasis) {
  TorusGrading g = lattice_basis(fixtures::three_block());
  ASSERT_EQ(g.rank(), 2u);
  EXPECT_TRUE(g.basis[0] == Complex(1));
  EXPECT_TRUE(g.basis[1] == Complex(Real(0), Real(1.5)));
  EXPECT_EQ(g.weights[2], (WeightVector{0, 1}));
  TorusGrading h = lattice_basis(std::vector<Complex>{Complex(1), Complex(Real(0.5), Real(0.5))});
  ASSERT_EQ(h.rank(), 2u);
  for (std::size_t i = 0; i < h.values.size(); ++i) EXPECT_TRUE(same_value(h.value_of(h.weights[i]), h.values[i]));
}

TEST(LatticeTest, IrrationalValuesNeedUserBasis) {
  EXPECT_THROW(lattice_basis(fixtures::hypergeom13()), ValidationError);
}

TEST(LatticeTest, ThirteenWeights) {
  auto sys = fixtures::hypergeom13();
  TorusGrading g = lattice_basis(sys, fixtures::hypergeom13_basis());
  ASSERT_EQ(g.rank(), 4u);
  const std::vector<WeightVector> expected{{0, 0, 0, 0},  {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
                                           {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0},
                                           {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}};
  for (std::size_t j = 0; j < 13; ++j) EXPECT_EQ(weights_of(sys, j, g), expected[j]) << "block " << j + 1;
}

TEST(LatticeTest, DependentBasisRejected) {
  EXPECT_THROW(lattice_basis(std::vector<Complex>{Complex(1)}, std::vector<Complex>{Complex(1), Complex(2)}),
               ValidationError);
  EXPECT_THROW(integer_coordinates(Complex(Real(0.5)), {Complex(1)}), ValidationError);
}

TEST(AlienTest, ResonantSingleDerivation) {
  auto sys = fixtures::resonant4x4();
  CMatrix c(4, 4);
  c(1, 0) = Complex(Real(0), Real(3));
  c(2, 0) = Complex(Real(0), Real(5));
  c(3, 0) = Complex(Real(0), Real(7));
  TorusGrading g = lattice_basis(sys);
  auto comps = alien_derivations(c, sys, g, Real(0));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_TRUE(same_value(comps[0].omega, Complex(1)));
  EXPECT_TRUE(comps[0].matrix == c);
  auto rel = bridge_report(comps, sys);
  ASSERT_EQ(rel.size(), 1u);
  EXPECT_EQ(rel[0].column_block, 0u);
  EXPECT_EQ(rel[0].row_block, 1u);
  // Row of f2: C21 + C31 ln x + C41 ln^2 x / 2; row of f4: C41.
  const auto& p2 = rel[0].p[0][0];
  EXPECT_TRUE(p2[0] == c(1, 0));
  EXPECT_TRUE(p2[1] == c(2, 0));
  EXPECT_TRUE(p2[2] == c(3, 0) / 2);
  EXPECT_TRUE(rel[0].p[2][0][0] == c(3, 0));
  EXPECT_TRUE(rel[0].p[2][0][1].is_zero());
  EXPECT_TRUE(alien_derivations(CMatrix(4, 4), sys, g, Real(0)).empty());
  EXPECT_TRUE(bridge_report({}, sys).empty());
}

TEST(AlienTest, ThirteenBlockStructure) {
  auto sys = fixtures::hypergeom13();
  TorusGrading g = lattice_basis(sys, fixtures::hypergeom13_basis());
  std::mt19937_64 rng(13);
  QMatrix c = hyper_c(rng);
  auto plus = delta_plus_components(c, sys, g, Real(0));
  ASSERT_EQ(plus.size(), 3u);
  const Complex w12(12), w24(24), w12r3(sqrt(Real(3)) * 12);
  EXPECT_TRUE(same_value(plus[0].omega, w12));
  EXPECT_TRUE(same_value(plus[1].omega, w12r3));
  EXPECT_TRUE(same_value(plus[2].omega, w24));
  EXPECT_EQ(plus[0].weight, (WeightVector{1, 0, 0, 0}));
  EXPECT_EQ(plus[1].weight, (WeightVector{0, 2, 0, -1}));
  EXPECT_EQ(plus[2].weight, (WeightVector{2, 0, 0, 0}));
  QMatrix d12 = unit(1, 8, c(0, 7)) + unit(2, 1, c(1, 0)) + unit(4, 6, c(3, 5)) + unit(12, 10, c(11, 9));
  QMatrix d12r3 = unit(3, 7, c(2, 6)) + unit(13, 9, c(12, 8));
  QMatrix d24 = unit(2, 8, c(1, 7));
  EXPECT_TRUE(plus[0].matrix == d12);
  EXPECT_TRUE(plus[1].matrix == d12r3);
  EXPECT_TRUE(plus[2].matrix == d24);

  auto alien = alien_derivations(c, sys, g, Real(0));
  ASSERT_EQ(alien.size(), 3u);
  EXPECT_TRUE(find(alien, w12)->matrix == d12);
  EXPECT_TRUE(find(alien, w12r3)->matrix == d12r3);
  QMatrix expected24 = d24 - scaled(d12 * d12, GaussianRational(mpq_class(1, 2)));
  EXPECT_TRUE(find(alien, w24)->matrix == expected24);
  EXPECT_TRUE(expected24 == unit(2, 8, c(1, 7) - c(1, 0) * c(0, 7) / 2));

  // exp of the derivations gives back the graded Stokes matrix.
  GradedMatrix<GaussianRational> back = reconstruct(alien, 13);
  GradedMatrix<GaussianRational> orig = graded(c, sys, g);
  EXPECT_EQ(back.size(), orig.size());
  for (const auto& [k, m] : orig) {
    ASSERT_TRUE(back.count(k));
    EXPECT_TRUE(back.at(k) == m);
  }
}

TEST(AlienTest, OffRayEntryRejected) {
  auto sys = fixtures::hypergeom13();
  TorusGrading g = lattice_basis(sys, fixtures::hypergeom13_basis());
  QMatrix c(13, 13);
  c(1, 2) = GaussianRational(1);
  EXPECT_THROW(delta_plus_components(c, sys, g, Real(0)), ValidationError);
}

TEST(AlienTest, IndependentOfBasisChoice) {
  auto sys = fixtures::hypergeom13();
  std::vector<Complex> b = fixtures::hypergeom13_basis();
  std::vector<Complex> other{b[0] + b[3], b[1], b[2] - b[0], b[3]};
  std::mt19937_64 rng(5);
  QMatrix c = hyper_c(rng);
  auto a1 = alien_derivations(c, sys, lattice_basis(sys, b), Real(0));
  auto a2 = alien_derivations(c, sys, lattice_basis(sys, other), Real(0));
  ASSERT_EQ(a1.size(), a2.size());
  for (std::size_t i = 0; i < a1.size(); ++i) {
    EXPECT_TRUE(same_value(a1[i].omega, a2[i].omega));
    EXPECT_TRUE(a1[i].matrix == a2[i].matrix);
  }
}

TEST(AlienTest, MissingValueWithNullCoefficient) {
  auto base = fixtures::hypergeom13();
  std::vector<JordanBlockSpec> blocks = base.blocks();
  // 24 - 12 sqrt 3 joins the lattice with a zero Stokes block.
  blocks.push_back(fixtures::block(Complex(24) - Complex(sqrt(Real(3)) * 12), 0, 1));
  LevelOneSystem ext(blocks, {});
  std::mt19937_64 rng(9);
  QMatrix c = hyper_c(rng);
  QMatrix c14(14, 14);
  c14.set_block(0, 0, c);
  auto b = fixtures::hypergeom13_basis();
  auto a = alien_derivations(c, base, lattice_basis(base, b), Real(0));
  auto e = alien_derivations(c14, ext, lattice_basis(ext, b), Real(0));
  ASSERT_EQ(a.size(), e.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(e[i].matrix.block(0, 0, 13, 13) == a[i].matrix);
}

TEST(AlienTest, NumericReconstructionOnRandomStokes) {
  auto sys = fixtures::three_block();
  TorusGrading g = lattice_basis(sys);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const Real& theta : {Real(0), pi(), pi() / 2, -pi() / 2}) {
    CMatrix c(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t col = 0; col < 4; ++col) {
        Complex w = sys.block(sys.block_of_row(r)).a - sys.block(sys.block_of_row(col)).a;
        if (w.abs() > merge_tolerance() && same_angle(w.arg(), theta)) c(r, col) = Complex(Real(u(rng)), Real(u(rng)));
      }
    auto comps = alien_derivations(c, sys, g, theta);
    auto back = reconstruct(comps, 4);
    CMatrix total(4, 4);
    for (const auto& [k, m] : back) total += m;
    EXPECT_LT(max_abs(total - c), Real(1e-60));
  }
}
