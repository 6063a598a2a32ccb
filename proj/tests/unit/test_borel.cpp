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
#include "levelone/borel/connection.hpp"
#include "levelone/borel/germ.hpp"
#include "levelone/borel/ode.hpp"
#include "levelone/borel/pade.hpp"
#include "levelone/borel/path.hpp"
#include "levelone/core/error.hpp"

using namespace levelone;

namespace {

Complex two_pi_i() { return Complex::i() * ldexp(pi(), 1); }

Complex k2_exact() {
  Real p = pi();
  return Complex(Real(6) - p * p, p * 4) / 2;
}

Complex k3_exact() { return Complex(Real(2), pi()); }

TruncatedSeries constant(const Complex& c) { return TruncatedSeries(Variable::xi, std::vector<Complex>{c}); }

LogPolynomialGerm monomial(const Complex& exponent, int p, const Complex& c = Complex(1)) {
  LogPolynomialGerm g(Complex(0));
  g.add(exponent, p, constant(c));
  return g;
}

bool exactly(const LogPolynomialGerm& g, const Complex& value) {
  if (value.is_zero()) return g.empty();
  if (g.terms().size() != 1) return false;
  const GermTerm& t = g.terms()[0];
  return t.lambda.is_zero() && t.p == 0 && t.shift == 1 && t.h.order() == 0 && t.h[0] == value;
}

}  // namespace

TEST(PathTest, GammaPlusPassesRight) {
  std::vector<Complex> pts{Complex(0), Complex(1), Complex(2)};
  PathSpec p = gamma_plus(pts, Complex(2), Real(0), Real(1) / 10, Real(1) / 100);
  ASSERT_EQ(p.bypasses.size(), 1u);
  EXPECT_EQ(p.bypasses[0].side, Side::right);
  // Half a turn clockwise around 1 seen from below; none around 2.
  EXPECT_LT(abs(p.winding_argument(Complex(1)) - pi()), Real(1e-40));
  EXPECT_LT(abs(p.end() - (Complex(2) - Complex(Real(1) / 10))), Real(1e-60));
  EXPECT_GE(p.distance_to({Complex(1)}), Real(1) / 10 * (1 - 1e-30));
}

TEST(PathTest, ClearanceViolationThrows) {
  std::vector<Complex> pts{Complex(0), Complex(2), Complex(Real(1), Real(0.05))};
  EXPECT_THROW(gamma_plus(pts, Complex(2), Real(0), Real(1) / 10, Real(1) / 100), ValidationError);
}

TEST(PathTest, LateralSidesDiffer) {
  std::vector<Complex> pts{Complex(0), Complex(1)};
  PathSpec plus = lateral_path(pts, Real(0), Real(1) / 10, Real(1) / 100, Real(5), Side::right);
  PathSpec minus = lateral_path(pts, Real(0), Real(1) / 10, Real(1) / 100, Real(5), Side::left);
  Real two_pi = ldexp(pi(), 1);
  // Out along the plus side and back along the minus side winds once positively around 1.
  Real loop = plus.winding_argument(Complex(1)) - minus.winding_argument(Complex(1));
  EXPECT_LT(abs(loop - two_pi), Real(1e-40));
}

TEST(BorelOdeTest, GeometricEntryOffAxis) {
  BorelOde ode = column_equation(fixtures::euler2x2(), 0, 40);
  Continuation w(ode, Complex(ode.seed_radius()));
  w.line_to(Complex(Real(0.5), Real(0.5)));
  w.line_to(Complex(2));
  // Oracle: 1 - 1/(1 - xi).
  EXPECT_LT(abs(w.g_hat()(1, 0) - Complex(2)), Real(1e-40));
  EXPECT_TRUE(w.g_hat()(0, 0).is_zero());
}

TEST(BorelOdeTest, LogBranchAfterGammaPlus) {
  BorelOde ode = column_equation(fixtures::resonant4x4(), 0, 40);
  Real nu = default_clearance(ode.singular_points());
  PathSpec p = gamma_plus(ode.singular_points(), Complex(1), Real(0), nu, ode.seed_radius());
  Continuation w(ode, p.start());
  w.follow(p);
  Real quarter = pi() / 4;
  w.arc(Complex(1), nu, -pi(), -quarter);
  Complex zeta = Complex(1) + polar(Real(0.5), -quarter);
  w.line_to(zeta);
  Complex xi = zeta - Complex(1);
  Complex oracle = (k3_exact() + log(xi)) / xi + Complex(2);
  EXPECT_LT(abs(w.g_hat()(2, 0) - oracle), Real(1e-40));
  Complex f4 = Complex(1) / xi + Complex(1);
  EXPECT_LT(abs(w.g_hat()(3, 0) - f4), Real(1e-40));
}

TEST(PadeTest, RationalSeriesIsDetected) {
  BorelOde ode = column_equation(fixtures::euler2x2(), 0, 40);
  TruncatedSeries f4 = ode.seed().entry(1, 0);
  PadeResult r = pade_continue(f4, Complex(2));
  EXPECT_TRUE(r.rational);
  EXPECT_LT(abs(r.value - Complex(2)), Real(1e-20));
}

TEST(PadeTest, RationalAgreesOffTube) {
  // 1/((1 - xi)(2 + xi)) on |zeta| <= 3, away from the poles by more than 0.1.
  std::vector<Complex> c;
  for (int m = 0; m < 30; ++m) {
    Real v = (Real(1) - pow(Real(-0.5), static_cast<long>(m + 1))) / 3;
    c.push_back(Complex(v));
  }
  TruncatedSeries s(Variable::xi, c);
  for (double re : {-2.9, -1.0, 0.3, 1.5, 2.5}) {
    for (double im : {-0.5, 0.2, 1.7}) {
      Complex z{Real(re), Real(im)};
      Complex exact = Complex(1) / ((Complex(1) - z) * (Complex(2) + z));
      EXPECT_LT(abs(pade_continue(s, z).value - exact), Real(1e-20));
    }
  }
}

TEST(PadeTest, PolynomialIsExact) {
  TruncatedSeries s(Variable::xi, std::vector<Complex>{Complex(1), Complex(-2), Complex(0), Complex(3), Complex(0),
                                                       Complex(0), Complex(0), Complex(0), Complex(0)});
  Complex z{Real(1.5), Real(-0.5)};
  Complex exact = Complex(1) - z * 2 + pow(z, 3) * 3;
  EXPECT_LT(abs(pade_continue(s, z).value - exact), Real(1e-60));
}

TEST(PadeTest, LogSeriesOnFirstSheet) {
  BorelOde ode = column_equation(fixtures::resonant4x4(), 0, 40);
  Complex zeta = Complex(1) + polar(Real(0.5), -pi() / 4);
  Complex xi = zeta - Complex(1);
  Complex oracle = (k3_exact() + log(xi)) / xi + Complex(2);
  PadeOptions opts;
  opts.tolerance = 1e-4;
  PadeResult r = pade_continue(ode.seed().entry(2, 0), zeta, opts);
  EXPECT_FALSE(r.rational);
  EXPECT_LT(abs(r.value - oracle), Real(1e-4));
}

TEST(PadeTest, ShortSeriesRejected) {
  TruncatedSeries s(Variable::xi, std::size_t{5});
  EXPECT_THROW(pade_continue(s, Complex(1)), ValidationError);
}

TEST(VariationTest, LogOverTwoPiI) {
  EXPECT_TRUE(exactly(variation(monomial(Complex(0), 1)), Complex(1)));
}

TEST(VariationTest, IntegerPowersHaveNoVariation) {
  for (long e : {-3L, -1L, 0L, 2L}) EXPECT_TRUE(variation(monomial(Complex(e), 0)).empty()) << e;
  // var o var of the pure 1/xi germ.
  EXPECT_TRUE(variation(monomial(Complex(-1), 0), 2).empty());
}

TEST(VariationTest, IteratedLogPowers) {
  for (int p = 1; p <= 5; ++p) {
    LogPolynomialGerm g = monomial(Complex(0), p);
    EXPECT_TRUE(exactly(variation(g, p), Complex(Real(factorial(static_cast<unsigned long>(p)))))) << p;
    EXPECT_TRUE(variation(g, p + 1).empty()) << p;
  }
  // var(ell^2) = 2 ell - 1.
  LogPolynomialGerm v = variation(monomial(Complex(0), 2));
  LogPolynomialGerm expected = monomial(Complex(0), 1, Complex(2)) - monomial(Complex(0), 0);
  ASSERT_EQ(v.terms().size(), 2u);
  for (const GermTerm& t : v.terms()) {
    EXPECT_TRUE(t.h[0] == (t.p == 1 ? Complex(2) : Complex(-1)));
  }
  (void)expected;
}

TEST(VariationTest, PowerTimesLog) {
  Complex lam(Real(0.3), Real(0.2));
  Complex e = exp(two_pi_i() * lam * -1);
  LogPolynomialGerm v = variation(monomial(lam, 0));
  ASSERT_EQ(v.terms().size(), 1u);
  EXPECT_LT(abs(v.terms()[0].h[0] - (Complex(1) - e)), Real(1e-70));
  // var^p(xi^lam ell^p) leads with (1 - e)^p xi^lam ell^p.
  LogPolynomialGerm w = variation(monomial(lam, 3), 3);
  for (const GermTerm& t : w.terms()) {
    if (t.p == 3) EXPECT_LT(abs(t.h[0] - pow(Complex(1) - e, 3)), Real(1e-70));
    EXPECT_LE(t.p, 3);
  }
}

TEST(VariationTest, ProductRule) {
  LogPolynomialGerm f = monomial(Complex(Real(0.25)), 1) + monomial(Complex(-1), 0, Complex(3));
  LogPolynomialGerm g = monomial(Complex(Real(0.5), Real(-0.1)), 2);
  LogPolynomialGerm lhs = variation(f * g);
  LogPolynomialGerm rhs = variation(f) * g + f * variation(g) - variation(f) * variation(g);
  for (double r : {0.05, 0.2}) {
    for (double a : {-0.3, -2.0, -5.5}) {
      Complex x = lhs.evaluate(Real(r), Real(a));
      Complex y = rhs.evaluate(Real(r), Real(a));
      EXPECT_LT(abs(x - y), Real(1e-60) * max(Real(1), abs(x)));
    }
  }
}

TEST(VariationTest, SampledMatchesClosedForm) {
  LogPolynomialGerm g = monomial(Complex(Real(0.7)), 2, Complex(Real(1.5), Real(2))) + monomial(Complex(-1), 1);
  GermAccessor acc = [&](const Real& r, const Real& a) { return g.evaluate(r, a); };
  GermAccessor sampled = variation(acc);
  LogPolynomialGerm closed = variation(g);
  for (double a : {-0.4, -3.0}) {
    Complex x = sampled(Real(0.1), Real(a));
    Complex y = closed.evaluate(Real(0.1), Real(a));
    EXPECT_LT(abs(x - y), Real(1e-60) * abs(x));
  }
}

TEST(GermTest, MergesCongruentExponents) {
  LogPolynomialGerm g(Complex(0));
  g.add(Complex(Real(-0.75)), 0, constant(Complex(1)));
  g.add(Complex(Real(0.25)), 0, constant(Complex(2)));
  ASSERT_EQ(g.terms().size(), 1u);
  EXPECT_EQ(g.terms()[0].shift, 0);
  EXPECT_TRUE(g.is_simple_moderate());
  LogPolynomialGerm pole(Complex(0));
  pole.add(Complex(-2), 0, constant(Complex(1)));
  EXPECT_FALSE(pole.is_simple_moderate());
}

TEST(MajorTest, ResonantFourByFour) {
  BorelOde ode = column_equation(fixtures::resonant4x4(), 0, 40);
  PrincipalMajor m = extract_principal_major(ode, Complex(1));
  EXPECT_TRUE(m.k(0, 0).is_zero());
  EXPECT_LT(abs(m.k(1, 0) - k2_exact()), Real(1e-8));
  EXPECT_LT(abs(m.k(2, 0) - k3_exact()), Real(1e-8));
  EXPECT_LT(abs(m.k(3, 0) - Complex(1)), Real(1e-8));
  EXPECT_LT(m.radius_agreement, Real(1e-8));
  EXPECT_LT(m.holdout_residual, Real(1e-8));
  // f4: the germ is 1/xi alone.
  const LogPolynomialGerm& g4 = m.germ(3, 0);
  ASSERT_EQ(g4.terms().size(), 1u);
  EXPECT_EQ(g4.terms()[0].p, 0);
  EXPECT_EQ(g4.terms()[0].shift, 0);
  EXPECT_LT(abs(g4.terms()[0].h[0] - Complex(1)), Real(1e-8));
  // f3: the log term is ln(xi)/xi, i.e. 2 pi i ell/xi.
  bool found = false;
  for (const GermTerm& t : m.germ(2, 0).terms()) {
    if (t.p != 1) continue;
    found = true;
    EXPECT_EQ(t.shift, 0);
    EXPECT_LT(abs(t.h[0] - two_pi_i()), Real(1e-8));
  }
  EXPECT_TRUE(found);
  // No singularity in the row with a = 0.
  EXPECT_TRUE(m.germ(0, 0).empty());
  for (const LogPolynomialGerm& g : m.germs) EXPECT_TRUE(g.is_simple_moderate());
}

TEST(ConnectionTest, ResonantDirections) {
  LevelOneSystem sys = fixtures::resonant4x4();
  ConnectionMatrix k0 = connection_matrix(sys, Real(0), 40);
  ASSERT_EQ(k0.omegas.size(), 1u);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 1; c < 4; ++c) EXPECT_TRUE(k0.total(r, c).is_zero());
  EXPECT_TRUE(k0.total(0, 0).is_zero());
  EXPECT_LT(abs(k0.total(1, 0) - k2_exact()), Real(1e-8));
  EXPECT_LT(abs(k0.total(2, 0) - k3_exact()), Real(1e-8));
  EXPECT_LT(abs(k0.total(3, 0) - Complex(1)), Real(1e-8));
  ConnectionMatrix kpi = connection_matrix(sys, pi(), 40);
  EXPECT_TRUE(kpi.total.is_zero());
  ConnectionMatrix kother = connection_matrix(sys, Real(1), 40);
  EXPECT_TRUE(kother.total.is_zero());
  EXPECT_TRUE(kother.omegas.empty());
}

TEST(ConnectionTest, ParallelMatchesSerial) {
  LevelOneSystem sys = fixtures::three_block();
  for (const Real& theta : {Real(0), pi() / 2}) {
    ConnectionMatrix a = connection_matrix(sys, theta, 30);
    ConnectionMatrix b = connection_matrix_serial(sys, theta, 30);
    EXPECT_TRUE(a.total == b.total);
    EXPECT_NO_THROW(assert_connection_pattern(sys, a));
  }
}

TEST(ConnectionTest, PatternViolationDetected) {
  LevelOneSystem sys = fixtures::resonant4x4();
  ConnectionMatrix k = connection_matrix(sys, pi(), 20);
  k.omegas.push_back(Complex(1));
  k.blocks.emplace_back(4, 4);
  k.blocks.back()(0, 1) = Complex(1);
  EXPECT_THROW(assert_connection_pattern(sys, k), NumericalError);
}
