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

#include "levelone/core/kappa.hpp"
#include "levelone/core/linalg.hpp"
#include "levelone/core/nilpotent.hpp"
#include "levelone/core/series.hpp"

using namespace levelone;

namespace {

Complex cx(const char* re, const char* im) { return Complex::parse(re, im); }

Real rel_err(const Complex& got, const Complex& want) { return abs(got - want) / abs(want); }

TruncatedSeries poly(std::initializer_list<long> c, Variable v = Variable::x) {
  std::vector<Complex> cs;
  for (long x : c) cs.emplace_back(x);
  return {v, cs};
}

}  // namespace

TEST(RealTest, ParsePrintRoundTrip) {
  Real a = Real::parse("-3.14159265358979323846264338327950288419716939937510582097494459");
  Real b = Real::parse(a.str());
  EXPECT_TRUE(a == b);
  EXPECT_EQ(Real(0).str(), "0");
  EXPECT_THROW(Real::parse("1.2.3"), std::invalid_argument);
  EXPECT_THROW(Real::parse(""), std::invalid_argument);
}

TEST(RealTest, PrecisionIsMinimumOfOperands) {
  Real a = Real(1).rounded(100);
  Real b = Real(3).rounded(300);
  EXPECT_EQ((a / b).precision(), 100);
  EXPECT_EQ((b * 7).precision(), 300);
  PrecisionScope scope(512);
  EXPECT_EQ(Real(2).precision(), 512);
}

TEST(ComplexTest, FieldIdentities) {
  Complex z = cx("1.5", "-2.25");
  Complex w = cx("-0.75", "3.5");
  Real tol = epsilon(240);
  EXPECT_LT(abs((z * w) / w - z), tol);
  EXPECT_LT(abs(exp(log(z)) - z), tol);
  EXPECT_LT(abs(sqrt(w) * sqrt(w) - w), tol);
  EXPECT_LT(abs(pow(z, 5) - z * z * z * z * z), tol * 1000);
  Complex e = exp(Complex(Real(0), pi()));
  EXPECT_LT(abs(e + Complex(1)), tol);
}

TEST(SeriesTest, PolynomialProducts) {
  auto p = poly({1, 1, 0, 0}) * poly({1, -1, 0, 0});
  EXPECT_TRUE(p[0] == Complex(1));
  EXPECT_TRUE(p[1].is_zero());
  EXPECT_TRUE(p[2] == Complex(-1));
  EXPECT_TRUE(p[3].is_zero());
  auto a = poly({2, -3, 5, 7});
  auto one = poly({1, 0, 0, 0});
  auto q = a * one;
  for (std::size_t m = 0; m <= 3; ++m) EXPECT_TRUE(q[m] == a[m]);
}

TEST(SeriesTest, GeometricSquareByHand) {
  auto g = poly({1, 1, 1, 1, 1, 1});
  auto s = g * g;
  for (long m = 0; m <= 5; ++m) EXPECT_TRUE(s[m] == Complex(m + 1)) << m;
}

TEST(SeriesTest, TruncatesToMinOrderAndChecksVariable) {
  auto s = poly({1, 2, 3}) * poly({1, 1, 1, 1, 1});
  EXPECT_EQ(s.order(), 2u);
  EXPECT_THROW(poly({1, 2}) + poly({1, 2}, Variable::xi), ValidationError);
}

TEST(SeriesTest, RandomRingLaws) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  auto rand_series = [&] {
    std::vector<Complex> c;
    for (int m = 0; m <= 12; ++m) c.emplace_back(Real(d(rng)) / 7, Real(d(rng)) / 3);
    return TruncatedSeries(Variable::x, c);
  };
  Real tol = epsilon(230);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = rand_series(), b = rand_series(), c = rand_series();
    auto l = (a * b) * c, r = a * (b * c);
    auto ab = a * b, ba = b * a;
    for (std::size_t m = 0; m <= 12; ++m) {
      EXPECT_LE(abs(l[m] - r[m]), tol * (1 + abs(l[m])));
      EXPECT_LE(abs(ab[m] - ba[m]), tol * (1 + abs(ab[m])));
    }
    auto lin = borel_coeffs(poly({0, 0}) + (a + b) * poly({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    auto sep = borel_coeffs(a * poly({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})) +
               borel_coeffs(b * poly({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    for (std::size_t m = 0; m <= lin.order(); ++m) EXPECT_LE(abs(lin[m] - sep[m]), tol);
  }
}

TEST(BorelCoeffsTest, SmallCases) {
  auto b = borel_coeffs(poly({0, 1, 0, 0}));
  EXPECT_TRUE(b[0] == Complex(1));
  EXPECT_TRUE(b[1].is_zero());
  auto c = borel_coeffs(poly({0, 0, 0, 1}));
  EXPECT_TRUE(c[2] == Complex(Real(0.5)));
  EXPECT_EQ(c.variable(), Variable::xi);
  EXPECT_THROW(borel_coeffs(poly({1, 1})), ValidationError);
}

TEST(BorelCoeffsTest, FactorialSeriesBecomesGeometric) {
  // -sum_{m>=2} (m-1)! x^m
  std::vector<Complex> c(21, Complex(0));
  Real f(1);
  for (int m = 2; m <= 20; ++m) {
    f = f * (m - 1);
    c[m] = Complex(-f);
  }
  auto b = borel_coeffs(TruncatedSeries(Variable::x, c));
  EXPECT_TRUE(b[0].is_zero());
  for (std::size_t m = 1; m <= b.order(); ++m) EXPECT_TRUE(b[m] == Complex(-1)) << m;
}

TEST(KappaTest, ClosedFormsAtZero) {
  Real p = pi(), g = euler_gamma();
  Complex k0 = kappa(0, Complex(0));
  Complex k1 = kappa(1, Complex(0));
  Complex k2 = kappa(2, Complex(0));
  Complex w0(Real(0), 2 * p);
  Complex w1(2 * p * p, -2 * p * g);
  Complex w2(-4 * p * p * g, -7 * p * p * p / 3 + 2 * p * g * g);
  Real tol = epsilon(240);
  EXPECT_LT(rel_err(k0, w0), tol);
  EXPECT_LT(rel_err(k1, w1), tol);
  EXPECT_LT(rel_err(k2, w2), tol);
}

TEST(KappaTest, IndependentHighPrecisionValues) {
  struct Row { const char* lre; const char* lim; int p; const char* re; const char* im; };
  const Row rows[] = {
      {"0.25", "0", 2, "-65.46058747628256683221115466293955095664", "-15.98794291718471542807332339429437776365"},
      {"0.25", "0", 3, "-36.26248147927329059501601359742341375892", "281.7051769134724185408778424516561416167"},
      {"0.5", "0.1", 1, "-12.6487642268533661147103692138688951743", "-15.8609259941070484461703236226991738691"},
      {"0.5", "0.1", 3, "359.4101761072344762746807314108426817476", "222.5362830444673744127704841204712008804"},
      {"-0.7", "0", 0, "-5.594306635325877116191413285094626588639", "-4.06450168526682730335129372787704200499"},
      {"-0.7", "0", 2, "54.08197305089242014200198776425880155179", "50.49281712104449151569542103568166611565"},
      {"0.9", "-0.35", 3, "16.52520255454229251337498524002617851112", "-34.13669221473758167981591650446323127384"},
  };
  for (const Row& r : rows) {
    Complex got = kappa(r.p, cx(r.lre, r.lim));
    EXPECT_LT(rel_err(got, cx(r.re, r.im)), Real(1e-36)) << r.lre << " " << r.p;
  }
}

TEST(KappaTest, AgreesWithFiniteDifferences) {
  // Central differences of kappa_{p-1} approximate kappa_p.
  Complex lam = cx("0.3", "0.15");
  Real h = Real::parse("1e-12");
  for (int p = 1; p <= 4; ++p) {
    Complex up = kappa(p - 1, lam + Complex(h));
    Complex dn = kappa(p - 1, lam - Complex(h));
    Complex fd = (up - dn) / (2 * h);
    EXPECT_LT(rel_err(fd, kappa(p, lam)), Real(1e-8)) << p;
  }
}

TEST(KappaTest, EntireAtPositiveIntegers) {
  // 1/Gamma(1-t) vanishes at t = 1, so kappa_0(1) = 0 while kappa_1(1) does not.
  auto k = kappa_table(1, Complex(1));
  EXPECT_LT(abs(k[0]), epsilon(230));
  // d/dt [e^{-i pi t}/Gamma(1-t)] at t=1 equals -e^{-i pi} = 1 (residue structure of Gamma at 0).
  EXPECT_LT(abs(k[1] - Complex(Real(0), 2 * pi())), epsilon(230));
}

TEST(NilpotentTest, TrivialCases) {
  auto id = CMatrix::identity(4);
  EXPECT_TRUE(max_abs(nilpotent_log(id)).is_zero());
  CMatrix n(3, 3);
  n(0, 2) = Complex(Real(2), Real(-1));
  auto l = nilpotent_log(CMatrix::identity(3) + n);
  EXPECT_TRUE(l == n);
  CMatrix bad = CMatrix::identity(2);
  EXPECT_THROW(NilpotentMatrix<Complex>::certify(bad), NumericalError);
}

TEST(NilpotentTest, ThirteenByThirteenPatternExact) {
  using Q = GaussianRational;
  Matrix<Q> m = Matrix<Q>::identity(13);
  Q c(mpq_class(3, 7), mpq_class(-2)), d(mpq_class(5, 11), mpq_class(1, 3)), e(mpq_class(-9, 4));
  m(1, 0) = c;  // E_{2,1}
  m(0, 7) = d;  // E_{1,8}
  m(1, 7) = e;  // E_{2,8}
  auto l = nilpotent_log(m);
  EXPECT_TRUE(l(1, 7) == e - c * d / 2);
  EXPECT_TRUE(l(1, 0) == c);
  EXPECT_TRUE(l(0, 7) == d);
  EXPECT_TRUE(nilpotent_exp(l) == m);
}

TEST(NilpotentTest, ExpLogRoundTripRandomUpperTriangular) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 16);
  const Real tol = epsilon(working_precision() - 16);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = dim(rng);
    CMatrix nm(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) nm(i, j) = Complex(Real(u(rng)), Real(u(rng)));
    CMatrix m = CMatrix::identity(n) + nm;
    CMatrix back = nilpotent_exp(nilpotent_log(m));
    EXPECT_LE(max_abs(back - m), tol * max(Real(1), max_abs(m))) << n;
  }
}

TEST(VariationIdentityTest, LoopDifferenceOfPower) {
  Complex lam = cx("0.37", "0.21");
  Real r = Real::parse("0.3");
  Real two_pi = 2 * pi();
  for (double a : {-0.1, -1.7, -3.0, -5.9}) {
    Real alpha(a);
    Complex direct = pow_arg(r, alpha, lam) - pow_arg(r, alpha - two_pi, lam);
    Complex formula = (Complex(1) - exp(Complex(Real(0), -two_pi) * lam)) * pow_arg(r, alpha, lam);
    EXPECT_LT(abs(direct - formula), epsilon(240));
  }
}
