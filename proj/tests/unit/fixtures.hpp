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

#include "levelone/system/system.hpp"

namespace fixtures {

using namespace levelone;

inline JordanBlockSpec block(Complex a, Complex lam, int size) {
  JordanBlockSpec b;
  b.a = std::move(a);
  b.lam = std::move(lam);
  b.size = size;
  return b;
}

// x^2 Y' = [[0,0,0,0],[x^2,1,x,0],[x^2,0,1,x],[x^2,0,0,1]] Y
inline LevelOneSystem resonant4x4() {
  CMatrix b1(4, 4), b2(4, 4);
  for (int r = 1; r < 4; ++r) b2(r, 0) = Complex(1);
  return LevelOneSystem({block(0, 0, 1), block(1, 0, 3)}, {b1, b2});
}

// x^2 Y' = [[0,0],[x^2,1]] Y, whose entry f satisfies x^2 f' - f = x^2.
inline LevelOneSystem euler2x2() {
  CMatrix b1(2, 2), b2(2, 2);
  b2(1, 0) = Complex(1);
  return LevelOneSystem({block(0, 0, 1), block(1, 0, 1)}, {b1, b2});
}

// Generic coupling with a non-integer exponent difference.
inline LevelOneSystem coupled2x2() {
  CMatrix b1(2, 2), b2(2, 2);
  b1(0, 1) = Complex(Real(0.5));
  b1(1, 0) = Complex(1);
  b2(0, 0) = Complex(Real(0.25));
  b2(1, 1) = Complex(Real(-0.5));
  return LevelOneSystem({block(0, 0, 1), block(1, Complex(Real(0.25)), 1)}, {b1, b2});
}

// Three distinct Stokes values with a Jordan block and two directions.
inline LevelOneSystem three_block() {
  CMatrix b1(4, 4), b2(4, 4);
  b1(1, 0) = Complex(1);
  b1(3, 0) = Complex(Real(0.5), Real(0.25));
  b1(0, 3) = Complex(Real(-0.25));
  b1(3, 2) = Complex(Real(0.5));
  b1(1, 3) = Complex(Real(0.75));
  b2(2, 0) = Complex(1);
  b2(0, 0) = Complex(Real(0.5));
  b2(2, 2) = Complex(Real(-0.25));
  return LevelOneSystem({block(0, 0, 1), block(1, Complex(Real(0.375)), 2), block(Complex(Real(0), Real(1.5)), Complex(Real(0.125)), 1)},
                        {b1, b2});
}

// Thirteen size-one blocks with a_1 = 0 and a_j = 12 zeta^{j-2}, zeta = e^{i pi/6}; no coupling.
inline LevelOneSystem hypergeom13() {
  std::vector<JordanBlockSpec> blocks;
  Real t = pi() / 6;
  blocks.push_back(block(0, Complex(Real(0.3)), 1));
  blocks.back().lambda_symbol = "12mu";
  for (int j = 2; j <= 13; ++j) {
    blocks.push_back(block(polar(Real(12), t * (j - 2)), Complex(Real(0.1)), 1));
    blocks.back().lambda_symbol = "-12lambda";
  }
  return LevelOneSystem(blocks, {});
}

inline std::vector<Complex> hypergeom13_basis() {
  Real t = pi() / 6;
  return {Complex(12), polar(Real(12), t), polar(Real(12), t * 2), polar(Real(12), t * 3)};
}

}  // namespace fixtures
