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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "levelone/core/gaussian_rational.hpp"
#include "levelone/system/system.hpp"

namespace levelone {

enum class InputMode { system, equation };

/// p1 x^2 y' + p0(x) y = r(x) with constant p1 != 0 and r(0) = 0; p0[i], r[i] multiply x^i.
struct ScalarEquation {
  Complex p1;
  std::vector<Complex> p0;
  std::vector<Complex> r;
};

/// Named Stokes multiplier c^{(row, col)} of a structural input, 1-based, kept exact.
struct StokesOverride {
  std::string name;
  std::size_t row = 0;
  std::size_t col = 0;
  GaussianRational value;
};

struct ParsedInput {
  InputMode mode = InputMode::system;
  // Blocks and Stokes values only; no coupling is analyzed.
  bool structural = false;
  LevelOneSystem system;
  std::optional<ScalarEquation> equation;
  std::optional<std::vector<Complex>> lattice_basis;
  std::vector<StokesOverride> overrides;
};

// Exact value of a decimal string such as "-1.25e-3".
std::optional<mpq_class> parse_decimal(const std::string& text);

/// Parses and validates an input document. Throws ValidationError naming the offending field.
ParsedInput parse_input(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

// The prepared 2x2 system of Y = (1, y).
LevelOneSystem equation_system(const ScalarEquation& eq);

}  // namespace levelone
