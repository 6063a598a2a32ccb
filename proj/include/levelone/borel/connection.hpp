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

#include "levelone/borel/germ.hpp"
#include "levelone/borel/ode.hpp"
#include "levelone/borel/path.hpp"

namespace levelone {

struct MajorOptions {
  // Ring samples per sheet.
  int angles = 24;
  // Ring radii as fractions of the clearance; the first is fitted, the second checks it.
  double primary_radius = 0.25;
  double check_radius = 0.125;
  // Sheets beyond the number of model unknowns.
  int extra_sheets = 2;
  // Largest Laurent index kept in the germs.
  int laurent_max = 15;
  double tolerance = 1e-8;
};

/// Principal major of the first column block at a singular point omega.
struct PrincipalMajor {
  Complex omega;
  Real theta_star;
  Real clearance;
  // Coefficient k of xi^{lam_j - 1}, rows x cols of the column study; zero where a_j != omega.
  CMatrix k;
  // Germs per entry, row-major.
  std::vector<LogPolynomialGerm> germs;
  std::size_t cols = 0;
  // Exponent classes and log bound of the model.
  std::vector<Complex> classes;
  int log_bound = 0;
  int sheets = 0;
  Real fit_residual;
  Real holdout_residual;
  Real radius_agreement;
  PathSpec path;

  const LogPolynomialGerm& germ(std::size_t r, std::size_t c) const { return germs[r * cols + c]; }
};

/// Continues g along gamma+ to omega, samples rings on several sheets, fits the finite
/// log-power model per angle and reads the coefficients off the Laurent expansions.
/// Throws NumericalError when a residual or the radius agreement exceeds the tolerance.
PrincipalMajor extract_principal_major(const BorelOde& ode, const Complex& omega, const MajorOptions& opts = {});

struct ConnectionBlock {
  Complex omega;
  std::size_t column_block = 0;
  PrincipalMajor major;
};

/// K+ in direction theta: one n x n block per Stokes value and their sum.
struct ConnectionMatrix {
  Real theta;
  std::vector<Complex> omegas;
  std::vector<CMatrix> blocks;
  CMatrix total;
  std::vector<ConnectionBlock> details;

  // Block of omega, or nullptr.
  const CMatrix* block(const Complex& omega) const;
};

ConnectionMatrix connection_matrix(const LevelOneSystem& sys, const Real& theta, int order,
                                   const MajorOptions& opts = {});
// Serial reference of the loop over column blocks.
ConnectionMatrix connection_matrix_serial(const LevelOneSystem& sys, const Real& theta, int order,
                                          const MajorOptions& opts = {});

// Throws NumericalError if an entry of a block sits where a_j - a_k differs from its omega.
void assert_connection_pattern(const LevelOneSystem& sys, const ConnectionMatrix& k);

// Borel equation of column block k, seeded by the formal series of the given order.
BorelOde column_equation(const LevelOneSystem& sys, std::size_t k, int order);

}  // namespace levelone
