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
#include "levelone/app/pipeline.hpp"

#include <cstdlib>
#include <sstream>

#include "levelone/alien/alien.hpp"
#include "levelone/borel/connection.hpp"
#include "levelone/core/error.hpp"
#include "levelone/formal/homological.hpp"
#include "levelone/stokes/stokes.hpp"

namespace levelone {

namespace {

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::validation) throw ValidationError(name + ": " + e.what());
    throw NumericalError(name + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(name + ": " + e.what());
  }
}

// Report values are stored at the job precision so that they survive a JSON round trip.
Real fix(const Real& x) { return x.rounded(working_precision()); }
Complex fix(const Complex& z) { return z.rounded(working_precision()); }

CMatrix fix(const CMatrix& m) {
  CMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = fix(m(i, j));
  return r;
}

std::vector<Complex> fix(const std::vector<Complex>& v) {
  std::vector<Complex> out;
  for (const Complex& z : v) out.push_back(fix(z));
  return out;
}

std::string brief(const Real& x) { return x.str(3); }

std::vector<Real> resolve_directions(const JobConfig& cfg, const LevelOneSystem& sys) {
  std::vector<Real> out;
  if (cfg.all_directions) {
    for (const Direction& d : stokes_values(sys).directions) out.push_back(d.theta);
    return out;
  }
  for (double deg : cfg.directions) out.push_back(principal_angle(Real(deg) * pi() / 180));
  return out;
}

void add_components(DirectionReport& d, const std::vector<AlienComponent>& comps, const LevelOneSystem& sys) {
  for (const AlienComponent& c : comps) d.components.push_back({fix(c.omega), c.weight, fix(c.matrix)});
  for (const BridgeRelation& b : bridge_report(comps, sys)) {
    std::istringstream lines(b.text);
    for (std::string line; std::getline(lines, line);) d.bridge.push_back(line);
  }
}

Matrix<GaussianRational> structural_stokes(const ParsedInput& in, const Real& theta) {
  const LevelOneSystem& sys = in.system;
  const std::vector<Complex> on_ray = omegas_on_ray(sys, theta);
  Matrix<GaussianRational> c(sys.dimension(), sys.dimension());
  for (const StokesOverride& o : in.overrides) {
    const Complex omega = sys.block(sys.block_of_row(o.row - 1)).a - sys.block(sys.block_of_row(o.col - 1)).a;
    if (same_value(omega, Complex(0))) throw ValidationError("override " + o.name + " couples blocks with equal a");
    for (const Complex& w : on_ray)
      if (same_value(w, omega)) c(o.row - 1, o.col - 1) = o.value;
  }
  return c;
}

DirectionReport structural_direction(const ParsedInput& in, const TorusGrading& grading, const Real& theta) {
  DirectionReport d;
  d.theta = fix(theta);
  d.theta_star = fix(theta_star(theta));
  d.omegas = fix(omegas_on_ray(in.system, theta));
  if (d.omegas.empty()) return d;
  Matrix<GaussianRational> c = stage("structural", [&] { return structural_stokes(in, theta); });
  d.routes.push_back({"overrides", fix(to_complex(c)), Real(0), Real(0), Real(0)});
  auto exact = stage("alien", [&] { return alien_derivations(c, in.system, grading, theta); });
  std::vector<AlienComponent> comps;
  for (const ExactAlienComponent& e : exact) comps.push_back({e.omega, e.theta_star, e.weight, to_complex(e.matrix)});
  stage("bridge", [&] { add_components(d, comps, in.system); });
  return d;
}

DirectionReport system_direction(const JobConfig& cfg, const LevelOneSystem& sys, const TorusGrading& grading,
                                 const Real& theta) {
  DirectionReport d;
  d.theta = fix(theta);
  d.theta_star = fix(theta_star(theta));
  d.omegas = fix(omegas_on_ray(sys, theta));
  if (d.omegas.empty()) return d;
  std::optional<CMatrix> primary;
  if (cfg.route != Route::laplace) {
    ConnectionMatrix k = stage("connection", [&] { return connection_matrix(sys, theta, cfg.order); });
    for (std::size_t i = 0; i < k.omegas.size(); ++i) d.k_blocks.push_back({fix(k.omegas[i]), fix(k.blocks[i])});
    d.k_total = fix(k.total);
    for (const ConnectionBlock& b : k.details) {
      const std::string key = "major omega=" + b.omega.str(6) + " column=" + std::to_string(b.column_block + 1);
      d.diagnostics.push_back({key + " fit_residual", brief(b.major.fit_residual)});
      d.diagnostics.push_back({key + " holdout_residual", brief(b.major.holdout_residual)});
      d.diagnostics.push_back({key + " radius_agreement", brief(b.major.radius_agreement)});
      d.diagnostics.push_back({key + " sheets", std::to_string(b.major.sheets)});
    }
    StokesMatrix s = stage("stokes", [&] { return connection_to_stokes(k, sys); });
    d.routes.push_back({"borel", fix(s.c), fix(s.residual), fix(s.off_pattern), fix(s.quadrature_error)});
    primary = s.c;
  }
  if (cfg.route != Route::borel) {
    StokesMatrix s = stage("laplace", [&] { return stokes_from_jumps(sys, theta, cfg.order); });
    d.routes.push_back({"laplace", fix(s.c), fix(s.residual), fix(s.off_pattern), fix(s.quadrature_error)});
    if (!primary) primary = s.c;
  }
  if (d.routes.size() == 2) {
    const CMatrix& a = d.routes[0].c;
    d.route_delta = fix(max_abs(a - d.routes[1].c) / max(Real(1), max_abs(a)));
  }
  auto comps = stage("alien", [&] { return alien_derivations(*primary, sys, grading, theta); });
  stage("bridge", [&] { add_components(d, comps, sys); });
  return d;
}

}  // namespace

long precision_from_env() {
  const char* v = std::getenv("LEVELONE_PRECISION");
  if (v == nullptr || *v == '\0') return 256;
  char* end = nullptr;
  long bits = std::strtol(v, &end, 10);
  if (*end != '\0' || bits < 16 || bits > 1L << 20) throw ValidationError("LEVELONE_PRECISION must be an integer in [16, 2^20]");
  return bits;
}

std::string route_name(Route route) {
  switch (route) {
    case Route::laplace:
      return "laplace";
    case Route::borel:
      return "borel";
    case Route::both:
      break;
  }
  return "both";
}

Route parse_route(const std::string& name) {
  if (name == "laplace") return Route::laplace;
  if (name == "borel") return Route::borel;
  if (name == "both") return Route::both;
  throw ValidationError("unknown route \"" + name + "\"");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "text") return OutputFormat::text;
  throw ValidationError("unknown format \"" + name + "\"");
}

Report run_pipeline(const JobConfig& cfg) {
  if (cfg.precision < 16) throw ValidationError("precision must be at least 16 bits");
  if (cfg.order < 1) throw ValidationError("order must be positive");
  if (!cfg.all_directions && cfg.directions.empty()) throw ValidationError("no direction requested");
  PrecisionScope scope(cfg.precision);
  ParsedInput in = stage("input", [&] { return cfg.input_text ? parse_input(*cfg.input_text) : parse_input_file(cfg.input); });
  if (cfg.mode && *cfg.mode != in.mode) throw ValidationError("input: mode does not match the requested mode");
  const LevelOneSystem& sys = in.system;

  Report r;
  r.mode = in.mode == InputMode::equation ? "equation" : "system";
  r.structural = in.structural;
  r.dimension = sys.dimension();
  r.order = cfg.order;
  r.precision = cfg.precision;
  r.route = in.structural ? "structural" : route_name(cfg.route);
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    r.block_ids.push_back(sys.block(j).id.empty() ? std::to_string(j + 1) : sys.block(j).id);
  }
  TorusGrading grading = stage("lattice", [&] { return lattice_basis(sys, in.lattice_basis); });
  r.lattice_basis = fix(grading.basis);
  for (std::size_t j = 0; j < sys.block_count(); ++j) {
    r.weights.push_back(stage("lattice", [&] { return weights_of(sys, j, grading); }));
  }
  if (!in.structural) {
    BlockMatrixSeries f = stage("series", [&] { return solve_first_block(sys, cfg.order); });
    if (in.mode == InputMode::equation) r.series = fix(f.entry(1, 0).coeffs());
    r.diagnostics.push_back({"homological_residual", brief(homological_residual(sys, f))});
  }
  for (const Real& theta : resolve_directions(cfg, sys)) {
    r.directions.push_back(in.structural ? structural_direction(in, grading, theta)
                                         : system_direction(cfg, sys, grading, theta));
  }
  return r;
}

std::string render(const Report& report, OutputFormat format) {
  return format == OutputFormat::json ? report_json(report) : report_text(report);
}

}  // namespace levelone
