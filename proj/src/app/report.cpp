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
#include "levelone/app/report.hpp"

#include <sstream>

#include "json.hpp"
#include "levelone/core/error.hpp"

namespace levelone {

namespace {

using nlohmann::ordered_json;

class Writer {
 public:
  explicit Writer(long prec) : prec_(prec), digits_(static_cast<int>(mpfr_get_str_ndigits(10, prec))) {}

  ordered_json real(const Real& x) const { return x.rounded(prec_).str(digits_); }
  ordered_json complex(const Complex& z) const { return ordered_json::array({real(z.re()), real(z.im())}); }

  ordered_json complexes(const std::vector<Complex>& v) const {
    ordered_json out = ordered_json::array();
    for (const Complex& z : v) out.push_back(complex(z));
    return out;
  }

  ordered_json matrix(const CMatrix& m) const {
    ordered_json out = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex(m(r, c)));
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  long prec_;
  int digits_;
};

ordered_json diagnostics_json(const std::vector<DiagnosticEntry>& d) {
  ordered_json out = ordered_json::array();
  for (const DiagnosticEntry& e : d) out.push_back({{"key", e.key}, {"value", e.value}});
  return out;
}

ordered_json direction_json(const DirectionReport& d, const Writer& w) {
  ordered_json out;
  out["theta"] = w.real(d.theta);
  out["theta_star"] = w.real(d.theta_star);
  out["omegas"] = w.complexes(d.omegas);
  ordered_json blocks = ordered_json::array();
  for (const ConnectionBlockReport& b : d.k_blocks) blocks.push_back({{"omega", w.complex(b.omega)}, {"k", w.matrix(b.k)}});
  out["k_blocks"] = std::move(blocks);
  out["k_total"] = d.k_total ? w.matrix(*d.k_total) : ordered_json(nullptr);
  ordered_json routes = ordered_json::array();
  for (const RouteReport& r : d.routes) {
    routes.push_back({{"name", r.name},
                      {"c", w.matrix(r.c)},
                      {"residual", w.real(r.residual)},
                      {"off_pattern", w.real(r.off_pattern)},
                      {"quadrature_error", w.real(r.quadrature_error)}});
  }
  out["routes"] = std::move(routes);
  out["route_delta"] = d.route_delta ? w.real(*d.route_delta) : ordered_json(nullptr);
  ordered_json comps = ordered_json::array();
  for (const ComponentReport& c : d.components) {
    comps.push_back({{"omega", w.complex(c.omega)}, {"weight", c.weight}, {"matrix", w.matrix(c.matrix)}});
  }
  out["components"] = std::move(comps);
  out["bridge"] = d.bridge;
  out["diagnostics"] = diagnostics_json(d.diagnostics);
  return out;
}

// Reading side: every accessor names the offending field.
class Reader {
 public:
  [[noreturn]] static void fail(const std::string& field, const std::string& what) {
    throw ValidationError("report field " + field + ": " + what);
  }

  static const ordered_json& at(const ordered_json& obj, const std::string& key, const std::string& field) {
    if (!obj.is_object() || !obj.contains(key)) fail(field, "missing \"" + key + "\"");
    return obj.at(key);
  }

  static const ordered_json& list(const ordered_json& v, const std::string& field) {
    if (!v.is_array()) fail(field, "expected a list");
    return v;
  }

  static std::string string(const ordered_json& v, const std::string& field) {
    if (!v.is_string()) fail(field, "expected a string");
    return v.get<std::string>();
  }

  static Real real(const ordered_json& v, const std::string& field) {
    try {
      return Real::parse(string(v, field));
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }

  static Complex complex(const ordered_json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2) fail(field, "expected [re, im]");
    return {real(v[0], field), real(v[1], field)};
  }

  static std::vector<Complex> complexes(const ordered_json& v, const std::string& field) {
    std::vector<Complex> out;
    for (const auto& z : list(v, field)) out.push_back(complex(z, field));
    return out;
  }

  static CMatrix matrix(const ordered_json& v, const std::string& field) {
    list(v, field);
    const std::size_t rows = v.size();
    const std::size_t cols = rows == 0 ? 0 : list(v[0], field).size();
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (list(v[r], field).size() != cols) fail(field, "ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex(v[r][c], field);
    }
    return m;
  }

  static WeightVector weight(const ordered_json& v, const std::string& field) {
    WeightVector out;
    for (const auto& x : list(v, field)) {
      if (!x.is_number_integer()) fail(field, "expected integers");
      out.push_back(x.get<long>());
    }
    return out;
  }

  static std::vector<DiagnosticEntry> diagnostics(const ordered_json& v, const std::string& field) {
    std::vector<DiagnosticEntry> out;
    for (const auto& e : list(v, field)) out.push_back({string(at(e, "key", field), field), string(at(e, "value", field), field)});
    return out;
  }
};

DirectionReport parse_direction(const ordered_json& v, const std::string& f) {
  using R = Reader;
  DirectionReport d;
  d.theta = R::real(R::at(v, "theta", f), f + ".theta");
  d.theta_star = R::real(R::at(v, "theta_star", f), f + ".theta_star");
  d.omegas = R::complexes(R::at(v, "omegas", f), f + ".omegas");
  for (const auto& b : R::list(R::at(v, "k_blocks", f), f + ".k_blocks")) {
    d.k_blocks.push_back({R::complex(R::at(b, "omega", f), f + ".k_blocks.omega"), R::matrix(R::at(b, "k", f), f + ".k_blocks.k")});
  }
  const auto& kt = R::at(v, "k_total", f);
  if (!kt.is_null()) d.k_total = R::matrix(kt, f + ".k_total");
  for (const auto& r : R::list(R::at(v, "routes", f), f + ".routes")) {
    const std::string g = f + ".routes";
    d.routes.push_back({R::string(R::at(r, "name", g), g + ".name"), R::matrix(R::at(r, "c", g), g + ".c"),
                        R::real(R::at(r, "residual", g), g + ".residual"),
                        R::real(R::at(r, "off_pattern", g), g + ".off_pattern"),
                        R::real(R::at(r, "quadrature_error", g), g + ".quadrature_error")});
  }
  const auto& rd = R::at(v, "route_delta", f);
  if (!rd.is_null()) d.route_delta = R::real(rd, f + ".route_delta");
  for (const auto& c : R::list(R::at(v, "components", f), f + ".components")) {
    const std::string g = f + ".components";
    d.components.push_back({R::complex(R::at(c, "omega", g), g + ".omega"), R::weight(R::at(c, "weight", g), g + ".weight"),
                            R::matrix(R::at(c, "matrix", g), g + ".matrix")});
  }
  for (const auto& line : R::list(R::at(v, "bridge", f), f + ".bridge")) d.bridge.push_back(R::string(line, f + ".bridge"));
  d.diagnostics = R::diagnostics(R::at(v, "diagnostics", f), f + ".diagnostics");
  return d;
}

// Text output chops values below 2^{-prec/2}, the noise level of the computed entries.
thread_local Real t_chop;

std::string show(const Real& x) {
  if (abs(x) < t_chop) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.12Rg", x.raw());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string show(const Complex& z) {
  const bool re = abs(z.re()) >= t_chop, im = abs(z.im()) >= t_chop;
  if (!im) return show(z.re());
  std::string i = show(abs(z.im())) + "i";
  if (!re) return (z.im().sign() < 0 ? "-" : "") + i;
  return show(z.re()) + (z.im().sign() < 0 ? "-" : "+") + i;
}

std::string show_short(const Real& x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.3Rg", x.raw());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

void show_matrix(std::ostringstream& os, const std::string& indent, const CMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "  " : "") << show(m(r, c));
    os << "\n";
  }
}

std::string show_weight(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace

std::string report_json(const Report& report) {
  Writer w(report.precision);
  ordered_json out;
  out["schema_version"] = report.schema_version;
  out["mode"] = report.mode;
  out["structural"] = report.structural;
  out["dimension"] = report.dimension;
  out["order"] = report.order;
  out["precision"] = report.precision;
  out["route"] = report.route;
  out["block_ids"] = report.block_ids;
  out["lattice_basis"] = w.complexes(report.lattice_basis);
  out["weights"] = report.weights;
  out["series"] = w.complexes(report.series);
  out["diagnostics"] = diagnostics_json(report.diagnostics);
  ordered_json dirs = ordered_json::array();
  for (const DirectionReport& d : report.directions) dirs.push_back(direction_json(d, w));
  out["directions"] = std::move(dirs);
  return out.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  using R = Reader;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(std::string("report is not valid JSON: ") + e.what());
  }
  Report r;
  const auto& version = R::at(doc, "schema_version", "schema_version");
  if (!version.is_number_integer() || version.get<int>() != 1) R::fail("schema_version", "unsupported version");
  const auto& prec = R::at(doc, "precision", "precision");
  if (!prec.is_number_integer() || prec.get<long>() < 16) R::fail("precision", "expected an integer >= 16");
  r.precision = prec.get<long>();
  PrecisionScope scope(r.precision);
  r.mode = R::string(R::at(doc, "mode", "mode"), "mode");
  const auto& structural = R::at(doc, "structural", "structural");
  if (!structural.is_boolean()) R::fail("structural", "expected true or false");
  r.structural = structural.get<bool>();
  const auto& dim = R::at(doc, "dimension", "dimension");
  const auto& order = R::at(doc, "order", "order");
  if (!dim.is_number_unsigned() || !order.is_number_integer()) R::fail("dimension", "expected integers");
  r.dimension = dim.get<std::size_t>();
  r.order = order.get<int>();
  r.route = R::string(R::at(doc, "route", "route"), "route");
  for (const auto& id : R::list(R::at(doc, "block_ids", "block_ids"), "block_ids")) r.block_ids.push_back(R::string(id, "block_ids"));
  r.lattice_basis = R::complexes(R::at(doc, "lattice_basis", "lattice_basis"), "lattice_basis");
  for (const auto& w : R::list(R::at(doc, "weights", "weights"), "weights")) r.weights.push_back(R::weight(w, "weights"));
  r.series = R::complexes(R::at(doc, "series", "series"), "series");
  r.diagnostics = R::diagnostics(R::at(doc, "diagnostics", "diagnostics"), "diagnostics");
  const auto& dirs = R::list(R::at(doc, "directions", "directions"), "directions");
  for (std::size_t i = 0; i < dirs.size(); ++i) r.directions.push_back(parse_direction(dirs[i], "directions[" + std::to_string(i) + "]"));
  return r;
}

std::string report_text(const Report& report) {
  PrecisionScope scope(report.precision);
  t_chop = epsilon(report.precision / 2);
  std::ostringstream os;
  os << "mode " << report.mode << (report.structural ? " (structural)" : "") << ", dimension " << report.dimension
     << ", order " << report.order << ", precision " << report.precision << " bits, route " << report.route << "\n";
  if (!report.lattice_basis.empty()) {
    os << "lattice basis:";
    for (const Complex& b : report.lattice_basis) os << " " << show(b);
    os << "\n";
    for (std::size_t j = 0; j < report.weights.size(); ++j) {
      os << "  " << (j < report.block_ids.size() ? report.block_ids[j] : std::to_string(j + 1)) << " "
         << show_weight(report.weights[j]) << "\n";
    }
  }
  if (!report.series.empty()) {
    os << "series y:\n";
    for (std::size_t m = 0; m < report.series.size(); ++m) os << "  y" << m << " = " << show(report.series[m]) << "\n";
  }
  for (const DiagnosticEntry& e : report.diagnostics) os << e.key << ": " << e.value << "\n";
  for (const DirectionReport& d : report.directions) {
    os << "\ndirection theta = " << show(d.theta) << " (theta* = " << show(d.theta_star) << ")\n";
    if (d.omegas.empty()) {
      os << "  no Stokes values on this ray\n";
      continue;
    }
    os << "  Stokes values:";
    for (const Complex& w : d.omegas) os << " " << show(w);
    os << "\n";
    if (d.k_total) {
      os << "  K+:\n";
      show_matrix(os, "    ", *d.k_total);
    }
    for (const RouteReport& r : d.routes) {
      os << "  C (" << r.name << "), residual " << show_short(r.residual) << ", off-pattern " << show_short(r.off_pattern)
         << ", quadrature " << show_short(r.quadrature_error) << ":\n";
      show_matrix(os, "    ", r.c);
    }
    if (d.route_delta) os << "  route delta " << show_short(*d.route_delta) << "\n";
    for (const ComponentReport& c : d.components) {
      os << "  alien derivation at " << show(c.omega) << " weight " << show_weight(c.weight) << ":\n";
      show_matrix(os, "    ", c.matrix);
    }
    for (const std::string& line : d.bridge) os << "  " << line << "\n";
    for (const DiagnosticEntry& e : d.diagnostics) os << "  " << e.key << ": " << e.value << "\n";
  }
  return os.str();
}

}  // namespace levelone
