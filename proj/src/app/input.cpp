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
#include "levelone/app/input.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "levelone/core/error.hpp"

namespace levelone {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("field " + field + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& field) {
  if (!obj.is_object() || !obj.contains(key)) fail(field, "missing \"" + key + "\"");
  return obj.at(key);
}

Real decimal(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "numbers must be decimal strings");
  const std::string s = v.get<std::string>();
  if (!parse_decimal(s)) fail(field, "not a decimal number: \"" + s + "\"");
  return Real::parse(s);
}

Complex complex_value(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) fail(field, "complex numbers are [re, im] pairs");
  return {decimal(v[0], field + "[0]"), decimal(v[1], field + "[1]")};
}

GaussianRational exact_value(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
    fail(field, "complex numbers are [re, im] pairs of decimal strings");
  }
  auto re = parse_decimal(v[0].get<std::string>());
  auto im = parse_decimal(v[1].get<std::string>());
  if (!re || !im) fail(field, "not a decimal number");
  return GaussianRational(*re, *im);
}

std::vector<Complex> complex_list(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected a list of [re, im] pairs");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(complex_value(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

long integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  return v.get<long>();
}

std::vector<JordanBlockSpec> parse_blocks(const json& doc) {
  const json& arr = member(doc, "blocks", "blocks");
  if (!arr.is_array() || arr.empty()) fail("blocks", "expected a nonempty list");
  std::vector<JordanBlockSpec> blocks;
  std::set<std::string> ids;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    const std::string f = "blocks[" + std::to_string(j) + "]";
    const json& b = arr[j];
    JordanBlockSpec spec;
    spec.a = complex_value(member(b, "a", f), f + ".a");
    spec.lam = complex_value(member(b, "lambda", f), f + ".lambda");
    long size = integer(member(b, "size", f), f + ".size");
    if (size < 1) fail(f + ".size", "must be positive");
    spec.size = static_cast<int>(size);
    if (b.contains("id") && !b.at("id").is_string()) fail(f + ".id", "expected a string");
    spec.id = b.contains("id") ? b.at("id").get<std::string>() : "b" + std::to_string(j + 1);
    if (!ids.insert(spec.id).second) fail(f + ".id", "duplicate block id \"" + spec.id + "\"");
    if (b.contains("lambda_symbol")) {
      if (!b.at("lambda_symbol").is_string()) fail(f + ".lambda_symbol", "expected a string");
      spec.lambda_symbol = b.at("lambda_symbol").get<std::string>();
    }
    blocks.push_back(std::move(spec));
  }
  return blocks;
}

std::vector<CMatrix> parse_b(const json& doc, std::size_t n, bool required) {
  if (!doc.contains("B")) {
    if (required) fail("B", "missing (set \"structural\": true for inputs without coupling)");
    return {};
  }
  const json& b = doc.at("B");
  const long order = integer(member(b, "order", "B"), "B.order");
  const json& coeffs = member(b, "coeffs", "B");
  if (order < 0 || !coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order)) {
    fail("B.coeffs", "expected one matrix per power 1..order");
  }
  std::vector<CMatrix> out;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const std::string f = "B.coeffs[" + std::to_string(m) + "]";
    const json& mat = coeffs[m];
    if (!mat.is_array() || mat.size() != n) fail(f, "expected " + std::to_string(n) + " rows");
    CMatrix c(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!mat[r].is_array() || mat[r].size() != n) fail(f + "[" + std::to_string(r) + "]", "expected " + std::to_string(n) + " entries");
      for (std::size_t col = 0; col < n; ++col)
        c(r, col) = complex_value(mat[r][col], f + "[" + std::to_string(r) + "][" + std::to_string(col) + "]");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<StokesOverride> parse_overrides(const json& doc, std::size_t n) {
  std::vector<StokesOverride> out;
  if (!doc.contains("stokes_overrides")) return out;
  const json& obj = doc.at("stokes_overrides");
  if (!obj.is_object()) fail("stokes_overrides", "expected an object of named values");
  static const std::regex name_re(R"(^c\^?\{?\((\d+),(\d+)\)\}?$)");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string f = "stokes_overrides." + it.key();
    std::smatch m;
    if (!std::regex_match(it.key(), m, name_re)) fail(f, "names have the form c(j,l)");
    StokesOverride o;
    o.name = it.key();
    o.row = std::stoul(m[1].str());
    o.col = std::stoul(m[2].str());
    if (o.row < 1 || o.col < 1 || o.row > n || o.col > n) fail(f, "position outside the matrix");
    o.value = exact_value(it.value(), f);
    out.push_back(std::move(o));
  }
  return out;
}

ScalarEquation parse_equation(const json& doc) {
  const json& e = member(doc, "equation", "equation");
  ScalarEquation eq;
  eq.p1 = complex_value(member(e, "p1", "equation"), "equation.p1");
  eq.p0 = complex_list(member(e, "p0", "equation"), "equation.p0");
  eq.r = complex_list(member(e, "r", "equation"), "equation.r");
  if (eq.p1.is_zero()) fail("equation.p1", "must be nonzero");
  if (eq.p0.empty()) fail("equation.p0", "needs at least the constant term");
  if (!eq.r.empty() && !eq.r[0].is_zero()) fail("equation.r", "r(0) must vanish");
  if (e.contains("order")) fail("equation.order", "only first-order operators p1 x^2 y' + p0 y are supported");
  return eq;
}

}  // namespace

std::optional<mpq_class> parse_decimal(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  const std::string ip = m[2].str(), fp = m[3].str();
  if (ip.empty() && fp.empty()) return std::nullopt;
  mpz_class digits(ip + fp == "" ? "0" : ip + fp, 10);
  long exp10 = m[4].matched ? std::stol(m[4].str()) : 0;
  exp10 -= static_cast<long>(fp.size());
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(digits, p) : mpq_class(digits * p);
  q.canonicalize();
  if (m[1].str() == "-") q = -q;
  return q;
}

LevelOneSystem equation_system(const ScalarEquation& eq) {
  auto coef = [](const std::vector<Complex>& v, std::size_t i) { return i < v.size() ? v[i] : Complex(0); };
  JordanBlockSpec one;
  one.a = Complex(0);
  one.lam = Complex(0);
  one.id = "one";
  JordanBlockSpec y;
  y.a = -coef(eq.p0, 0) / eq.p1;
  y.lam = -coef(eq.p0, 1) / eq.p1;
  y.id = "y";
  const std::size_t order = std::max<std::size_t>({eq.p0.size(), eq.r.size(), 2}) - 1;
  std::vector<CMatrix> b;
  for (std::size_t m = 1; m <= order; ++m) {
    CMatrix c(2, 2);
    c(1, 0) = coef(eq.r, m) / eq.p1;
    if (m >= 2) c(1, 1) = -coef(eq.p0, m) / eq.p1;
    b.push_back(std::move(c));
  }
  return LevelOneSystem({one, y}, b);
}

ParsedInput parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("input must be a JSON object");
  ParsedInput in;
  if (doc.contains("mode")) {
    const std::string mode = doc.at("mode").is_string() ? doc.at("mode").get<std::string>() : "";
    if (mode == "equation") {
      in.mode = InputMode::equation;
    } else if (mode != "system") {
      fail("mode", "expected \"system\" or \"equation\"");
    }
  }
  if (doc.contains("structural")) {
    if (!doc.at("structural").is_boolean()) fail("structural", "expected true or false");
    in.structural = doc.at("structural").get<bool>();
  }
  if (in.mode == InputMode::equation) {
    if (in.structural) fail("structural", "not available in equation mode");
    in.equation = parse_equation(doc);
    in.system = equation_system(*in.equation);
  } else {
    std::vector<JordanBlockSpec> blocks = parse_blocks(doc);
    std::size_t n = 0;
    for (const JordanBlockSpec& b : blocks) n += static_cast<std::size_t>(b.size);
    if (integer(member(doc, "dimension", "dimension"), "dimension") != static_cast<long>(n)) {
      fail("dimension", "does not match the block sizes (" + std::to_string(n) + ")");
    }
    in.system = LevelOneSystem(std::move(blocks), parse_b(doc, n, !in.structural));
    in.overrides = parse_overrides(doc, n);
    if (!in.overrides.empty() && !in.structural) fail("stokes_overrides", "only allowed with \"structural\": true");
  }
  if (doc.contains("lattice_basis")) in.lattice_basis = complex_list(doc.at("lattice_basis"), "lattice_basis");
  // Structural inputs carry no coupling and only reach the alien stage.
  Diagnostics d = in.structural ? Diagnostics{} : validate_prepared(in.system);
  if (!d.ok()) {
    std::string msg = "system is not prepared:";
    for (const std::string& v : d.violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
  return in;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read input file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

}  // namespace levelone
