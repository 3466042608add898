#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "hgc/connection.hpp"
#include "hgc/params.hpp"
#include "hgc/series.hpp"
#include "hgc/verify.hpp"

namespace hgc {

using json = nlohmann::ordered_json;

// Accepts "re", "re+imi", "re-imi", "imi", "i", "-i".
inline cplx parse_complex(const std::string& text) {
  auto fail = [&] { return config_error("bad complex number: \"" + text + "\""); };
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw fail();
  auto num = [&](const std::string& t, bool imag) -> double {
    if (imag && (t.empty() || t == "+")) return 1.0;
    if (imag && t == "-") return -1.0;
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) throw fail();
    return v;
  };
  if (s.back() != 'i' && s.back() != 'j') return {num(s, false), 0.0};
  s.pop_back();
  // Split before the last sign that is not the leading one or part of an
  // exponent.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return {0.0, num(s, true)};
  return {num(s.substr(0, cut), false), num(s.substr(cut), true)};
}

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

// A complex value in a document: [re, im], a bare number or a string.
inline cplx complex_from_json(const json& j, const std::string& path) {
  auto finite = [&](double v) {
    if (!std::isfinite(v)) throw config_error(path + ": non-finite value");
    return v;
  };
  if (j.is_number()) return {finite(j.get<double>()), 0.0};
  if (j.is_string()) {
    cplx z = parse_complex(j.get<std::string>());
    finite(z.real());
    finite(z.imag());
    return z;
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {finite(j[0].get<double>()), finite(j[1].get<double>())};
  if (j.is_array() && j.size() == 2 && (j[0].is_null() || j[1].is_null()))
    throw config_error(path + ": non-finite value");
  throw config_error(path + ": expected [re, im]");
}

inline json to_json(const Parameters& p) {
  json a = json::array(), b = json::array();
  for (auto v : p.alpha) a.push_back(to_json(v));
  for (auto v : p.beta) b.push_back(to_json(v));
  return {{"n", p.n}, {"alpha", a}, {"beta", b}};
}

inline Parameters params_from_json(const json& j) {
  if (!j.is_object()) throw config_error("params: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw config_error("n: expected an integer");
  Parameters p;
  p.n = j["n"].get<int>();
  if (p.n < 1) throw config_error("n: must be >= 1");
  auto read = [&](const char* key, std::size_t len) {
    if (!j.contains(key) || !j[key].is_array())
      throw config_error(std::string(key) + ": expected an array");
    const json& arr = j[key];
    if (arr.size() != len)
      throw config_error(std::string(key) + ": expected " + std::to_string(len) +
                         " entries, got " + std::to_string(arr.size()));
    std::vector<cplx> v;
    for (std::size_t k = 0; k < arr.size(); ++k)
      v.push_back(complex_from_json(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
    return v;
  };
  p.alpha = read("alpha", static_cast<std::size_t>(p.n) + 1);
  p.beta = read("beta", static_cast<std::size_t>(p.n));
  p.check_shape();
  return p;
}

inline Parameters parse_params(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw config_error("params: invalid JSON");
  return params_from_json(j);
}

inline json to_json(const ConnectionMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.entries.cols(); ++k) row.push_back(to_json(m.entries(i, k)));
    rows.push_back(row);
  }
  return {{"kind", to_string(m.kind)}, {"n", m.n}, {"convention", m.convention}, {"entries", rows}};
}

inline ConnectionMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw config_error("matrix: expected an object");
  ConnectionMatrix m;
  if (!j.contains("kind") || !j["kind"].is_string()) throw config_error("kind: expected a string");
  m.kind = matrix_kind_from_string(j["kind"].get<std::string>());
  if (!j.contains("n") || !j["n"].is_number_integer()) throw config_error("n: expected an integer");
  m.n = j["n"].get<int>();
  if (m.n < 1) throw config_error("n: must be >= 1");
  if (j.contains("convention")) m.convention = j["convention"].get<std::string>();
  const json& rows = j.value("entries", json());
  auto dim = static_cast<std::size_t>(m.n) + 1;
  if (!rows.is_array() || rows.size() != dim)
    throw config_error("entries: expected " + std::to_string(dim) + " rows");
  m.entries = Matrix(m.n + 1, m.n + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw config_error("entries[" + std::to_string(i) + "]: expected " +
                         std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k)
      m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_from_json(
          rows[i][k], "entries[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

inline json to_json(const SeriesValue& v) {
  return {{"value", to_json(v.value)}, {"tail_estimate", v.tail_estimate}, {"terms_used", v.terms_used}};
}

inline json to_json(const SolutionVector& v) {
  json vals = json::array(), series = json::array(), pre = json::array();
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    vals.push_back(to_json(v.values[k]));
    series.push_back(to_json(v.series[k]));
    pre.push_back(to_json(v.prefactor[k]));
  }
  return {{"point", to_string(v.point)}, {"z", to_json(v.z)},         {"values", vals},
          {"series", series},            {"prefactor", pre},          {"branch_note", v.branch_note}};
}

// Non-finite residuals serialize as null.
inline json to_json(const VerificationReport& r) {
  json j = json::object();
  j["identity"] = r.identity;
  j["n"] = r.n;
  j["z"] = r.z ? to_json(*r.z) : json(nullptr);
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["details"] = r.details;
  j["expect_failure"] = r.expect_failure;
  j["provenance"] = r.provenance;
  return j;
}

inline std::string error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}}.dump();
}

}  // namespace hgc
