// Copyright 2026 The qfa-equiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfa/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qfa {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.re().str(), z.im().str()}); }

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::size_t parse_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational parse_rational(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

Complex parse_complex(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where, "expected a complex pair [\"re\", \"im\"]");
  return {parse_rational(v[0], where + "/0"), parse_rational(v[1], where + "/1")};
}

CMatrix parse_matrix(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw ParseError(where, "expected " + std::to_string(n) + " rows");
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "/" + std::to_string(i);
    if (!v[i].is_array() || v[i].size() != n) throw ParseError(row_where, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_complex(v[i][j], row_where + "/" + std::to_string(j));
  }
  return m;
}

// JSON pointer escaping for object keys.
std::string pointer_key(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

}  // namespace

KLetterQfa parse_qfa_unvalidated(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError("", "document must be a JSON object");

  const json& version = require(doc, "format_version", "");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    throw ParseError("/format_version", "unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
  }

  KLetterQfa a;
  a.k = parse_count(require(doc, "k", ""), "/k");
  if (a.k == 0) throw ParseError("/k", "k must be at least 1");
  a.states = parse_count(require(doc, "states", ""), "/states");
  if (a.states == 0) throw ParseError("/states", "automaton needs at least one state");

  const json& alphabet = require(doc, "alphabet", "");
  if (!alphabet.is_array()) throw ParseError("/alphabet", "expected a list of symbols");
  std::string symbols;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const json& s = alphabet[i];
    if (!s.is_string() || s.get<std::string>().size() != 1) {
      throw ParseError("/alphabet/" + std::to_string(i), "symbols must be single characters");
    }
    symbols += s.get<std::string>();
  }
  try {
    a.alphabet = Alphabet(symbols);
  } catch (const std::invalid_argument& e) {
    throw ParseError("/alphabet", e.what());
  }

  const json& initial = require(doc, "initial", "");
  if (!initial.is_array()) throw ParseError("/initial", "expected a list of complex pairs");
  for (std::size_t i = 0; i < initial.size(); ++i) {
    a.initial.entries.push_back(parse_complex(initial[i], "/initial/" + std::to_string(i)));
  }

  const json& accepting = require(doc, "accepting", "");
  if (!accepting.is_array()) throw ParseError("/accepting", "expected a list of state indices");
  for (std::size_t i = 0; i < accepting.size(); ++i) {
    a.accepting.insert(parse_count(accepting[i], "/accepting/" + std::to_string(i)));
  }

  const json& transitions = require(doc, "transitions", "");
  if (!transitions.is_object()) throw ParseError("/transitions", "expected an object keyed by context");
  for (const auto& [key, value] : transitions.items()) {
    const std::string where = "/transitions/" + pointer_key(key);
    const auto first_real = key.find_first_not_of(kPad);
    if (key.size() != a.k || first_real == std::string::npos ||
        key.find(kPad, first_real) != std::string::npos) {
      throw ParseError(where, "malformed context '" + key + "'");
    }
    a.transitions.emplace(key, parse_matrix(value, a.states, where));
  }
  return a;
}

KLetterQfa parse_qfa(std::string_view text) {
  KLetterQfa a = parse_qfa_unvalidated(text);
  const ValidationReport report = validate(a);
  if (!report.ok()) {
    std::string msg = report.violations.front().message;
    for (std::size_t i = 1; i < report.violations.size(); ++i) msg += "; " + report.violations[i].message;
    throw ParseError("", msg);
  }
  return a;
}

std::string serialize_qfa(const KLetterQfa& a) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["k"] = a.k;
  doc["states"] = a.states;
  json alphabet = json::array();
  for (char c : a.alphabet.symbols()) alphabet.push_back(std::string(1, c));
  doc["alphabet"] = alphabet;
  json initial = json::array();
  for (const Complex& z : a.initial.entries) initial.push_back(complex_to_json(z));
  doc["initial"] = initial;
  doc["accepting"] = json(std::vector<std::size_t>(a.accepting.begin(), a.accepting.end()));
  json transitions = json::object();
  for (const auto& [context, m] : a.transitions) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
      rows.push_back(row);
    }
    transitions[context] = rows;
  }
  doc["transitions"] = transitions;
  return doc.dump(2) + "\n";
}

namespace {

template <typename Parse>
KLetterQfa load_with(const std::filesystem::path& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + (e.location().empty() ? "" : ":" + e.location()), e.detail());
  }
}

}  // namespace

KLetterQfa load_qfa(const std::filesystem::path& path) {
  return load_with(path, [](std::string_view t) { return parse_qfa(t); });
}

KLetterQfa load_qfa_unvalidated(const std::filesystem::path& path) {
  return load_with(path, [](std::string_view t) { return parse_qfa_unvalidated(t); });
}

void save_qfa(const std::filesystem::path& path, const KLetterQfa& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serialize_qfa(a);
}

namespace {

const char* method_name(Method m) { return m == Method::kAlgebraic ? "algebraic" : "bruteforce"; }

}  // namespace

std::string report_json(const EquivReport& report) {
  json doc;
  doc["verdict"] = report.verdict.equivalent() ? "equivalent" : "not_equivalent";
  doc["method"] = method_name(report.method);
  doc["bound_used"] = report.bound_used;
  if (const auto& cx = report.verdict.counterexample) {
    doc["witness"] = cx->witness;
    doc["p1"] = cx->p1.str();
    doc["p2"] = cx->p2.str();
  }
  json stats;
  stats["basis_sizes"] = report.stats.basis_sizes;
  stats["short_words"] = report.stats.short_words;
  stats["nodes_processed"] = report.stats.nodes_processed;
  stats["words_checked"] = report.stats.words_checked;
  stats["wall_millis"] = report.wall_millis;
  doc["stats"] = stats;
  return doc.dump(2) + "\n";
}

std::string report_text(const EquivReport& report) {
  std::ostringstream os;
  os << "verdict: " << (report.verdict.equivalent() ? "equivalent" : "not equivalent") << '\n';
  os << "method: " << method_name(report.method) << '\n';
  os << "bound: " << report.bound_used << '\n';
  if (const auto& cx = report.verdict.counterexample) {
    os << "witness: \"" << cx->witness << "\"" << (cx->witness.empty() ? " (empty word)" : "") << '\n';
    os << "p1: " << cx->p1 << '\n';
    os << "p2: " << cx->p2 << '\n';
    if (report.method == Method::kAlgebraic) {
      os << "note: the algebraic witness need not be the shortest; use --method bruteforce for the least one\n";
    }
  }
  if (report.method == Method::kAlgebraic) {
    os << "basis sizes:";
    for (std::size_t s : report.stats.basis_sizes) os << ' ' << s;
    os << "\nnodes processed: " << report.stats.nodes_processed << '\n';
  } else {
    os << "words checked: " << report.stats.words_checked << '\n';
  }
  os << "wall time: " << report.wall_millis << " ms\n";
  return os.str();
}

}  // namespace qfa
