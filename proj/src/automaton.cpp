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

#include "qfa/automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfa {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == kPad) throw std::invalid_argument("alphabet must not contain the padding letter '_'");
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
      throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
  }
}

std::optional<std::size_t> Alphabet::index_of(char c) const {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

void Alphabet::check_word(std::string_view w) const {
  for (char c : w) {
    if (!contains(c)) throw std::invalid_argument(std::string("letter '") + c + "' is not in the alphabet");
  }
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length) {
  std::vector<Word> out{Word()};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const Word& w : out) {
      for (char c : alphabet.symbols()) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Context> reachable_contexts(const Alphabet& alphabet, std::size_t k) {
  std::vector<Context> out;
  for (std::size_t len = 1; len <= k; ++len) {
    for (const Word& u : words_of_length(alphabet, len)) out.push_back(std::string(k - len, kPad) + u);
  }
  return out;
}

bool ValidationReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

// Empty string when well formed, else the reason.
std::string context_shape_error(const KLetterQfa& a, const Context& c) {
  if (c.size() != a.k) return "length " + std::to_string(c.size()) + " != k = " + std::to_string(a.k);
  const auto first_real = c.find_first_not_of(kPad);
  if (first_real == std::string::npos) return "no real letter";
  for (std::size_t i = first_real; i < c.size(); ++i) {
    if (c[i] == kPad) return "padding letter after a real letter";
    if (!a.alphabet.contains(c[i])) return std::string("letter '") + c[i] + "' not in alphabet";
  }
  return {};
}

}  // namespace

ValidationReport validate(const KLetterQfa& a) {
  ValidationReport report;
  auto add = [&report](Violation::Kind kind, std::string msg) { report.violations.push_back({kind, std::move(msg)}); };
  const std::size_t n = a.states;

  if (n == 0) add(Violation::Kind::kBadShape, "automaton has no states");
  if (a.k == 0) add(Violation::Kind::kBadShape, "memory length k must be at least 1");
  if (a.alphabet.size() == 0) add(Violation::Kind::kBadShape, "alphabet is empty");

  if (a.initial.size() != n) {
    add(Violation::Kind::kInitialDimension,
        "initial vector has dimension " + std::to_string(a.initial.size()) + ", expected " + std::to_string(n));
  } else {
    Rational norm;
    for (const Complex& z : a.initial.entries) norm += z.norm_sq();
    if (norm != Rational(1)) add(Violation::Kind::kInitialNorm, "initial vector norm " + norm.str() + " ≠ 1");
  }

  for (std::size_t q : a.accepting) {
    if (q >= n) add(Violation::Kind::kAcceptingOutOfRange, "accepting index " + std::to_string(q) + " out of range");
  }

  for (const auto& [context, m] : a.transitions) {
    const std::string why = context_shape_error(a, context);
    if (!why.empty()) add(Violation::Kind::kMalformedContext, "malformed context '" + context + "': " + why);
  }

  if (a.k == 0 || a.alphabet.size() == 0) return report;
  for (const Context& c : reachable_contexts(a.alphabet, a.k)) {
    const auto it = a.transitions.find(c);
    if (it == a.transitions.end()) {
      add(Violation::Kind::kMissingContext, "missing context '" + c + "'");
      continue;
    }
    const CMatrix& m = it->second;
    if (m.rows() != n || m.cols() != n) {
      add(Violation::Kind::kBadShape, "transition at context '" + c + "' is " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                                          std::to_string(n));
    } else if (!is_unitary(m)) {
      add(Violation::Kind::kNonUnitary, "non-unitary transition at context '" + c + "'");
    }
  }
  return report;
}

Context context_for(std::size_t k, std::string_view x, std::size_t i) {
  if (i < 1 || i > x.size()) {
    throw std::out_of_range("context position " + std::to_string(i) + " outside word of length " +
                            std::to_string(x.size()));
  }
  if (i < k) return std::string(k - i, kPad) + std::string(x.substr(0, i));
  return std::string(x.substr(i - k, k));
}

const CMatrix& transition(const KLetterQfa& a, const Context& c) {
  const auto it = a.transitions.find(c);
  if (it == a.transitions.end()) throw std::out_of_range("no transition for context '" + c + "'");
  return it->second;
}

CMatrix mu_bar(const KLetterQfa& a, std::string_view x) {
  a.alphabet.check_word(x);
  CMatrix acc = CMatrix::identity(a.states);
  for (std::size_t i = 1; i <= x.size(); ++i) acc = acc * transition(a, context_for(a, x, i));
  return acc;
}

CRowVector state_after(const KLetterQfa& a, std::string_view x) {
  a.alphabet.check_word(x);
  CRowVector state = bra(a.initial);
  for (std::size_t i = 1; i <= x.size(); ++i) state = state * transition(a, context_for(a, x, i));
  return state;
}

Rational accepting_weight(const KLetterQfa& a, const CRowVector& state) {
  Rational p;
  for (std::size_t q : a.accepting) p += state[q].norm_sq();
  return p;
}

Rational accept_prob(const KLetterQfa& a, std::string_view x) { return accepting_weight(a, state_after(a, x)); }

KLetterQfa lift(const KLetterQfa& a, std::size_t k) {
  if (k < a.k) {
    throw std::invalid_argument("cannot lift a " + std::to_string(a.k) + "-letter automaton to k = " +
                                std::to_string(k));
  }
  KLetterQfa out = a;
  out.k = k;
  out.transitions.clear();
  // The length-a.k suffix of a reachable k-context is itself a reachable
  // a.k-context: padding stays a prefix and the last letter stays real.
  for (const Context& c : reachable_contexts(a.alphabet, k)) out.transitions.emplace(c, transition(a, c.substr(k - a.k)));
  return out;
}

KLetterQfa last_letter_automaton() {
  const CMatrix id = CMatrix::identity(2);
  const CMatrix swap{{0, 1}, {1, 0}};
  KLetterQfa a;
  a.states = 2;
  a.alphabet = Alphabet("ab");
  a.k = 2;
  a.initial = CColVector{1, 0};
  a.accepting = {1};
  a.transitions = {
      {"_a", id}, {"_b", swap}, {"aa", id}, {"ab", swap}, {"ba", swap}, {"bb", id},
  };
  return a;
}

KLetterQfa always_accept_automaton(const Alphabet& alphabet) {
  KLetterQfa a;
  a.states = 1;
  a.alphabet = alphabet;
  a.k = 1;
  a.initial = CColVector{1};
  a.accepting = {0};
  for (char c : alphabet.symbols()) a.transitions.emplace(std::string(1, c), CMatrix::identity(1));
  return a;
}

}  // namespace qfa
