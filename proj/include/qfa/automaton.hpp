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

#ifndef QFA_AUTOMATON_HPP
#define QFA_AUTOMATON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qfa/matrix.hpp"
#include "qfa/rational.hpp"

namespace qfa {

/// The padding letter that fills the tape cells before the input starts.
inline constexpr char kPad = '_';

/// A word is a string of single-character symbols.
using Word = std::string;

/// A length-k window of the form pad^j u, with u a nonempty word.
using Context = std::string;

/// Ordered input alphabet; the order of `symbols()` is the letter order
/// used by word ordering and breadth-first search.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws std::invalid_argument if empty, has duplicates, or uses kPad.
  explicit Alphabet(std::string symbols);

  [[nodiscard]] const std::string& symbols() const { return symbols_; }
  [[nodiscard]] std::size_t size() const { return symbols_.size(); }
  [[nodiscard]] char operator[](std::size_t i) const { return symbols_[i]; }
  [[nodiscard]] std::optional<std::size_t> index_of(char c) const;
  [[nodiscard]] bool contains(char c) const { return index_of(c).has_value(); }
  /// Throws std::invalid_argument naming the first foreign letter.
  void check_word(std::string_view w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// All words of exactly `length` letters, in increasing word order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length);

/// Every context a k-letter automaton can consult, shortest real suffix
/// first, then in word order of the suffix.
std::vector<Context> reachable_contexts(const Alphabet& alphabet, std::size_t k);

/// A k-letter quantum finite automaton. The fields are plain data; use
/// validate() before trusting a hand-built value.
struct KLetterQfa {
  std::size_t states = 0;
  Alphabet alphabet;
  std::size_t k = 1;
  CColVector initial;
  std::set<std::size_t> accepting;
  std::map<Context, CMatrix> transitions;

  friend bool operator==(const KLetterQfa&, const KLetterQfa&) = default;
};

struct Violation {
  enum class Kind {
    kBadShape,
    kInitialDimension,
    kInitialNorm,
    kNonUnitary,
    kMissingContext,
    kMalformedContext,
    kAcceptingOutOfRange,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] bool has(Violation::Kind kind) const;
};

ValidationReport validate(const KLetterQfa& a);

/// Context of the i-th step (1-based) of reading x with memory k.
/// Throws std::out_of_range unless 1 <= i <= |x|.
Context context_for(std::size_t k, std::string_view x, std::size_t i);
inline Context context_for(const KLetterQfa& a, std::string_view x, std::size_t i) { return context_for(a.k, x, i); }

/// Transition at a context; throws std::out_of_range when absent.
const CMatrix& transition(const KLetterQfa& a, const Context& c);

/// Product of the context-selected unitaries along x; identity for the empty word.
CMatrix mu_bar(const KLetterQfa& a, std::string_view x);

/// <psi0| mu_bar(x), computed step by step.
CRowVector state_after(const KLetterQfa& a, std::string_view x);

/// Squared norm of the projection of a state onto the accepting subspace.
Rational accepting_weight(const KLetterQfa& a, const CRowVector& state);

/// Probability that a accepts x, exact.
Rational accept_prob(const KLetterQfa& a, std::string_view x);

/// Equivalent automaton with memory length `k` >= a.k; each k-context uses
/// the transition of its length-a.k suffix.
KLetterQfa lift(const KLetterQfa& a, std::size_t k);

/// 2-letter automaton over {a,b} accepting exactly the words ending in b.
KLetterQfa last_letter_automaton();

/// 1-state, 1-letter automaton over `alphabet` accepting every word.
KLetterQfa always_accept_automaton(const Alphabet& alphabet);

}  // namespace qfa

#endif  // QFA_AUTOMATON_HPP
