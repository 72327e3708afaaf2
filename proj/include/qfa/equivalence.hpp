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

#ifndef QFA_EQUIVALENCE_HPP
#define QFA_EQUIVALENCE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "qfa/automaton.hpp"
#include "qfa/echelon.hpp"

namespace qfa {

/// Direct sum of two automata (after lifting both to the larger memory
/// length) together with its bilinearized form.
///
/// For every word x, eta * nu(x) * pacc == P1(x) - P2(x), where
/// nu(x) = mu(x) (x) conj(mu(x)) is the n^2-dimensional action of x.
struct JointAutomaton {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t k = 1;
  Alphabet alphabet;
  /// mu1(c) (+) mu2(c) for every reachable context c.
  std::map<Context, CMatrix> transitions;
  /// U (x) conj(U) for each joint transition U.
  std::map<Context, CMatrix> bilinear;
  CRowVector eta;
  CColVector pacc;

  [[nodiscard]] std::size_t n() const { return n1 + n2; }
  [[nodiscard]] std::size_t dimension() const { return n() * n(); }
};

/// Throws std::invalid_argument when the alphabets differ (symbols or order).
JointAutomaton join(const KLetterQfa& a1, const KLetterQfa& a2);

/// Product of joint transitions along x.
CMatrix joint_mu_bar(const JointAutomaton& j, std::string_view x);

/// A word together with its image eta * nu(word).
struct QueueItem {
  Word word;
  CRowVector vector;
};

/// (x, v) -> (x sigma, v * (U (x) conj(U))) with U the joint transition
/// selected by the last step of x sigma.
QueueItem extend(const JointAutomaton& j, const QueueItem& item, char sigma);

/// (n1+n2)^2 m^(k-1) - m^(k-1) + k: two automata that agree on every word
/// of at most this length agree everywhere. Throws std::invalid_argument
/// for zero arguments and std::overflow_error if the value does not fit.
std::uint64_t equivalence_bound(std::uint64_t n1, std::uint64_t n2, std::uint64_t m, std::uint64_t k);

/// Strict length-then-lexicographic order, letters ranked by alphabet position.
bool word_less(std::string_view x1, std::string_view x2, const Alphabet& alphabet);

/// A basis vector in its original, unreduced form.
struct Generator {
  Word word;
  CRowVector vector;
};

/// Span of { eta * nu(x) : x ends in `suffix` } for one suffix of length k-1.
struct SuffixClassBasis {
  Word suffix;
  EchelonBasis echelon;
  /// Same order as insertion into `echelon`.
  std::vector<Generator> generators;
};

struct SuffixBasisMap {
  /// One entry per word of length k-1, in word order.
  std::vector<SuffixClassBasis> classes;
  /// Images of every word shorter than k-1 (including the empty word).
  std::vector<Generator> short_words;
  std::size_t nodes_processed = 0;

  [[nodiscard]] const SuffixClassBasis& at(std::string_view suffix) const;
  [[nodiscard]] std::size_t total_size() const;
};

/// Breadth-first search over words, keeping a word only when its image is
/// independent of the images already kept for the same (k-1)-suffix.
SuffixBasisMap basis_search(const JointAutomaton& j);

struct Counterexample {
  Word witness;
  Rational p1;
  Rational p2;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Verdict {
  /// Empty when the automata are equivalent.
  std::optional<Counterexample> counterexample;

  [[nodiscard]] bool equivalent() const { return !counterexample.has_value(); }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct DecisionStats {
  std::vector<std::size_t> basis_sizes;
  std::size_t short_words = 0;
  std::size_t nodes_processed = 0;
  std::uint64_t words_checked = 0;
};

/// Polynomial-time equivalence test. A returned witness is the least (in
/// word order) basis generator whose image does not vanish on the accepting
/// projector; it need not be the shortest counterexample overall.
Verdict decide(const KLetterQfa& a1, const KLetterQfa& a2, DecisionStats* stats = nullptr);

struct BruteForceOptions {
  /// Defaults to equivalence_bound().
  std::optional<std::size_t> max_len;
  /// Parallel workers; the verdict does not depend on this.
  unsigned workers = 1;
};

/// Compares acceptance probabilities on every word up to the length bound
/// in word order. A witness is the least counterexample.
Verdict brute_force(const KLetterQfa& a1, const KLetterQfa& a2, const BruteForceOptions& options = {},
                    DecisionStats* stats = nullptr);

}  // namespace qfa

#endif  // QFA_EQUIVALENCE_HPP
