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

#include "qfa/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace qfa {

namespace {

void require_same_alphabet(const KLetterQfa& a1, const KLetterQfa& a2) {
  if (a1.alphabet != a2.alphabet) {
    throw std::invalid_argument("alphabet mismatch: '" + a1.alphabet.symbols() + "' vs '" + a2.alphabet.symbols() +
                                "'");
  }
}

CRowVector embed(const CColVector& initial, std::size_t offset, std::size_t n) {
  CRowVector out(n);
  const CRowVector b = bra(initial);
  for (std::size_t i = 0; i < b.size(); ++i) out[offset + i] = b[i];
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw std::overflow_error("length bound overflow");
  return a * b;
}

}  // namespace

JointAutomaton join(const KLetterQfa& a1, const KLetterQfa& a2) {
  require_same_alphabet(a1, a2);
  JointAutomaton j;
  j.n1 = a1.states;
  j.n2 = a2.states;
  j.k = std::max(a1.k, a2.k);
  j.alphabet = a1.alphabet;
  const KLetterQfa l1 = lift(a1, j.k);
  const KLetterQfa l2 = lift(a2, j.k);
  for (const Context& c : reachable_contexts(j.alphabet, j.k)) {
    CMatrix u = direct_sum(transition(l1, c), transition(l2, c));
    j.bilinear.emplace(c, kron(u, conjugate(u)));
    j.transitions.emplace(c, std::move(u));
  }

  const std::size_t n = j.n();
  const CRowVector eta1 = embed(a1.initial, 0, n);
  const CRowVector eta2 = embed(a2.initial, j.n1, n);
  const CRowVector t1 = kron(eta1, conjugate(eta1));
  const CRowVector t2 = kron(eta2, conjugate(eta2));
  j.eta = CRowVector(n * n);
  for (std::size_t i = 0; i < n * n; ++i) j.eta[i] = t1[i] - t2[i];

  j.pacc = CColVector(n * n);
  for (std::size_t q : a1.accepting) j.pacc[q * n + q] = Complex(1);
  for (std::size_t q : a2.accepting) {
    const std::size_t p = j.n1 + q;
    j.pacc[p * n + p] = Complex(1);
  }
  return j;
}

CMatrix joint_mu_bar(const JointAutomaton& j, std::string_view x) {
  j.alphabet.check_word(x);
  CMatrix acc = CMatrix::identity(j.n());
  for (std::size_t i = 1; i <= x.size(); ++i) acc = acc * j.transitions.at(context_for(j.k, x, i));
  return acc;
}

QueueItem extend(const JointAutomaton& j, const QueueItem& item, char sigma) {
  if (!j.alphabet.contains(sigma)) throw std::invalid_argument(std::string("letter '") + sigma + "' is not in the alphabet");
  QueueItem out;
  out.word = item.word + sigma;
  out.vector = item.vector * j.bilinear.at(context_for(j.k, out.word, out.word.size()));
  return out;
}

std::uint64_t equivalence_bound(std::uint64_t n1, std::uint64_t n2, std::uint64_t m, std::uint64_t k) {
  if (n1 == 0 || n2 == 0 || m == 0 || k == 0) throw std::invalid_argument("equivalence_bound: arguments must be >= 1");
  const std::uint64_t n = n1 + n2;
  std::uint64_t classes = 1;
  for (std::uint64_t i = 1; i < k; ++i) classes = checked_mul(classes, m);
  // (n^2 - 1) m^(k-1) + k, which never underflows.
  const std::uint64_t head = checked_mul(checked_mul(n, n) - 1, classes);
  if (head > std::numeric_limits<std::uint64_t>::max() - k) throw std::overflow_error("length bound overflow");
  return head + k;
}

bool word_less(std::string_view x1, std::string_view x2, const Alphabet& alphabet) {
  if (x1.size() != x2.size()) return x1.size() < x2.size();
  for (std::size_t i = 0; i < x1.size(); ++i) {
    if (x1[i] == x2[i]) continue;
    const auto r1 = alphabet.index_of(x1[i]);
    const auto r2 = alphabet.index_of(x2[i]);
    if (!r1 || !r2) throw std::invalid_argument("word_less: letter not in alphabet");
    return *r1 < *r2;
  }
  return false;
}

const SuffixClassBasis& SuffixBasisMap::at(std::string_view suffix) const {
  for (const auto& c : classes) {
    if (c.suffix == suffix) return c;
  }
  throw std::out_of_range("no suffix class '" + std::string(suffix) + "'");
}

std::size_t SuffixBasisMap::total_size() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.echelon.size();
  return total;
}

SuffixBasisMap basis_search(const JointAutomaton& j) {
  const std::size_t k = j.k;
  const std::size_t dim = j.dimension();
  SuffixBasisMap out;

  // Images of all words of length < k, level by level.
  std::vector<QueueItem> level{QueueItem{Word(), j.eta}};
  for (std::size_t len = 0; len + 1 < k; ++len) {
    std::vector<QueueItem> next;
    next.reserve(level.size() * j.alphabet.size());
    for (QueueItem& item : level) {
      for (char c : j.alphabet.symbols()) next.push_back(extend(j, item, c));
      out.short_words.push_back(Generator{std::move(item.word), std::move(item.vector)});
    }
    level = std::move(next);
  }

  // `level` now holds the length-(k-1) words in word order: the class seeds.
  std::unordered_map<Word, std::size_t> class_index;
  std::deque<QueueItem> queue;
  for (const QueueItem& seed : level) {
    class_index.emplace(seed.word, out.classes.size());
    SuffixClassBasis cls{seed.word, EchelonBasis(dim), {}};
    if (cls.echelon.insert(seed.vector, seed.word)) cls.generators.push_back(Generator{seed.word, seed.vector});
    out.classes.push_back(std::move(cls));
  }
  for (const QueueItem& seed : level) {
    for (char c : j.alphabet.symbols()) queue.push_back(extend(j, seed, c));
  }

  while (!queue.empty()) {
    QueueItem item = std::move(queue.front());
    queue.pop_front();
    ++out.nodes_processed;
    SuffixClassBasis& cls = out.classes[class_index.at(item.word.substr(item.word.size() - (k - 1)))];
    if (!cls.echelon.insert(item.vector, item.word)) continue;
    for (char c : j.alphabet.symbols()) queue.push_back(extend(j, item, c));
    cls.generators.push_back(Generator{std::move(item.word), std::move(item.vector)});
  }
  return out;
}

Verdict decide(const KLetterQfa& a1, const KLetterQfa& a2, DecisionStats* stats) {
  const JointAutomaton j = join(a1, a2);
  const SuffixBasisMap basis = basis_search(j);
  if (stats) {
    *stats = DecisionStats{};
    for (const auto& c : basis.classes) stats->basis_sizes.push_back(c.echelon.size());
    stats->short_words = basis.short_words.size();
    stats->nodes_processed = basis.nodes_processed;
  }

  const Word* witness = nullptr;
  auto consider = [&](const Generator& g) {
    if ((g.vector * j.pacc).is_zero()) return;
    if (witness == nullptr || word_less(g.word, *witness, j.alphabet)) witness = &g.word;
  };
  for (const Generator& g : basis.short_words) consider(g);
  for (const auto& c : basis.classes) {
    for (const Generator& g : c.generators) consider(g);
  }
  if (witness == nullptr) return Verdict{};

  Counterexample cx{*witness, accept_prob(a1, *witness), accept_prob(a2, *witness)};
  if (cx.p1 == cx.p2) throw std::logic_error("decide: witness '" + cx.witness + "' does not separate the automata");
  return Verdict{std::move(cx)};
}

namespace {

// Depth-first walk over the words of one fixed length, tracking each
// automaton's state vector along the current prefix.
class LevelScan {
 public:
  LevelScan(const KLetterQfa& a1, const KLetterQfa& a2, std::size_t length)
      : a1_(a1), a2_(a2), length_(length) {}

  // Lex-least word of `length_` starting with `prefix` on which the
  // automata disagree.
  std::optional<Word> scan(const Word& prefix) {
    word_ = prefix;
    CRowVector s1 = state_after(a1_, prefix);
    CRowVector s2 = state_after(a2_, prefix);
    if (descend(s1, s2)) return word_;
    return std::nullopt;
  }

  [[nodiscard]] std::uint64_t words_checked() const { return words_checked_; }

 private:
  bool descend(const CRowVector& s1, const CRowVector& s2) {
    if (word_.size() == length_) {
      ++words_checked_;
      return accepting_weight(a1_, s1) != accepting_weight(a2_, s2);
    }
    for (char c : a1_.alphabet.symbols()) {
      word_.push_back(c);
      const std::size_t pos = word_.size();
      const CRowVector n1 = s1 * transition(a1_, context_for(a1_.k, word_, pos));
      const CRowVector n2 = s2 * transition(a2_, context_for(a2_.k, word_, pos));
      if (descend(n1, n2)) return true;
      word_.pop_back();
    }
    return false;
  }

  const KLetterQfa& a1_;
  const KLetterQfa& a2_;
  std::size_t length_;
  Word word_;
  std::uint64_t words_checked_ = 0;
};

}  // namespace

Verdict brute_force(const KLetterQfa& a1, const KLetterQfa& a2, const BruteForceOptions& options,
                    DecisionStats* stats) {
  require_same_alphabet(a1, a2);
  const std::size_t m = a1.alphabet.size();
  const std::size_t bound =
      options.max_len ? *options.max_len
                      : static_cast<std::size_t>(equivalence_bound(a1.states, a2.states, m, std::max(a1.k, a2.k)));
  const unsigned workers = std::max(1U, options.workers);
  if (stats) *stats = DecisionStats{};

  for (std::size_t len = 0; len <= bound; ++len) {
    // Split the level into prefix subtrees; the first subtree (in word
    // order) holding a counterexample yields the least one.
    std::size_t split = 0;
    std::size_t chunks = 1;
    while (split < len && chunks < 16 * static_cast<std::size_t>(workers)) {
      ++split;
      chunks *= m;
    }
    if (workers == 1) split = 0;
    const std::vector<Word> prefixes = words_of_length(a1.alphabet, split);
    std::vector<std::optional<Word>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{prefixes.size()};
    std::atomic<std::uint64_t> checked{0};

    auto work = [&] {
      LevelScan scan(a1, a2, len);
      for (std::size_t idx = next++; idx < prefixes.size(); idx = next++) {
        if (idx > first_hit.load()) continue;
        found[idx] = scan.scan(prefixes[idx]);
        if (found[idx]) {
          std::size_t cur = first_hit.load();
          while (idx < cur && !first_hit.compare_exchange_weak(cur, idx)) {
          }
        }
      }
      checked += scan.words_checked();
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (stats) stats->words_checked += checked.load();

    for (auto& hit : found) {
      if (!hit) continue;
      Counterexample cx{*hit, accept_prob(a1, *hit), accept_prob(a2, *hit)};
      return Verdict{std::move(cx)};
    }
  }
  return Verdict{};
}

}  // namespace qfa
