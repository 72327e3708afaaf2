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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qfa/equivalence.hpp"
#include "qfa/generate.hpp"

using namespace qfa;
using qfa::testing::all_words;
using qfa::testing::random_word;
using qfa::testing::scratch_image;

namespace {

constexpr double kRuntimeBudgetSeconds = 600.0;
constexpr std::size_t kMinPairs = 300;
constexpr std::size_t kMinIdentitySamples = 1000;
constexpr std::size_t kMaxIdentityWordLength = 8;
constexpr std::size_t kLastLetterDepth = 6;
constexpr std::size_t kInvariantAutomata = 100;
constexpr std::size_t kWordsPerAutomaton = 10;
constexpr std::size_t kLiftDepth = 4;

struct Pair {
  std::string label;
  KLetterQfa a1;
  KLetterQfa a2;
};

Alphabet alphabet_of_size(std::size_t m) { return Alphabet(m == 1 ? "s" : "ab"); }

// Independent random pairs over the whole grid, plus pairs that are
// equivalent by construction. Equivalent pairs make the brute-force oracle
// enumerate every word up to the length bound, so for m = 2 they are kept to
// sizes where m^bound stays within budget.
std::vector<Pair> oracle_pairs() {
  std::vector<Pair> pairs;
  std::uint64_t seed = 1000;
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t k1 = 1; k1 <= 2; ++k1)
      for (std::size_t k2 = 1; k2 <= 2; ++k2)
        for (std::size_t n1 = 1; n1 <= 3; ++n1)
          for (std::size_t n2 = 1; n2 <= 3; ++n2)
            for (int rep = 0; rep < 4; ++rep) {
              const Alphabet a = alphabet_of_size(m);
              pairs.push_back({"random", random_qfa(n1, a, k1, seed), random_qfa(n2, a, k2, seed + 1)});
              seed += 2;
            }

  const Complex phase(Rational(3, 5), Rational(4, 5));
  const Alphabet unary = alphabet_of_size(1);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const KLetterQfa a = random_qfa(n, unary, k, seed++);
      pairs.push_back({"phase", a, with_global_phase(a, phase)});
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
      pairs.push_back({"permute", a, permute_states(a, perm)});
      if (n < 3) pairs.push_back({"dead-state", a, with_dead_state(a, Complex::i(), k == 1)});
    }
    const KLetterQfa a = random_qfa(n, unary, 1, seed++);
    pairs.push_back({"lift", a, lift(a, 2)});
  }

  const Alphabet binary = alphabet_of_size(2);
  for (int rep = 0; rep < 3; ++rep) {
    const KLetterQfa one = random_qfa(1, binary, 1, seed++);
    const KLetterQfa two = random_qfa(1, binary, 2, seed++);
    pairs.push_back({"phase", one, with_global_phase(one, -Complex::i())});
    pairs.push_back({"phase", two, with_global_phase(two, phase)});
    pairs.push_back({"lift", one, lift(one, 2)});
    pairs.push_back({"dead-state", one, with_dead_state(one, phase, rep % 2 == 0)});
  }
  for (int rep = 0; rep < 2; ++rep) {
    const KLetterQfa a = random_qfa(2, binary, 1, seed++);
    pairs.push_back({"permute", a, permute_states(a, {1, 0})});
  }
  {
    const KLetterQfa a = random_qfa(2, binary, 1, seed++);
    pairs.push_back({"phase", a, with_global_phase(a, Complex::i())});
    const KLetterQfa b = random_qfa(1, binary, 2, seed++);
    pairs.push_back({"dead-state", b, with_dead_state(b, -Complex::i(), true)});
  }

  // Copies that differ in a single non-initial context: any separating word
  // has to reach that context first.
  std::mt19937_64 rng(seed);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for (const Context& c : reachable_contexts(alphabet_of_size(m), 2)) {
        if (c.front() == kPad) continue;
        const KLetterQfa a = random_qfa(n, alphabet_of_size(m), 2, rng());
        KLetterQfa b = a;
        b.transitions[c] = random_unitary(n, rng);
        pairs.push_back({"mutant", a, b});
      }
  return pairs;
}

struct PairOutcome {
  Verdict algebraic;
  Verdict brute;
  DecisionStats stats;
};

struct OracleRun {
  std::vector<PairOutcome> outcomes;
  double seconds = 0;
};

OracleRun run_oracle(const std::vector<Pair>& pairs) {
  OracleRun run;
  const auto start = std::chrono::steady_clock::now();
  for (const Pair& p : pairs) {
    PairOutcome o;
    o.algebraic = decide(p.a1, p.a2, &o.stats);
    o.brute = brute_force(p.a1, p.a2);
    run.outcomes.push_back(std::move(o));
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

std::string digest(const Verdict& v) {
  if (v.equivalent()) return "eq";
  const auto& cx = *v.counterexample;
  return "ne(" + cx.witness + "," + cx.p1.str() + "," + cx.p2.str() + ")";
}

std::string digest(const OracleRun& run) {
  std::ostringstream out;
  for (const auto& o : run.outcomes) {
    out << digest(o.algebraic) << ' ' << digest(o.brute) << ' ' << o.stats.nodes_processed;
    for (std::size_t s : o.stats.basis_sizes) out << ',' << s;
    out << ';';
  }
  return out.str();
}

std::uint64_t pow_u(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << id << " [" << (pass ? "PASS" : "FAIL") << "] " << name << ": " << detail << std::endl;
}

// 1: verdict agreement between the algebraic test and enumeration.
void criterion_agreement(const std::vector<Pair>& pairs, const OracleRun& run) {
  std::size_t agree = 0;
  std::size_t equivalent = 0;
  std::size_t mixed_k = 0;
  std::size_t bad_witness = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Pair& p = pairs[i];
    const PairOutcome& o = run.outcomes[i];
    if (p.a1.k != p.a2.k) ++mixed_k;
    if (o.algebraic.equivalent() == o.brute.equivalent()) {
      ++agree;
    } else {
      std::cerr << "disagreement on pair " << i << " (" << p.label << ")\n";
    }
    if (o.algebraic.equivalent()) ++equivalent;
    for (const Verdict* v : {&o.algebraic, &o.brute}) {
      if (v->equivalent()) continue;
      const auto& cx = *v->counterexample;
      if (cx.p1 != accept_prob(p.a1, cx.witness) || cx.p2 != accept_prob(p.a2, cx.witness) || cx.p1 == cx.p2)
        ++bad_witness;
    }
  }
  const bool pass = pairs.size() >= kMinPairs && agree == pairs.size() && bad_witness == 0 && mixed_k > 0 &&
                    run.seconds < kRuntimeBudgetSeconds;
  std::ostringstream d;
  d << agree << "/" << pairs.size() << " agree (" << equivalent << " equivalent, " << mixed_k << " mixed-k), "
    << bad_witness << " bad witnesses, " << run.seconds << " s (budget " << kRuntimeBudgetSeconds << " s)";
  report(1, "decide vs brute_force", pass, d.str());
}

// 2: eta nu(x) pacc == P1(x) - P2(x), with nu(x) built from scratch.
void criterion_identity(std::string& trace) {
  std::mt19937_64 rng(20260101);
  std::size_t samples = 0;
  std::size_t exact = 0;
  while (samples < kMinIdentitySamples) {
    const Alphabet a = alphabet_of_size(1 + rng() % 2);
    const std::size_t n1 = 1 + rng() % 3;
    const std::size_t k1 = 1 + rng() % 2;
    const std::size_t n2 = 1 + rng() % 3;
    const std::size_t k2 = 1 + rng() % 2;
    const KLetterQfa a1 = random_qfa(n1, a, k1, rng());
    const KLetterQfa a2 = random_qfa(n2, a, k2, rng());
    const JointAutomaton j = join(a1, a2);
    for (int w = 0; w < 10; ++w, ++samples) {
      const std::string x = random_word(a, kMaxIdentityWordLength, rng);
      const Complex lhs = scratch_image(j, x) * j.pacc;
      const Rational rhs = accept_prob(a1, x) - accept_prob(a2, x);
      if (lhs == Complex(rhs)) ++exact;
      trace += lhs.re().str() + "|";
    }
  }
  report(2, "bilinear identity", exact == samples,
         std::to_string(exact) + "/" + std::to_string(samples) + " samples exact, |x| <= " +
             std::to_string(kMaxIdentityWordLength));
}

// 3: witness lengths against the length bound, plus fixed bound values.
void criterion_bound(const std::vector<Pair>& pairs, const OracleRun& run) {
  std::size_t witnesses = 0;
  std::size_t within = 0;
  std::size_t longest = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Pair& p = pairs[i];
    const std::uint64_t bound =
        equivalence_bound(p.a1.states, p.a2.states, p.a1.alphabet.size(), std::max(p.a1.k, p.a2.k));
    for (const Verdict* v : {&run.outcomes[i].algebraic, &run.outcomes[i].brute}) {
      if (v->equivalent()) continue;
      ++witnesses;
      const std::size_t len = v->counterexample->witness.size();
      longest = std::max(longest, len);
      if (len <= bound) ++within;
    }
  }
  const bool spots = equivalence_bound(2, 2, 2, 2) == 32 && equivalence_bound(2, 2, 2, 1) == 16 &&
                     equivalence_bound(1, 3, 1, 1) == 16 && equivalence_bound(2, 2, 1, 3) == 18;
  std::ostringstream d;
  d << within << "/" << witnesses << " witnesses within bound (longest " << longest << "), spot values 32/16/18 "
    << (spots ? "ok" : "wrong");
  report(3, "length bound", witnesses > 0 && within == witnesses && spots, d.str());
}

// 4: basis and queue sizes of the basis search.
void criterion_resources(const std::vector<Pair>& pairs, const OracleRun& run) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Pair& p = pairs[i];
    const DecisionStats& s = run.outcomes[i].stats;
    const std::uint64_t n = p.a1.states + p.a2.states;
    const std::uint64_t m = p.a1.alphabet.size();
    const std::size_t k = std::max(p.a1.k, p.a2.k);
    std::uint64_t total = 0;
    bool each = s.basis_sizes.size() == pow_u(m, k - 1);
    for (std::size_t b : s.basis_sizes) {
      each = each && b <= n * n;
      total += b;
    }
    if (each && total <= n * n * pow_u(m, k - 1) && s.nodes_processed <= pow_u(m, k) * (n * n + 1)) ++ok;
  }
  report(4, "basis search resources", ok == pairs.size(),
         std::to_string(ok) + "/" + std::to_string(pairs.size()) + " runs within |B(w)|, total and queue bounds");
}

// 5: the last-letter automaton.
void criterion_last_letter(std::string& trace) {
  const KLetterQfa ll = last_letter_automaton();
  const auto words = all_words(ll.alphabet, kLastLetterDepth);
  std::size_t correct = 0;
  for (const auto& x : words) {
    const Rational p = accept_prob(ll, x);
    const Rational want = !x.empty() && x.back() == 'b' ? Rational(1) : Rational(0);
    if (p == want) ++correct;
    trace += p.str();
  }
  const Verdict v = decide(ll, always_accept_automaton(ll.alphabet));
  const bool witness_ok = !v.equivalent() && v.counterexample->witness.empty() &&
                          v.counterexample->p1 == Rational(0) && v.counterexample->p2 == Rational(1);
  trace += digest(v);
  std::ostringstream d;
  d << correct << "/" << words.size() << " words correct, witness vs always-accept "
    << (witness_ok ? "epsilon with (0, 1)" : digest(v));
  report(5, "last-letter example", correct == words.size() && words.size() == 127 && witness_ok, d.str());
}

// 7: norm preservation and lift invariance.
void criterion_invariants(std::string& trace) {
  std::mt19937_64 rng(77001);
  std::size_t norm_ok = 0;
  std::size_t norm_checks = 0;
  std::size_t lift_ok = 0;
  std::size_t lift_checks = 0;
  for (std::size_t t = 0; t < kInvariantAutomata; ++t) {
    const Alphabet alphabet = alphabet_of_size(1 + t % 2);
    const KLetterQfa a = random_qfa(1 + rng() % 3, alphabet, 1 + rng() % 2, rng());
    for (std::size_t w = 0; w < kWordsPerAutomaton; ++w, ++norm_checks) {
      const CRowVector s = state_after(a, random_word(alphabet, kMaxIdentityWordLength, rng));
      Rational norm;
      for (std::size_t i = 0; i < s.size(); ++i) norm += s[i].norm_sq();
      if (norm == Rational(1)) ++norm_ok;
      trace += norm.str();
    }
    const KLetterQfa lifted = lift(a, a.k + 1);
    for (const auto& x : all_words(alphabet, kLiftDepth)) {
      ++lift_checks;
      if (accept_prob(a, x) == accept_prob(lifted, x)) ++lift_ok;
    }
  }
  std::ostringstream d;
  d << norm_ok << "/" << norm_checks << " norms exactly 1, " << lift_ok << "/" << lift_checks
    << " lifted probabilities equal (|x| <= " << kLiftDepth << ")";
  report(7, "unitarity and lift", norm_ok == norm_checks && lift_ok == lift_checks, d.str());
}

}  // namespace

int main() {
  const std::vector<Pair> pairs = oracle_pairs();
  const OracleRun first = run_oracle(pairs);
  criterion_agreement(pairs, first);

  std::string trace_identity;
  criterion_identity(trace_identity);
  criterion_bound(pairs, first);
  criterion_resources(pairs, first);
  std::string trace_last_letter;
  criterion_last_letter(trace_last_letter);

  // 6: a second pass with the same seeds must reproduce every result.
  {
    const int before = failures;
    std::string identity_again;
    std::string last_letter_again;
    std::string invariants_again;
    std::string invariants_first;
    std::ostringstream sink;
    auto* saved = std::cout.rdbuf(sink.rdbuf());
    criterion_identity(identity_again);
    criterion_last_letter(last_letter_again);
    criterion_invariants(invariants_first);
    criterion_invariants(invariants_again);
    std::cout.rdbuf(saved);
    failures = before;

    const bool oracle_same = digest(run_oracle(oracle_pairs())) == digest(first) && oracle_pairs().size() == pairs.size();
    const bool same = oracle_same && identity_again == trace_identity && last_letter_again == trace_last_letter &&
                      invariants_again == invariants_first;
    report(6, "determinism", same,
           std::string("second pass ") + (same ? "bit-identical" : "differs") + " across criteria 1, 2, 5 and 7");
  }

  std::string trace_invariants;
  criterion_invariants(trace_invariants);

  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: some criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
