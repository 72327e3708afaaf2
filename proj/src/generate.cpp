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

#include "qfa/generate.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qfa {

namespace {

struct Triple {
  long a, b, c;
};

constexpr std::array<Triple, 4> kTriples{{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}}};

// mt19937_64 output is fully specified, so modular reduction keeps streams
// identical across standard libraries (unlike the <random> distributions).
std::size_t pick(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

CMatrix signed_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[pick(rng, i)]);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = Complex(pick(rng, 2) == 0 ? 1 : -1);
  return m;
}

CMatrix phase_diagonal(std::size_t n, std::mt19937_64& rng) {
  const auto& phases = unit_phases();
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = phases[pick(rng, phases.size())];
  return m;
}

CMatrix plane_rotation(std::size_t n, std::mt19937_64& rng) {
  const std::size_t i = pick(rng, n);
  std::size_t j = pick(rng, n - 1);
  if (j >= i) ++j;
  const Triple& t = kTriples[pick(rng, kTriples.size())];
  const bool swap_legs = pick(rng, 2) == 1;
  const Rational cos(swap_legs ? t.b : t.a, t.c);
  Rational sin(swap_legs ? t.a : t.b, t.c);
  if (pick(rng, 2) == 1) sin = -sin;
  CMatrix m = CMatrix::identity(n);
  m(i, i) = cos;
  m(j, j) = cos;
  m(i, j) = -sin;
  m(j, i) = sin;
  return m;
}

}  // namespace

const std::vector<Complex>& unit_phases() {
  static const std::vector<Complex> phases{
      Complex(1),
      Complex(-1),
      Complex::i(),
      -Complex::i(),
      Complex(Rational(3, 5), Rational(4, 5)),
      Complex(Rational(3, 5), Rational(-4, 5)),
      Complex(Rational(-4, 5), Rational(3, 5)),
      Complex(Rational(5, 13), Rational(12, 13)),
      Complex(Rational(-12, 13), Rational(-5, 13)),
  };
  return phases;
}

CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("random_unitary: n must be positive");
  CMatrix u = signed_permutation(n, rng) * phase_diagonal(n, rng);
  if (n >= 2) {
    const std::size_t rotations = 1 + pick(rng, 2);
    for (std::size_t r = 0; r < rotations; ++r) u = u * plane_rotation(n, rng);
  }
  return u;
}

KLetterQfa random_qfa(std::size_t n, const Alphabet& alphabet, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_qfa: need at least one state");
  if (k == 0) throw std::invalid_argument("random_qfa: k must be at least 1");
  std::mt19937_64 rng(seed);
  KLetterQfa a;
  a.states = n;
  a.alphabet = alphabet;
  a.k = k;

  const CMatrix v = random_unitary(n, rng);
  a.initial = CColVector(n);
  for (std::size_t i = 0; i < n; ++i) a.initial[i] = v(i, 0);

  if (n == 1) {
    if (pick(rng, 2) == 0) a.accepting.insert(0);
  } else if (n > 62) {
    for (std::size_t q = 0; q < n; ++q) {
      if (pick(rng, 2) == 1) a.accepting.insert(q);
    }
    if (a.accepting.empty()) a.accepting.insert(0);
    if (a.accepting.size() == n) a.accepting.erase(0);
  } else {
    // Uniform over nonempty proper subsets.
    const std::uint64_t subsets = (std::uint64_t{1} << n) - 2;
    const std::uint64_t mask = 1 + rng() % subsets;
    for (std::size_t q = 0; q < n; ++q) {
      if ((mask >> q) & 1U) a.accepting.insert(q);
    }
  }

  for (const Context& c : reachable_contexts(alphabet, k)) a.transitions.emplace(c, random_unitary(n, rng));
  return a;
}

KLetterQfa with_global_phase(const KLetterQfa& a, const Complex& phase) {
  KLetterQfa out = a;
  for (Complex& z : out.initial.entries) z *= phase;
  return out;
}

KLetterQfa permute_states(const KLetterQfa& a, const std::vector<std::size_t>& perm) {
  if (perm.size() != a.states) throw std::invalid_argument("permute_states: permutation size mismatch");
  KLetterQfa out = a;
  for (std::size_t q = 0; q < a.states; ++q) out.initial[perm[q]] = a.initial[q];
  out.accepting.clear();
  for (std::size_t q : a.accepting) out.accepting.insert(perm[q]);
  for (auto& [context, m] : out.transitions) {
    const CMatrix& src = a.transitions.at(context);
    for (std::size_t i = 0; i < a.states; ++i)
      for (std::size_t j = 0; j < a.states; ++j) m(perm[i], perm[j]) = src(i, j);
  }
  return out;
}

KLetterQfa with_dead_state(const KLetterQfa& a, const Complex& phase, bool accepting) {
  KLetterQfa out = a;
  out.states = a.states + 1;
  out.initial.entries.push_back(Complex());
  if (accepting) out.accepting.insert(a.states);
  const CMatrix block{{phase}};
  for (auto& [context, m] : out.transitions) m = direct_sum(a.transitions.at(context), block);
  return out;
}

}  // namespace qfa
