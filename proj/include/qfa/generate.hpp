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

#ifndef QFA_GENERATE_HPP
#define QFA_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qfa/automaton.hpp"

namespace qfa {

/// Unit-modulus Gaussian rationals used as diagonal phases.
const std::vector<Complex>& unit_phases();

/// Random n x n unitary with rational entries: a signed permutation, a
/// diagonal of unit phases and a few planar rotations whose cosine and sine
/// come from Pythagorean triples.
CMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// Deterministic in `seed`. The result always passes validate(). With more
/// than one state the accepting set is a nonempty proper subset.
KLetterQfa random_qfa(std::size_t n, const Alphabet& alphabet, std::size_t k, std::uint64_t seed);

// Transformations that never change acceptance probabilities.

/// Multiplies the initial vector by a unit-modulus scalar.
KLetterQfa with_global_phase(const KLetterQfa& a, const Complex& phase);

/// Renames state q to perm[q] everywhere.
KLetterQfa permute_states(const KLetterQfa& a, const std::vector<std::size_t>& perm);

/// Appends one unreachable state whose transitions are the given phase.
KLetterQfa with_dead_state(const KLetterQfa& a, const Complex& phase, bool accepting);

}  // namespace qfa

#endif  // QFA_GENERATE_HPP
