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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qfa/echelon.hpp"
#include "qfa/generate.hpp"
#include "qfa/matrix.hpp"
#include "qfa/rational.hpp"

using namespace qfa;
using qfa::testing::dense_product;
using qfa::testing::random_matrix;
using qfa::testing::rank_of;
using qfa::testing::small_complex;
using qfa::testing::small_rational;

TEST_CASE("rational: stored reduced with positive denominator") {
  const Rational r(6, -8);
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "4");
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-3/5").str() == "-3/5");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational: field operations are exact on random operands") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const Rational a = small_rational(rng);
    const Rational b = small_rational(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    const Complex z = small_complex(rng);
    const Complex w = small_complex(rng);
    CHECK((z + w) - w == z);
    if (!w.is_zero()) CHECK((z * w) / w == z);
    CHECK((z * w).conj() == z.conj() * w.conj());
    CHECK((z * z.conj()).im().is_zero());
    CHECK((z * z.conj()).re() == z.norm_sq());
  }
}

TEST_CASE("gaussian rational: i squared is -1") {
  CHECK(Complex::i() * Complex::i() == Complex(-1));
  CHECK(Complex(1) / Complex::i() == -Complex::i());
  CHECK_THROWS_AS(Complex(1) / Complex(), std::domain_error);
}

TEST_CASE("kron: identity and permutation embedding") {
  CHECK(kron(CMatrix::identity(2), CMatrix::identity(2)) == CMatrix::identity(4));
  const CMatrix x{{0, 1}, {1, 0}};
  const CMatrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  CHECK(kron(x, CMatrix::identity(2)) == expected);

  std::mt19937_64 rng(11);
  const CMatrix a = random_matrix(2, 3, rng);
  const CMatrix b = random_matrix(3, 2, rng);
  const CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(k(i * 3 + p, j * 2 + q) == a(i, j) * b(p, q));
}

TEST_CASE("kron and direct_sum are multiplicative on random rational matrices") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const CMatrix a = random_matrix(2, 2, rng);
    const CMatrix b = random_matrix(2, 2, rng);
    const CMatrix c = random_matrix(2, 2, rng);
    const CMatrix d = random_matrix(2, 2, rng);
    CHECK(dense_product(kron(a, b), kron(c, d)) == kron(dense_product(a, c), dense_product(b, d)));

    const CMatrix e = random_matrix(3, 3, rng);
    const CMatrix f = random_matrix(3, 3, rng);
    CHECK(dense_product(direct_sum(a, e), direct_sum(c, f)) == direct_sum(dense_product(a, c), dense_product(e, f)));
    // Library product agrees with the plain triple loop.
    CHECK(a * c == dense_product(a, c));
  }
}

TEST_CASE("direct_sum: shapes and errors") {
  CHECK(direct_sum(CMatrix::identity(1), CMatrix::identity(2)) == CMatrix::identity(3));
  CHECK_THROWS_AS(direct_sum(CMatrix(2, 3), CMatrix::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum(CMatrix::identity(2), CMatrix(1, 2)), std::invalid_argument);
}

TEST_CASE("conjugate and dagger") {
  const CMatrix real{{1, 2}, {3, 4}};
  CHECK(conjugate(real) == real);
  const CMatrix m{{Complex::i(), 0}, {0, 1}};
  const CMatrix expected{{-Complex::i(), 0}, {0, 1}};
  CHECK(dagger(m) == expected);

  std::mt19937_64 rng(5);
  const CMatrix a = random_matrix(2, 3, rng);
  CHECK(dagger(dagger(a)) == a);
  CHECK(dagger(a) == transpose(conjugate(a)));
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(CMatrix::identity(3)));
  const CMatrix rot{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
  CHECK(is_unitary(rot));
  CHECK_FALSE(is_unitary(CMatrix{{1, 1}, {0, 1}}));
  CHECK_FALSE(is_unitary(CMatrix(2, 3)));
}

TEST_CASE("unitarity is preserved by kron with the conjugate and by direct sums") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    const CMatrix u = random_unitary(1 + rng() % 3, rng);
    const CMatrix v = random_unitary(1 + rng() % 3, rng);
    REQUIRE(is_unitary(u));
    REQUIRE(is_unitary(v));
    CHECK(is_unitary(kron(u, conjugate(u))));
    CHECK(is_unitary(direct_sum(u, v)));
  }
}

TEST_CASE("span_insert: documented examples") {
  const EchelonBasis empty(4);
  const auto r1 = span_insert(empty, CRowVector{1, 0, 0, 0}, "x");
  CHECK(r1.inserted);
  CHECK(r1.basis.size() == 1);
  CHECK(empty.size() == 0);

  const auto r2 = span_insert(r1.basis, CRowVector{2, 0, 0, 0}, "y");
  CHECK_FALSE(r2.inserted);
  CHECK(r2.basis.size() == 1);

  const auto s = span_insert(EchelonBasis(4), CRowVector{1, 1, 0, 0}, "a");
  const auto t = span_insert(s.basis, CRowVector{1, 0, 0, 0}, "b");
  CHECK(t.inserted);
  REQUIRE(t.basis.size() == 2);
  // Fully reduced: e1 and e2.
  CHECK(t.basis.rows()[0].vector == CRowVector{1, 0, 0, 0});
  CHECK(t.basis.rows()[1].vector == CRowVector{0, 1, 0, 0});
  CHECK(t.basis.rows()[0].pivot == 0);
  CHECK(t.basis.rows()[1].pivot == 1);

  CHECK_THROWS_AS(span_insert(empty, CRowVector{1, 0}, "z"), std::invalid_argument);
  CHECK_FALSE(span_insert(empty, CRowVector{0, 0, 0, 0}, "zero").inserted);
}

TEST_CASE("echelon basis: invariants and agreement with an independent rank computation") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + rng() % 5;
    EchelonBasis basis(dim);
    std::vector<CRowVector> accepted;
    std::vector<CRowVector> all;
    for (int step = 0; step < 8; ++step) {
      CRowVector v(dim);
      if (!all.empty() && rng() % 3 == 0) {
        // Combination of earlier vectors: always dependent.
        for (const auto& w : all) {
          const Complex c = small_complex(rng);
          for (std::size_t i = 0; i < dim; ++i) v[i] += c * w[i];
        }
      } else {
        for (std::size_t i = 0; i < dim; ++i) v[i] = rng() % 2 ? small_complex(rng) : Complex();
      }
      all.push_back(v);
      const std::size_t rank_before = rank_of(accepted);
      std::vector<CRowVector> with_v = accepted;
      with_v.push_back(v);
      const bool independent = rank_of(with_v) > rank_before;
      CHECK(basis.insert(v, "w") == independent);
      if (independent) accepted.push_back(v);

      REQUIRE(basis.size() <= dim);
      CHECK(basis.size() == rank_of(all));
      const auto& rows = basis.rows();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        CHECK(!rows[r].vector.is_zero());
        CHECK(rows[r].vector[rows[r].pivot] == Complex(1));
        if (r > 0) CHECK(rows[r - 1].pivot < rows[r].pivot);
        for (std::size_t o = 0; o < rows.size(); ++o) {
          if (o != r) CHECK(rows[r].vector[rows[o].pivot].is_zero());
        }
        for (std::size_t c = 0; c < rows[r].pivot; ++c) CHECK(rows[r].vector[c].is_zero());
      }
    }
    for (const auto& v : all) CHECK(basis.contains(v));
  }
}
