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

#ifndef QFA_MATRIX_HPP
#define QFA_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "qfa/rational.hpp"

namespace qfa {

/// Dense row-major matrix over the Gaussian rationals.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-by-row literal; every row must have the same length.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Bra-style vector; multiplies matrices from the left.
struct CRowVector {
  std::vector<Complex> entries;

  CRowVector() = default;
  explicit CRowVector(std::size_t n) : entries(n) {}
  CRowVector(std::initializer_list<Complex> e) : entries(e) {}

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] bool is_zero() const;
  Complex& operator[](std::size_t i) { return entries[i]; }
  const Complex& operator[](std::size_t i) const { return entries[i]; }

  friend bool operator==(const CRowVector&, const CRowVector&) = default;
};

/// Ket-style vector; multiplied by matrices from the right.
struct CColVector {
  std::vector<Complex> entries;

  CColVector() = default;
  explicit CColVector(std::size_t n) : entries(n) {}
  CColVector(std::initializer_list<Complex> e) : entries(e) {}

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] bool is_zero() const;
  Complex& operator[](std::size_t i) { return entries[i]; }
  const Complex& operator[](std::size_t i) const { return entries[i]; }

  friend bool operator==(const CColVector&, const CColVector&) = default;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CRowVector operator*(const CRowVector& v, const CMatrix& m);
CColVector operator*(const CMatrix& m, const CColVector& v);
/// Bra-ket pairing without conjugation: sum of v[i] * w[i].
Complex operator*(const CRowVector& v, const CColVector& w);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const Complex& s, const CMatrix& m);

/// Kronecker product; block (i, j) equals a(i, j) * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CRowVector kron(const CRowVector& a, const CRowVector& b);
CColVector kron(const CColVector& a, const CColVector& b);

/// Block-diagonal diag(a, b). Throws std::invalid_argument unless both are square.
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

CMatrix conjugate(const CMatrix& a);
CRowVector conjugate(const CRowVector& v);
CMatrix transpose(const CMatrix& a);
CMatrix dagger(const CMatrix& a);
/// Conjugate transpose of a ket.
CRowVector bra(const CColVector& v);

/// Exact test of dagger(a) * a == I. Non-square input is not unitary.
bool is_unitary(const CMatrix& a);

std::ostream& operator<<(std::ostream& os, const CMatrix& m);
std::ostream& operator<<(std::ostream& os, const CRowVector& v);

}  // namespace qfa

#endif  // QFA_MATRIX_HPP
