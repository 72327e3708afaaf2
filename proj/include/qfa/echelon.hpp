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

#ifndef QFA_ECHELON_HPP
#define QFA_ECHELON_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qfa/matrix.hpp"

namespace qfa {

/// Incrementally maintained reduced row-echelon basis of a subspace of
/// C^d, used for exact span-membership tests.
///
/// Invariants: pivots strictly increase down the rows; every row has a 1 at
/// its own pivot and a 0 at every other row's pivot; no zero rows.
class EchelonBasis {
 public:
  struct Row {
    std::size_t pivot = 0;
    CRowVector vector;
    /// Word whose image introduced this row.
    std::string tag;
  };

  explicit EchelonBasis(std::size_t ambient_dimension = 0) : dimension_(ambient_dimension) {}

  [[nodiscard]] std::size_t ambient_dimension() const { return dimension_; }
  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] bool empty() const { return rows_.empty(); }
  [[nodiscard]] const std::vector<Row>& rows() const { return rows_; }

  /// v minus its projection along the basis pivots; zero iff v is in the span.
  [[nodiscard]] CRowVector residual(const CRowVector& v) const;
  [[nodiscard]] bool contains(const CRowVector& v) const;

  /// Adds v to the basis unless it is already in the span. Returns whether
  /// the basis grew. Throws std::invalid_argument on dimension mismatch.
  bool insert(const CRowVector& v, std::string tag);

 private:
  void check_dimension(const CRowVector& v) const;

  std::size_t dimension_;
  std::vector<Row> rows_;
};

struct SpanInsertResult {
  bool inserted = false;
  EchelonBasis basis;
};

/// Value-returning form of EchelonBasis::insert.
SpanInsertResult span_insert(const EchelonBasis& basis, const CRowVector& v, std::string tag);

}  // namespace qfa

#endif  // QFA_ECHELON_HPP
