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

#include "qfa/echelon.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qfa {

namespace {

// row -= factor * other, skipping zero entries of other.
void subtract_scaled(CRowVector& row, const Complex& factor, const CRowVector& other) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (other[i].is_zero()) continue;
    row[i] -= factor * other[i];
  }
}

}  // namespace

void EchelonBasis::check_dimension(const CRowVector& v) const {
  if (v.size() != dimension_) {
    throw std::invalid_argument("echelon basis: vector of dimension " + std::to_string(v.size()) +
                                " in ambient dimension " + std::to_string(dimension_));
  }
}

CRowVector EchelonBasis::residual(const CRowVector& v) const {
  check_dimension(v);
  CRowVector r = v;
  for (const Row& row : rows_) {
    if (r[row.pivot].is_zero()) continue;
    const Complex c = r[row.pivot];
    subtract_scaled(r, c, row.vector);
  }
  return r;
}

bool EchelonBasis::contains(const CRowVector& v) const { return residual(v).is_zero(); }

bool EchelonBasis::insert(const CRowVector& v, std::string tag) {
  CRowVector r = residual(v);
  const auto first = std::find_if(r.entries.begin(), r.entries.end(), [](const Complex& z) { return !z.is_zero(); });
  if (first == r.entries.end()) return false;

  const auto pivot = static_cast<std::size_t>(first - r.entries.begin());
  const Complex scale = r[pivot];
  for (auto& z : r.entries) {
    if (!z.is_zero()) z /= scale;
  }
  for (Row& row : rows_) {
    if (row.vector[pivot].is_zero()) continue;
    const Complex c = row.vector[pivot];
    subtract_scaled(row.vector, c, r);
  }
  const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Row& row, std::size_t p) { return row.pivot < p; });
  rows_.insert(pos, Row{pivot, std::move(r), std::move(tag)});
  return true;
}

SpanInsertResult span_insert(const EchelonBasis& basis, const CRowVector& v, std::string tag) {
  SpanInsertResult out{false, basis};
  out.inserted = out.basis.insert(v, std::move(tag));
  return out;
}

}  // namespace qfa
