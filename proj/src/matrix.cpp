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

#include "qfa/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qfa {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1);
  return m;
}

bool CRowVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Complex& z) { return z.is_zero(); });
}

bool CColVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Complex& z) { return z.is_zero(); });
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Complex& s = a(i, l);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(l, j).is_zero()) continue;
        out(i, j) += s * b(l, j);
      }
    }
  }
  return out;
}

CRowVector operator*(const CRowVector& v, const CMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row vector product: dimension mismatch");
  CRowVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out[j] += v[i] * m(i, j);
    }
  }
  return out;
}

CColVector operator*(const CMatrix& m, const CColVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("column vector product: dimension mismatch");
  CColVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

Complex operator*(const CRowVector& v, const CColVector& w) {
  if (v.size() != w.size()) throw std::invalid_argument("inner product: dimension mismatch");
  Complex acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() || w[i].is_zero()) continue;
    acc += v[i] * w[i];
  }
  return acc;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: dimension mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

CMatrix operator*(const Complex& s, const CMatrix& m) {
  CMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (b(p, q).is_zero()) continue;
          out(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
        }
      }
    }
  }
  return out;
}

CRowVector kron(const CRowVector& a, const CRowVector& b) {
  CRowVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

CColVector kron(const CColVector& a, const CColVector& b) {
  CColVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  if (!a.is_square() || !b.is_square()) throw std::invalid_argument("direct_sum: operands must be square");
  const std::size_t n = a.rows() + b.rows();
  CMatrix out(n, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  const std::size_t off = a.rows();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
  return out;
}

CMatrix conjugate(const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).conj();
  return out;
}

CRowVector conjugate(const CRowVector& v) {
  CRowVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

CRowVector bra(const CColVector& v) {
  CRowVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

bool is_unitary(const CMatrix& a) {
  if (!a.is_square()) return false;
  return dagger(a) * a == CMatrix::identity(a.rows());
}

std::ostream& operator<<(std::ostream& os, const CMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const CRowVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

}  // namespace qfa
