// Copyright 2026 The mpha Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mpha/errors.hpp"
#include "mpha/weight.hpp"

namespace mpha {

/// Plain vector over the extended reals. Orientation is given by context.
using Vector = std::vector<ExtendedWeight>;

/// Dense row-major matrix over the completed max-plus semiring.
class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  TropicalMatrix(std::size_t rows, std::size_t cols, ExtendedWeight fill = kEps)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  TropicalMatrix(std::initializer_list<std::initializer_list<ExtendedWeight>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<ExtendedWeight> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw ShapeError("matrix entry count " + std::to_string(entries_.size()) +
                       " does not match " + std::to_string(rows_) + "x" +
                       std::to_string(cols_));
  }

  /// The all-epsilon matrix.
  static TropicalMatrix epsilon(std::size_t rows, std::size_t cols) {
    return TropicalMatrix(rows, cols);
  }

  /// Unit on the diagonal, epsilon elsewhere.
  static TropicalMatrix identity(std::size_t n) {
    TropicalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = kUnit;
    return m;
  }

  static TropicalMatrix column(const Vector& v) { return {v.size(), 1, v}; }
  static TropicalMatrix row(const Vector& v) { return {1, v.size(), v}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  ExtendedWeight& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  ExtendedWeight operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  ExtendedWeight at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    return (*this)(i, j);
  }

  std::span<const ExtendedWeight> row_span(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const {
    auto r = row_span(i);
    return {r.begin(), r.end()};
  }
  Vector column_vector(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  const std::vector<ExtendedWeight>& entries() const noexcept { return entries_; }

  TropicalMatrix transpose() const {
    TropicalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtendedWeight> entries_;
};

/// Generic semiring product [A B]_ij = S::add_k S::mul(a_ik, b_kj).
template <class Semiring>
TropicalMatrix multiply(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("product of " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));
  TropicalMatrix c(a.rows(), b.cols(), Semiring::zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ExtendedWeight aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = Semiring::add(c(i, j), Semiring::mul(aik, b(k, j)));
    }
  return c;
}

template <class Semiring>
TropicalMatrix elementwise_add(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("elementwise sum of differently shaped matrices");
  TropicalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = Semiring::add(a(i, j), b(i, j));
  return c;
}

inline TropicalMatrix mat_otimes(const TropicalMatrix& a, const TropicalMatrix& b) {
  return multiply<MaxPlus>(a, b);
}
inline TropicalMatrix mat_otimes_dual(const TropicalMatrix& a, const TropicalMatrix& b) {
  return multiply<MinPlus>(a, b);
}
inline TropicalMatrix mat_oplus(const TropicalMatrix& a, const TropicalMatrix& b) {
  return elementwise_add<MaxPlus>(a, b);
}
inline TropicalMatrix mat_oplus_dual(const TropicalMatrix& a, const TropicalMatrix& b) {
  return elementwise_add<MinPlus>(a, b);
}

/// A^k for k >= 1, by repeated right multiplication.
inline TropicalMatrix mat_power(const TropicalMatrix& a, std::size_t k) {
  if (!a.is_square()) throw ShapeError("power of a non-square matrix");
  if (k == 0) throw ShapeError("max-plus power needs k >= 1");
  TropicalMatrix p = a;
  for (std::size_t i = 1; i < k; ++i) p = mat_otimes(p, a);
  return p;
}

/// A (x) x for a column vector x.
inline Vector otimes(const TropicalMatrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector product shape mismatch");
  Vector y(a.rows(), kEps);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = oplus(y[i], otimes(a(i, j), x[j]));
  return y;
}

/// x^T (x) A for a row vector x.
inline Vector otimes(const Vector& x, const TropicalMatrix& a) {
  if (a.rows() != x.size()) throw ShapeError("vector-matrix product shape mismatch");
  Vector y(a.cols(), kEps);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] = oplus(y[j], otimes(x[i], a(i, j)));
  return y;
}

/// Inner product x^T (x) y.
inline ExtendedWeight dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("inner product shape mismatch");
  ExtendedWeight s = kEps;
  for (std::size_t i = 0; i < x.size(); ++i) s = oplus(s, otimes(x[i], y[i]));
  return s;
}

inline Vector vec_oplus(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("vector sum shape mismatch");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = oplus(x[i], y[i]);
  return z;
}

inline Vector vec_oplus_dual(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("vector sum shape mismatch");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = oplus_dual(x[i], y[i]);
  return z;
}

/// x <= y in the max-plus order, i.e. x (+) y = y.
inline bool leq(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("order comparison shape mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] <= y[i])) return false;
  return true;
}

/// Projection onto the max-plus Boolean semiring {eps, 1}.
inline TropicalMatrix boolean_support(const TropicalMatrix& a) {
  TropicalMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_epsilon()) s(i, j) = kUnit;
  return s;
}

inline bool is_all_epsilon(const TropicalMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](ExtendedWeight w) { return w.is_epsilon(); });
}

inline bool is_all_epsilon(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](ExtendedWeight w) { return w.is_epsilon(); });
}

inline bool has_finite_entry(const Vector& x) {
  return std::any_of(x.begin(), x.end(), [](ExtendedWeight w) { return w.is_finite(); });
}

inline bool has_top_entry(const TropicalMatrix& a) {
  return std::any_of(a.entries().begin(), a.entries().end(),
                     [](ExtendedWeight w) { return w.is_top(); });
}

inline std::ostream& operator<<(std::ostream& os, const Vector& x) {
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  return os << ')';
}

inline std::ostream& operator<<(std::ostream& os, const TropicalMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace mpha
