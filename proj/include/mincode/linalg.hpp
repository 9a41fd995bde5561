/*
* Copyright 2026 The mincode Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mincode/galois.hpp"

namespace mincode {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a shared Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(FieldPtr field, std::size_t size);
  static Matrix from_rows(FieldPtr field, const std::vector<Vector>& rows);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Element& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  Vector column(std::size_t c) const;

  const std::vector<Element>& entries() const noexcept { return data_; }

  bool is_zero() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Bit set of the nonzero coordinates of a vector, packed into 64-bit words.
class SupportMask {
 public:
  SupportMask() = default;
  explicit SupportMask(std::size_t bits);

  std::size_t size() const noexcept { return bits_; }
  std::size_t popcount() const noexcept { return popcount_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept;

  /// True iff every set bit here is also set in `other` (a AND NOT b == 0).
  bool subset_of(const SupportMask& other) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::vector<std::size_t> indices() const;

  friend bool operator==(const SupportMask&, const SupportMask&) = default;

 private:
  std::size_t bits_ = 0;
  std::size_t popcount_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t words_for_bits(std::size_t bits) noexcept;

struct WeightAndSupport {
  std::size_t weight = 0;
  SupportMask mask;
};

std::size_t hamming_weight(std::span<const Element> v) noexcept;
WeightAndSupport weight_and_support(std::span<const Element> v);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. Pivot search runs over columns left to right and,
/// within a column, takes the topmost eligible row, so the result is fully
/// determined by the input.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);  // DimensionMismatch
/// G * G^T: pairwise standard inner products of the rows.
Matrix gram(const Matrix& g);

Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b) noexcept;
/// message * G.
Vector combine(const Matrix& g, std::span<const Element> message);
Vector scale(const Field& f, Element s, std::span<const Element> v);
void axpy(const Field& f, Element s, std::span<const Element> x, std::span<Element> y) noexcept;

/// True iff `b` equals lambda * `a` for some nonzero lambda (both nonzero).
bool proportional(const Field& f, std::span<const Element> a, std::span<const Element> b) noexcept;

/// Scales a nonzero vector so that its first nonzero entry is 1.
Vector normalize_leading(const Field& f, std::span<const Element> v);

/// Base-q integer value of a vector with entry 0 most significant; ordering
/// by this key is lexicographic ordering of the tuples.
std::uint64_t lex_key(unsigned q, std::span<const Element> v) noexcept;

}  // namespace mincode
