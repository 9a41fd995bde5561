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

#include "mincode/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mincode/error.hpp"

namespace mincode {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix entry count " + std::to_string(data_.size()) +
                                                  " != " + std::to_string(rows_) + "x" +
                                                  std::to_string(cols_));
}

Matrix Matrix::identity(FieldPtr field, std::size_t size) {
  Matrix m(std::move(field), size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged rows in matrix literal");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.data_ != b.data_) return false;
  if (a.field_ == b.field_) return true;
  return a.field_ && b.field_ && a.field_->order() == b.field_->order();
}

std::size_t words_for_bits(std::size_t bits) noexcept { return (bits + 63) / 64; }

SupportMask::SupportMask(std::size_t bits) : bits_(bits), words_(words_for_bits(bits), 0) {}

void SupportMask::set(std::size_t i) noexcept {
  std::uint64_t& w = words_[i >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (!(w & bit)) {
    w |= bit;
    ++popcount_;
  }
}

bool SupportMask::subset_of(const SupportMask& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & ~other.words_[i]) return false;
  for (std::size_t i = n; i < words_.size(); ++i)
    if (words_[i]) return false;
  return true;
}

std::vector<std::size_t> SupportMask::indices() const {
  std::vector<std::size_t> out;
  out.reserve(popcount_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t hamming_weight(std::span<const Element> v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element e) { return e != 0; }));
}

WeightAndSupport weight_and_support(std::span<const Element> v) {
  WeightAndSupport out{0, SupportMask(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.mask.set(i);
  out.weight = out.mask.popcount();
  return out;
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  RrefResult out{m, 0, {}};
  Matrix& r = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < r.cols() && pivot_row < r.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, c) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row) std::swap_ranges(r.row(sel).begin(), r.row(sel).end(), r.row(pivot_row).begin());
    const Element scale_by = f.inv(r.at(pivot_row, c));
    for (Element& e : r.row(pivot_row)) e = f.mul(e, scale_by);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r.at(i, c) == 0) continue;
      axpy(f, f.neg(r.at(i, c)), r.row(pivot_row), r.row(i));
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix transpose(const Matrix& m) {
  Matrix t(m.field_ptr(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.field().order() != b.field().order())
    throw Error(ErrorKind::DimensionMismatch, "operands live in different fields");
  const Field& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (a.at(i, l) != 0) axpy(f, a.at(i, l), b.row(l), out.row(i));
  return out;
}

Matrix gram(const Matrix& g) {
  const Field& f = g.field();
  Matrix out(g.field_ptr(), g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.rows(); ++j) {
      const Element v = dot(f, g.row(i), g.row(j));
      out.at(i, j) = v;
      out.at(j, i) = v;
    }
  return out;
}

Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b) noexcept {
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

Vector combine(const Matrix& g, std::span<const Element> message) {
  Vector out(g.cols(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (message[r] != 0) axpy(g.field(), message[r], g.row(r), out);
  return out;
}

Vector scale(const Field& f, Element s, std::span<const Element> v) {
  Vector out(v.size());
  const Element* row = f.mul_row(s);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = row[v[i]];
  return out;
}

void axpy(const Field& f, Element s, std::span<const Element> x, std::span<Element> y) noexcept {
  const Element* mrow = f.mul_row(s);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.add(y[i], mrow[x[i]]);
}

bool proportional(const Field& f, std::span<const Element> a, std::span<const Element> b) noexcept {
  if (a.size() != b.size()) return false;
  Element lambda = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    const Element ratio = f.mul(b[i], f.inv(a[i]));
    if (lambda == 0)
      lambda = ratio;
    else if (ratio != lambda)
      return false;
  }
  return lambda != 0;
}

Vector normalize_leading(const Field& f, std::span<const Element> v) {
  auto it = std::find_if(v.begin(), v.end(), [](Element e) { return e != 0; });
  if (it == v.end()) return Vector(v.begin(), v.end());
  return scale(f, f.inv(*it), v);
}

std::uint64_t lex_key(unsigned q, std::span<const Element> v) noexcept {
  std::uint64_t key = 0;
  for (Element e : v) key = key * q + e;
  return key;
}

}  // namespace mincode
