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

#include "mincode/codes.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "mincode/error.hpp"
#include "internal.hpp"

namespace mincode {

WeightDistribution WeightDistribution::from_entries(
    std::initializer_list<std::pair<std::size_t, std::uint64_t>> entries) {
  return from_entries(std::vector<std::pair<std::size_t, std::uint64_t>>(entries));
}

WeightDistribution WeightDistribution::from_entries(
    const std::vector<std::pair<std::size_t, std::uint64_t>>& entries) {
  std::size_t length = 0;
  for (const auto& [w, c] : entries) length = std::max(length, w);
  WeightDistribution d(length);
  for (const auto& [w, c] : entries) d.add(w, c);
  return d;
}

void WeightDistribution::add(std::size_t weight, std::uint64_t count) {
  if (weight >= counts_.size()) counts_.resize(weight + 1, 0);
  counts_[weight] += count;
}

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

std::optional<std::size_t> WeightDistribution::min_nonzero_weight() const noexcept {
  for (std::size_t w = 1; w < counts_.size(); ++w)
    if (counts_[w]) return w;
  return std::nullopt;
}

std::optional<std::size_t> WeightDistribution::max_weight() const noexcept {
  for (std::size_t w = counts_.size(); w-- > 0;)
    if (counts_[w]) return w;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::uint64_t>> WeightDistribution::entries() const {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t w = 0; w < counts_.size(); ++w)
    if (counts_[w]) out.emplace_back(w, counts_[w]);
  return out;
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 1; w < counts_.size(); ++w)
    if (counts_[w]) out.push_back(w);
  return out;
}

WeightDistribution& WeightDistribution::operator+=(const WeightDistribution& other) {
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t w = 0; w < other.counts_.size(); ++w) counts_[w] += other.counts_[w];
  return *this;
}

bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
  return a.entries() == b.entries();
}

std::string WeightDistribution::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, c] : entries()) {
    if (!first) os << ", ";
    os << w << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

LinearCode::LinearCode(Matrix generator)
    : generator_(std::move(generator)), cache_(std::make_shared<detail::CodeCache>()) {}

LinearCode LinearCode::from_generator(Matrix generator) {
  if (generator.rows() == 0 || generator.cols() == 0)
    throw Error(ErrorKind::DimensionTooSmall, "generator matrix must have at least one row and column");
  const std::size_t r = rank(generator);
  if (r != generator.rows())
    throw Error(ErrorKind::RankDeficient, "generator has rank " + std::to_string(r) + " but " +
                                              std::to_string(generator.rows()) + " rows");
  return LinearCode(std::move(generator));
}

std::optional<std::uint64_t> LinearCode::codeword_count() const noexcept {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(q()), &total)) return std::nullopt;
  }
  return total;
}

std::optional<std::uint64_t> LinearCode::projective_count() const noexcept {
  auto total = codeword_count();
  if (!total) return std::nullopt;
  return (*total - 1) / (q() - 1);
}

bool LinearCode::enumerable(std::uint64_t cap) const noexcept {
  auto total = codeword_count();
  return total && *total <= cap;
}

void require_enumerable(const LinearCode& code, std::uint64_t cap) {
  if (!code.enumerable(cap)) {
    auto total = code.codeword_count();
    throw Error(ErrorKind::EnumerationTooLarge,
                "q^k = " + (total ? std::to_string(*total) : std::string("2^64+")) +
                    " codewords exceeds the enumeration cap " + std::to_string(cap));
  }
}

bool is_projective(const LinearCode& code) {
  const Matrix& g = code.generator();
  const Field& f = code.field();
  std::set<Vector> seen;
  for (std::size_t c = 0; c < g.cols(); ++c) {
    const Vector col = g.column(c);
    if (hamming_weight(col) == 0) return false;
    if (!seen.insert(normalize_leading(f, col)).second) return false;
  }
  return true;
}

bool is_self_orthogonal(const LinearCode& code) { return gram(code.generator()).is_zero(); }

bool is_doubly_even(const LinearCode& code, const EnumerationOptions& opts) {
  if (code.q() != 2)
    throw Error(ErrorKind::WrongCharacteristic,
                "doubly-even is defined for binary codes only (q = " + std::to_string(code.q()) + ")");
  for (std::size_t w : weight_distribution(code, opts).nonzero_weights())
    if (w % 4 != 0) return false;
  return true;
}

LinearCode row_removed_subcode(const LinearCode& code, std::size_t row) {
  const Matrix& g = code.generator();
  if (g.rows() < 2)
    throw Error(ErrorKind::DimensionTooSmall, "cannot remove a row from a 1-dimensional code");
  if (row >= g.rows())
    throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(row) + " out of range");
  Matrix sub(code.field_ptr(), g.rows() - 1, g.cols());
  for (std::size_t r = 0, out = 0; r < g.rows(); ++r) {
    if (r == row) continue;
    std::copy(g.row(r).begin(), g.row(r).end(), sub.row(out++).begin());
  }
  return LinearCode::from_generator(std::move(sub));
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& opts) {
  return cached_distribution(code, opts);
}

std::size_t min_weight(const LinearCode& code, const EnumerationOptions& opts) {
  return weight_distribution(code, opts).min_nonzero_weight().value_or(0);
}

std::size_t max_weight(const LinearCode& code, const EnumerationOptions& opts) {
  return weight_distribution(code, opts).max_weight().value_or(0);
}

}  // namespace mincode
