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

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mincode/linalg.hpp"

namespace mincode {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

struct EnumerationOptions {
  /// Largest number of messages (q^k) an operation may walk.
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Number of codewords of each Hamming weight. Equality compares only the
/// nonzero counts, so distributions sized for different lengths still compare
/// equal when they describe the same multiset of weights.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  explicit WeightDistribution(std::size_t length) : counts_(length + 1, 0) {}

  static WeightDistribution from_entries(std::initializer_list<std::pair<std::size_t, std::uint64_t>> entries);
  static WeightDistribution from_entries(const std::vector<std::pair<std::size_t, std::uint64_t>>& entries);

  std::size_t length() const noexcept { return counts_.empty() ? 0 : counts_.size() - 1; }
  std::uint64_t operator[](std::size_t w) const noexcept { return w < counts_.size() ? counts_[w] : 0; }
  void add(std::size_t weight, std::uint64_t count = 1);

  std::uint64_t total() const noexcept;
  /// Smallest weight > 0 with a nonzero count.
  std::optional<std::size_t> min_nonzero_weight() const noexcept;
  /// Largest weight with a nonzero count.
  std::optional<std::size_t> max_weight() const noexcept;
  std::vector<std::pair<std::size_t, std::uint64_t>> entries() const;
  std::vector<std::size_t> nonzero_weights() const;

  WeightDistribution& operator+=(const WeightDistribution& other);
  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b);

  /// "{0:1, 12:28, 16:3}"
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> counts_;
};

namespace detail {
struct CodeCache;
}

/// A linear [n, k]_q code given by a full-rank generator matrix. The matrix is
/// stored exactly as supplied (row choices matter to the extension
/// construction); the weight distribution is computed on first use and shared
/// between copies.
class LinearCode {
 public:
  /// Throws RankDeficient when rank(G) < rows(G), DimensionTooSmall for an
  /// empty matrix.
  static LinearCode from_generator(Matrix generator);

  const Field& field() const noexcept { return generator_.field(); }
  const FieldPtr& field_ptr() const noexcept { return generator_.field_ptr(); }
  unsigned q() const noexcept { return field().order(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }

  /// q^k, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> codeword_count() const noexcept;
  /// (q^k - 1) / (q - 1), or nullopt on overflow.
  std::optional<std::uint64_t> projective_count() const noexcept;
  bool enumerable(std::uint64_t cap) const noexcept;

 private:
  explicit LinearCode(Matrix generator);
  friend const WeightDistribution& cached_distribution(const LinearCode&, const EnumerationOptions&);

  Matrix generator_;
  std::shared_ptr<detail::CodeCache> cache_;
};

inline LinearCode code_from_generator(Matrix generator) {
  return LinearCode::from_generator(std::move(generator));
}

/// Throws EnumerationTooLarge when q^k exceeds the cap.
void require_enumerable(const LinearCode& code, std::uint64_t cap);

using CodewordVisitor = std::function<void(std::span<const Element> message, std::span<const Element> codeword)>;

/// Visits all q^k (message, message * G) pairs in lexicographic message order
/// (message entry 0 most significant). Single-threaded and deterministic.
void enumerate_codewords(const LinearCode& code, const CodewordVisitor& visit,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Message with lexicographic index `index` (0 <= index < q^k).
Vector message_at(unsigned q, std::size_t k, std::uint64_t index);

/// Exact distribution by exhaustive enumeration, cached on the code. Binary
/// codes walk messages in Gray-code order over bit-packed rows; other fields
/// use an odometer walk. Work is split across threads by message ranges.
WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& opts = {});

/// Uncached, single-threaded distribution from `enumerate_codewords`; the
/// straightforward path the optimized one is checked against.
WeightDistribution weight_distribution_reference(const LinearCode& code,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

std::size_t min_weight(const LinearCode& code, const EnumerationOptions& opts = {});
std::size_t max_weight(const LinearCode& code, const EnumerationOptions& opts = {});

/// One codeword per scalar class: the one whose message has leading
/// coefficient 1.
struct ProjectiveRep {
  Vector message;
  Vector codeword;
  SupportMask mask;
};

/// All (q^k - 1)/(q - 1) representatives in lexicographic message order.
std::vector<ProjectiveRep> projective_representatives(const LinearCode& code,
                                                      const EnumerationOptions& opts = {});

/// Support masks of the projective representatives packed back to back, in
/// the same order as `projective_representatives`.
struct RepresentativeMasks {
  std::size_t count = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> masks;
  std::vector<std::uint32_t> weights;

  const std::uint64_t* mask(std::size_t i) const noexcept { return masks.data() + i * words; }
};

RepresentativeMasks representative_masks(const LinearCode& code, const EnumerationOptions& opts = {});

/// Message of the representative with the given index.
Vector representative_message(unsigned q, std::size_t k, std::uint64_t index);

/// Nonzero columns, pairwise not scalar multiples.
bool is_projective(const LinearCode& code);
/// gram(G) == 0.
bool is_self_orthogonal(const LinearCode& code);
/// Every nonzero weight divisible by 4. WrongCharacteristic unless q == 2.
bool is_doubly_even(const LinearCode& code, const EnumerationOptions& opts = {});

/// The code generated by G without the given row (0-based). DimensionTooSmall
/// when k < 2.
LinearCode row_removed_subcode(const LinearCode& code, std::size_t row);

}  // namespace mincode
