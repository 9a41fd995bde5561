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
#include <optional>
#include <span>

#include "mincode/codes.hpp"

namespace mincode {

/// A pair proving non-minimality: supp(inner) is contained in supp(outer)
/// and inner is not a scalar multiple of outer.
struct Witness {
  Vector outer;
  Vector inner;
};

struct MinimalityResult {
  bool minimal = true;
  std::optional<Witness> witness;
};

/// Throws ZeroCodeword, NotACodeword, EnumerationTooLarge.
bool is_minimal_codeword(const LinearCode& code, std::span<const Element> c, const EnumerationOptions& opts = {});

/// Scans projective representatives in lexicographic message order and
/// returns the first failing pair. Throws EnumerationTooLarge when the
/// representative count exceeds the cap.
MinimalityResult is_minimal(const LinearCode& code, const EnumerationOptions& opts = {});

/// Unreduced fraction.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Ratio reduced() const noexcept;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct ABStatus {
  Ratio ratio;
  bool satisfied = false;
};

/// q * w_min > (q - 1) * w_max.
bool ab_condition(unsigned q, std::size_t w_min, std::size_t w_max) noexcept;

ABStatus ab_status(const LinearCode& code, const EnumerationOptions& opts = {});

/// g_q(k, d) = sum_{i<k} ceil(d / q^i).
std::uint64_t griesmer(unsigned q, std::size_t k, std::size_t d);

std::int64_t griesmer_defect(const LinearCode& code, const EnumerationOptions& opts = {});

struct AnalyzeOptions {
  bool skip_minimality = false;
  EnumerationOptions enumeration;
};

/// Fields that need the weight distribution are empty when q^k exceeds the
/// cap; `minimal` is empty when minimality was skipped.
struct CodeReport {
  unsigned q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> w_max;
  std::optional<WeightDistribution> distribution;
  std::optional<Ratio> ab_ratio;
  std::optional<bool> ab_satisfied;
  std::optional<bool> minimal;
  std::optional<Witness> witness;
  bool projective = false;
  bool self_orthogonal = false;
  std::optional<bool> doubly_even;
  std::optional<std::uint64_t> griesmer_length;
  std::optional<std::int64_t> griesmer_defect;
};

CodeReport analyze(const LinearCode& code, const AnalyzeOptions& opts = {});

}  // namespace mincode
