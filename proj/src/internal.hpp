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

// Library-private helpers shared between translation units.

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

#include "mincode/codes.hpp"

namespace mincode {

namespace detail {
struct CodeCache {
  std::mutex mutex;
  std::optional<WeightDistribution> distribution;
};
}  // namespace detail

const WeightDistribution& cached_distribution(const LinearCode& code, const EnumerationOptions& opts);

/// Lexicographic walk over all messages; stops when `fn` returns false.
void walk_messages(const LinearCode& code, const std::function<bool(const Vector&, const Vector&)>& fn);

/// Lexicographic walk over messages whose first nonzero entry is 1.
void walk_representatives(const LinearCode& code, const std::function<bool(const Vector&, const Vector&)>& fn);

unsigned resolve_threads(unsigned requested);

/// Splits [0, total) into at most `workers` contiguous ranges and runs
/// fn(begin, end, worker) for each, on separate threads when workers > 1.
void run_partitioned(std::uint64_t total, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn);

}  // namespace mincode
