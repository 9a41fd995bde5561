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

// Data-parallel inner loops of the enumeration and minimality engines.
//
// Every kernel has a portable scalar reference in `kernels::scalar` and, on
// x86-64, an AVX2 variant in `kernels::avx2`. The variant used by the rest of
// the library is chosen once at runtime from CPU support; the environment
// variable MINCODE_KERNELS=scalar|avx2 forces a choice.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mincode::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

struct KernelSet {
  Backend backend;

  /// Number of set bits in words[0, count).
  std::size_t (*popcount)(const std::uint64_t* words, std::size_t count);

  /// acc ^= src over `count` words; returns the popcount of the new acc.
  std::size_t (*xor_popcount)(std::uint64_t* acc, const std::uint64_t* src, std::size_t count);

  /// Number of nonzero bytes in bytes[0, n).
  std::size_t (*count_nonzero)(const std::uint8_t* bytes, std::size_t n);

  /// Bit i of out is set iff bytes[i] != 0. `out` holds ceil(n/64) words; the
  /// unused high bits of the last word are cleared.
  void (*nonzero_mask)(const std::uint8_t* bytes, std::size_t n, std::uint64_t* out);

  /// acc[i] ^= src[i]: symbol addition in characteristic 2.
  void (*add_char2)(std::uint8_t* acc, const std::uint8_t* src, std::size_t n);

  /// acc[i] = (acc[i] + src[i]) mod p for symbols already reduced mod p.
  void (*add_mod_prime)(std::uint8_t* acc, const std::uint8_t* src, std::size_t n, std::uint8_t p);

  /// Index of the first mask j in [0, count) with masks[j] a subset of target
  /// (masks[j] AND NOT target == 0); `count` if there is none. Masks are
  /// stored contiguously, `words` words each.
  std::size_t (*first_subset)(const std::uint64_t* masks, std::size_t count, std::size_t words,
                              const std::uint64_t* target);
};

namespace scalar {
const KernelSet& kernels();
}

namespace avx2 {
/// nullptr when the library was built without AVX2 support.
const KernelSet* kernels();
}

bool avx2_supported();

/// The kernel set in use. Thread-safe; resolved on first call.
const KernelSet& active();

/// Overrides the runtime choice (tests and benchmarks). Returns false, leaving
/// the selection unchanged, if the backend is unavailable on this machine.
bool select(Backend b);

}  // namespace mincode::kernels
