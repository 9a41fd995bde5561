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

#include <bit>

#include "mincode/kernels.hpp"

namespace mincode::kernels::scalar {

namespace {

std::size_t popcount(const std::uint64_t* words, std::size_t count) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

std::size_t xor_popcount(std::uint64_t* acc, const std::uint64_t* src, std::size_t count) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    acc[i] ^= src[i];
    total += static_cast<std::size_t>(std::popcount(acc[i]));
  }
  return total;
}

std::size_t count_nonzero(const std::uint8_t* bytes, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += bytes[i] != 0;
  return total;
}

void nonzero_mask(const std::uint8_t* bytes, std::size_t n, std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (bytes[i]) out[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void add_char2(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] ^= src[i];
}

void add_mod_prime(std::uint8_t* acc, const std::uint8_t* src, std::size_t n, std::uint8_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = static_cast<unsigned>(acc[i]) + src[i];
    acc[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
  }
}

std::size_t first_subset(const std::uint64_t* masks, std::size_t count, std::size_t words,
                         const std::uint64_t* target) {
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t* m = masks + j * words;
    std::size_t w = 0;
    while (w < words && (m[w] & ~target[w]) == 0) ++w;
    if (w == words) return j;
  }
  return count;
}

const KernelSet kSet{Backend::Scalar, popcount,  xor_popcount,  count_nonzero,
                     nonzero_mask,    add_char2, add_mod_prime, first_subset};

}  // namespace

const KernelSet& kernels() { return kSet; }

}  // namespace mincode::kernels::scalar
