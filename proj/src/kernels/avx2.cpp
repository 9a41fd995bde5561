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

// AVX2 variants of the kernels in scalar.cpp. This translation unit is the
// only one compiled with -mavx2; nothing here runs unless dispatch.cpp has
// confirmed CPU support.

#include <immintrin.h>

#include <bit>

#include "mincode/kernels.hpp"

namespace mincode::kernels::avx2 {

namespace {

// Nibble-lookup popcount of each byte, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i v) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::size_t>(_mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1));
}

std::size_t popcount(const std::uint64_t* words, std::size_t count) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < count; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(words[i]));
  return total;
}

std::size_t xor_popcount(std::uint64_t* acc, const std::uint64_t* src, std::size_t count) {
  __m256i sum = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i* a = reinterpret_cast<__m256i*>(acc + i);
    const __m256i v = _mm256_xor_si256(_mm256_loadu_si256(a),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
    _mm256_storeu_si256(a, v);
    sum = _mm256_add_epi64(sum, popcount_lanes(v));
  }
  std::size_t total = horizontal_sum(sum);
  for (; i < count; ++i) {
    acc[i] ^= src[i];
    total += static_cast<std::size_t>(_mm_popcnt_u64(acc[i]));
  }
  return total;
}

inline std::uint32_t zero_bytes(const std::uint8_t* p) {
  const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, _mm256_setzero_si256())));
}

std::size_t count_nonzero(const std::uint8_t* bytes, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) total += 32 - static_cast<std::size_t>(std::popcount(zero_bytes(bytes + i)));
  for (; i < n; ++i) total += bytes[i] != 0;
  return total;
}

void nonzero_mask(const std::uint8_t* bytes, std::size_t n, std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const std::uint64_t bits = static_cast<std::uint32_t>(~zero_bytes(bytes + i));
    out[i >> 6] |= bits << (i & 63);
  }
  for (; i < n; ++i)
    if (bytes[i]) out[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void add_char2(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i* a = reinterpret_cast<__m256i*>(acc + i);
    _mm256_storeu_si256(a, _mm256_xor_si256(_mm256_loadu_si256(a),
                                            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i))));
  }
  for (; i < n; ++i) acc[i] ^= src[i];
}

void add_mod_prime(std::uint8_t* acc, const std::uint8_t* src, std::size_t n, std::uint8_t p) {
  // With c = p - b: a + b mod p is a - c when a >= c and a + b (< p) otherwise,
  // so no intermediate leaves the byte range.
  const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i* pa = reinterpret_cast<__m256i*>(acc + i);
    const __m256i a = _mm256_loadu_si256(pa);
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i c = _mm256_sub_epi8(vp, b);
    const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(a, c), a);
    const __m256i r = _mm256_blendv_epi8(_mm256_add_epi8(a, b), _mm256_sub_epi8(a, c), ge);
    _mm256_storeu_si256(pa, r);
  }
  for (; i < n; ++i) {
    const unsigned s = static_cast<unsigned>(acc[i]) + src[i];
    acc[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
  }
}

std::size_t first_subset_1(const std::uint64_t* masks, std::size_t count, std::uint64_t target) {
  const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + j));
    const __m256i outside = _mm256_andnot_si256(t, m);
    const int hit = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(outside, zero)));
    if (hit) return j + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(hit)));
  }
  for (; j < count; ++j)
    if ((masks[j] & ~target) == 0) return j;
  return count;
}

std::size_t first_subset_2(const std::uint64_t* masks, std::size_t count, const std::uint64_t* target) {
  const __m256i t = _mm256_setr_epi64x(static_cast<long long>(target[0]), static_cast<long long>(target[1]),
                                       static_cast<long long>(target[0]), static_cast<long long>(target[1]));
  const __m256i zero = _mm256_setzero_si256();
  // Lane pair (2i, 2i+1) holds one mask; it is a hit when both lanes are zero.
  auto both = [&](const std::uint64_t* p) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
    const __m256i eq = _mm256_cmpeq_epi64(_mm256_andnot_si256(t, m), zero);
    return _mm256_and_si256(eq, _mm256_shuffle_epi32(eq, 0x4E));
  };
  std::size_t j = 0;
  for (; j + 8 <= count; j += 8) {
    const std::uint64_t* p = masks + 2 * j;
    const __m256i any = _mm256_or_si256(_mm256_or_si256(both(p), both(p + 4)), _mm256_or_si256(both(p + 8), both(p + 12)));
    if (_mm256_testz_si256(any, any)) continue;
    break;
  }
  for (; j < count; ++j)
    if ((masks[2 * j] & ~target[0]) == 0 && (masks[2 * j + 1] & ~target[1]) == 0) return j;
  return count;
}

std::size_t first_subset(const std::uint64_t* masks, std::size_t count, std::size_t words,
                         const std::uint64_t* target) {
  if (words == 1) return first_subset_1(masks, count, target[0]);
  if (words == 2) return first_subset_2(masks, count, target);
  const std::size_t full = words & ~std::size_t{3};
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t* m = masks + j * words;
    bool inside = true;
    std::size_t w = 0;
    for (; w < full && inside; w += 4) {
      const __m256i tv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target + w));
      const __m256i mv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + w));
      inside = _mm256_testc_si256(tv, mv) != 0;
    }
    for (; w < words && inside; ++w) inside = (m[w] & ~target[w]) == 0;
    if (inside) return j;
  }
  return count;
}

const KernelSet kSet{Backend::Avx2, popcount,  xor_popcount,  count_nonzero,
                     nonzero_mask,  add_char2, add_mod_prime, first_subset};

}  // namespace

const KernelSet* kernels() { return &kSet; }

}  // namespace mincode::kernels::avx2
