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


// GF(2^m) for odd m up to 9, elements as bit polynomials over the basis x^j.

#include <cstdint>

#include "mincode/constructions.hpp"
#include "mincode/error.hpp"

namespace mincode {

namespace {

// Primitive moduli with the x^m term dropped.
std::uint32_t reduction_poly(unsigned m) {
  switch (m) {
    case 3: return 0b11;           // x^3 + x + 1
    case 5: return 0b101;          // x^5 + x^2 + 1
    case 7: return 0b11;           // x^7 + x + 1
    case 9: return 0b10001;        // x^9 + x^4 + 1
    default:
      throw Error(ErrorKind::UnsupportedDegree,
                  "dual BCH trace code needs m in {3, 5, 7, 9}, got " + std::to_string(m));
  }
}

class BinaryExtension {
 public:
  explicit BinaryExtension(unsigned m) : m_(m), low_(reduction_poly(m)) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < m_; ++i) {
      if (b & (1u << i)) acc ^= a;
      a <<= 1;
      if (a & (1u << m_)) a = (a ^ (1u << m_)) ^ low_;
    }
    return acc;
  }

  // x + x^2 + ... + x^(2^(m-1)); lands in GF(2).
  Element trace(std::uint32_t a) const noexcept {
    std::uint32_t t = 0;
    for (unsigned i = 0; i < m_; ++i) {
      t ^= a;
      a = mul(a, a);
    }
    return static_cast<Element>(t & 1u);
  }

 private:
  unsigned m_;
  std::uint32_t low_;
};

}  // namespace

LinearCode dual_bch_trace(unsigned m) {
  const BinaryExtension f(m);
  const std::size_t n = (std::size_t{1} << m) - 1;
  const std::uint32_t alpha = 0b10;
  const std::uint32_t alpha3 = f.mul(alpha, f.mul(alpha, alpha));

  Matrix g(Field::make(2), 2 * m, n);
  std::uint32_t a1 = 1;
  std::uint32_t a3 = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      const std::uint32_t e = 1u << j;
      g.at(j, i) = f.trace(f.mul(e, a1));
      g.at(m + j, i) = f.trace(f.mul(e, a3));
    }
    a1 = f.mul(a1, alpha);
    a3 = f.mul(a3, alpha3);
  }
  return LinearCode::from_generator(std::move(g));
}

}  // namespace mincode
