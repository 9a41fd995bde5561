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
#include <memory>
#include <span>
#include <vector>

namespace mincode {

/// A field element in its canonical integer encoding: the base-p digits of
/// the code, least significant first, are the coefficients of the polynomial
/// representative d0 + d1*x + ... modulo the field's modulus.
using Element = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Arithmetic in GF(p^m) for orders up to 256. Immutable after construction;
/// every operation is a table lookup.
class Field {
 public:
  /// Builds GF(q) with the registered canonical modulus. Throws
  /// NotAPrimePower or UnsupportedOrder.
  static FieldPtr make(unsigned q);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  unsigned order() const noexcept { return q_; }
  bool is_prime() const noexcept { return m_ == 1; }

  /// Coefficients c0..cm of the monic modulus (c_m = 1). For prime fields this
  /// is x (i.e. {0, 1}) and plays no role in the arithmetic.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  bool contains(unsigned code) const noexcept { return code < q_; }

  Element add(Element a, Element b) const noexcept { return add_[index(a, b)]; }
  Element sub(Element a, Element b) const noexcept { return add_[index(a, neg_[b])]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element mul(Element a, Element b) const noexcept { return mul_[index(a, b)]; }
  Element inv(Element a) const;  // DivisionByZero for a == 0
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Row `a` of the multiplication table: mul_row(a)[b] == mul(a, b).
  const Element* mul_row(Element a) const noexcept { return mul_.data() + index(a, 0); }
  const Element* add_row(Element a) const noexcept { return add_.data() + index(a, 0); }

  std::vector<unsigned> digits(Element a) const;
  Element from_digits(std::span<const unsigned> digits) const;

 private:
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

  std::size_t index(Element a, Element b) const noexcept {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

/// Splits q into p^m. Returns false if q is not a prime power (q >= 2).
bool prime_power(unsigned q, unsigned& p, unsigned& m);

/// Orders with a registered modulus, ascending.
std::vector<unsigned> supported_orders();

}  // namespace mincode
