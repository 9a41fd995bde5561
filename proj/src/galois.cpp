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

#include "mincode/galois.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mincode/error.hpp"

namespace mincode {

namespace {

// Monic irreducible moduli, coefficients from x^0 up to x^m. The three
// smallest are fixed so that matrix files agree bit-for-bit everywhere.
const std::map<unsigned, std::vector<unsigned>>& registered_moduli() {
  static const std::map<unsigned, std::vector<unsigned>> moduli = {
      {4, {1, 1, 1}},                     // x^2 + x + 1
      {8, {1, 1, 0, 1}},                  // x^3 + x + 1
      {9, {1, 0, 1}},                     // x^2 + 1
      {16, {1, 1, 0, 0, 1}},              // x^4 + x + 1
      {25, {2, 1, 1}},                    // x^2 + x + 2
      {27, {1, 2, 0, 1}},                 // x^3 + 2x + 1
      {32, {1, 0, 1, 0, 0, 1}},           // x^5 + x^2 + 1
      {49, {3, 1, 1}},                    // x^2 + x + 3
      {64, {1, 1, 0, 0, 0, 0, 1}},        // x^6 + x + 1
      {81, {2, 1, 0, 0, 1}},              // x^4 + x + 2
      {121, {7, 1, 1}},                   // x^2 + x + 7
      {125, {2, 3, 0, 1}},                // x^3 + 3x + 2
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},    // x^7 + x + 1
      {169, {2, 1, 1}},                   // x^2 + x + 2
      {243, {1, 2, 0, 0, 0, 1}},          // x^5 + 2x + 1
      {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}}, // x^8 + x^4 + x^3 + x^2 + 1
  };
  return moduli;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPrimePower: return "NotAPrimePower";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::NotACodeword: return "NotACodeword";
    case ErrorKind::ZeroCodeword: return "ZeroCodeword";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::ColumnNotFound: return "ColumnNotFound";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::LengthTooSmall: return "LengthTooSmall";
    case ErrorKind::ABConditionFails: return "ABConditionFails";
    case ErrorKind::BadValuesLength: return "BadValuesLength";
    case ErrorKind::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case ErrorKind::PaddingExhausted: return "PaddingExhausted";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::InconsistentInputs: return "InconsistentInputs";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UnknownTable: return "UnknownTable";
  }
  return "Unknown";
}

bool prime_power(unsigned q, unsigned& p, unsigned& m) {
  if (q < 2) return false;
  unsigned d = 2;
  while (q % d != 0) ++d;
  unsigned rest = q;
  unsigned e = 0;
  while (rest % d == 0) {
    rest /= d;
    ++e;
  }
  if (rest != 1) return false;
  p = d;
  m = e;
  return true;
}

std::vector<unsigned> supported_orders() {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= 256; ++q) {
    unsigned p = 0, m = 0;
    if (!prime_power(q, p, m)) continue;
    if (m == 1 || registered_moduli().count(q)) out.push_back(q);
  }
  return out;
}

FieldPtr Field::make(unsigned q) {
  unsigned p = 0, m = 0;
  if (!prime_power(q, p, m))
    throw Error(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a prime power");
  if (q > 256)
    throw Error(ErrorKind::UnsupportedOrder, "orders above 256 are not supported (q = " +
                                                 std::to_string(q) + ")");
  if (m == 1) return FieldPtr(new Field(p, 1, {0, 1}));
  auto it = registered_moduli().find(q);
  if (it == registered_moduli().end())
    throw Error(ErrorKind::UnsupportedOrder, "no modulus registered for GF(" + std::to_string(q) + ")");
  return FieldPtr(new Field(p, m, it->second));
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  const std::size_t qq = static_cast<std::size_t>(q_) * q_;
  add_.resize(qq);
  mul_.resize(qq);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<std::vector<unsigned>> dig(q_);
  for (unsigned a = 0; a < q_; ++a) dig[a] = digits(static_cast<Element>(a));

  std::vector<unsigned> tmp(m_);
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      for (unsigned i = 0; i < m_; ++i) tmp[i] = (dig[a][i] + dig[b][i]) % p_;
      add_[index(a, b)] = from_digits(tmp);
    }
    for (unsigned i = 0; i < m_; ++i) tmp[i] = (p_ - dig[a][i]) % p_;
    neg_[a] = from_digits(tmp);
  }

  // Schoolbook product followed by reduction with the monic modulus.
  std::vector<unsigned> prod(2 * m_ - 1);
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      std::fill(prod.begin(), prod.end(), 0u);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p_;
      for (std::size_t d = prod.size(); d-- > m_;) {
        const unsigned lead = prod[d];
        if (lead == 0) continue;
        for (unsigned i = 0; i <= m_; ++i) {
          const std::size_t pos = d - m_ + i;
          prod[pos] = (prod[pos] + (p_ - lead) * modulus_[i]) % p_;
        }
      }
      std::copy_n(prod.begin(), m_, tmp.begin());
      mul_[index(a, b)] = from_digits(tmp);
    }
  }

  // Exhaustive inverse search; a missing inverse means the modulus is reducible.
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[index(a, b)] == 1) {
        inv_[a] = static_cast<Element>(b);
        break;
      }
    }
    if (inv_[a] == 0)
      throw Error(ErrorKind::UnsupportedOrder,
                  "registered modulus for GF(" + std::to_string(q_) + ") is reducible");
  }
}

Element Field::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  Element base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<unsigned> Field::digits(Element a) const {
  std::vector<unsigned> out(m_);
  unsigned v = a;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Element Field::from_digits(std::span<const unsigned> digits) const {
  unsigned v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
  return static_cast<Element>(v);
}

}  // namespace mincode
