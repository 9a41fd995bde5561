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


// Independent reference implementations. Nothing here calls into the library
// beyond reading a generator matrix and a field's modulus coefficients.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<unsigned>;
using Distribution = std::map<std::size_t, std::uint64_t>;

// GF(p^m) on base-p digit vectors, least significant first. Products use
// multiply-by-x then reduce, one step at a time.
struct Gf {
  unsigned p = 2;
  unsigned m = 1;
  unsigned q = 2;
  std::vector<unsigned> modulus;  // monic, m + 1 coefficients, low to high

  Gf(unsigned p_, unsigned m_, std::vector<unsigned> modulus_) : p(p_), m(m_), q(1), modulus(std::move(modulus_)) {
    for (unsigned i = 0; i < m; ++i) q *= p;
    if (modulus.empty()) modulus = {0, 1};
  }

  Word digits(unsigned a) const {
    Word d(m);
    for (unsigned i = 0; i < m; ++i, a /= p) d[i] = a % p;
    return d;
  }

  unsigned code(const Word& d) const {
    unsigned a = 0;
    for (unsigned i = m; i-- > 0;) a = a * p + d[i];
    return a;
  }

  unsigned add(unsigned a, unsigned b) const {
    Word x = digits(a), y = digits(b);
    for (unsigned i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return code(x);
  }

  unsigned neg(unsigned a) const {
    Word x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return code(x);
  }

  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  Word times_x(Word d) const {
    const unsigned top = d[m - 1];
    for (unsigned i = m - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    // x^m = -(modulus[0] + ... + modulus[m-1] x^{m-1})
    for (unsigned i = 0; i < m; ++i) d[i] = (d[i] + (p - modulus[i] % p) * top) % p;
    return d;
  }

  unsigned mul(unsigned a, unsigned b) const {
    if (m == 1) return (a * b) % p;
    const Word bd = digits(b);
    Word acc(m, 0);
    Word shifted = digits(a);  // a * x^i
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; j < m; ++j) acc[j] = (acc[j] + shifted[j] * bd[i]) % p;
      shifted = times_x(shifted);
    }
    return code(acc);
  }

  std::optional<unsigned> inv(unsigned a) const {
    for (unsigned b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return std::nullopt;
  }
};

// Polynomial over GF(p) has a root in GF(p)?
inline bool has_root_mod_p(const std::vector<unsigned>& coeffs, unsigned p) {
  for (unsigned x = 0; x < p; ++x) {
    unsigned v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = (v * x + coeffs[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

using Rows = std::vector<Word>;

inline Word message(unsigned q, std::size_t k, std::uint64_t index) {
  Word msg(k);
  for (std::size_t i = k; i-- > 0; index /= q) msg[i] = static_cast<unsigned>(index % q);
  return msg;
}

inline Word encode(const Gf& f, const Rows& g, const Word& msg) {
  Word c(g.empty() ? 0 : g[0].size(), 0);
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.add(c[j], f.mul(msg[r], g[r][j]));
  return c;
}

inline std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::vector<Word> codewords(const Gf& f, const Rows& g) {
  std::vector<Word> out;
  const std::uint64_t total = power(f.q, g.size());
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(encode(f, g, message(f.q, g.size(), i)));
  return out;
}

inline std::size_t weight(const Word& c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](unsigned v) { return v != 0; }));
}

inline Distribution distribution(const Gf& f, const Rows& g) {
  Distribution d;
  for (const Word& c : codewords(f, g)) ++d[weight(c)];
  return d;
}

// Rank as log_q of the number of distinct row-space vectors.
inline std::size_t rank_by_rowspace(const Gf& f, const Rows& g) {
  const auto words = codewords(f, g);
  const std::set<Word> distinct(words.begin(), words.end());
  std::size_t r = 0;
  for (std::uint64_t n = 1; n < distinct.size(); n *= f.q) ++r;
  return r;
}

inline Rows product(const Gf& f, const Rows& a, const Rows& b) {
  Rows out(a.size(), Word(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j)
      for (std::size_t t = 0; t < b.size(); ++t) out[i][j] = f.add(out[i][j], f.mul(a[i][t], b[t][j]));
  return out;
}

inline Rows gram(const Gf& f, const Rows& g) {
  Rows t(g.empty() ? 0 : g[0].size(), Word(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) t[j][i] = g[i][j];
  return product(f, g, t);
}

inline bool proportional(const Gf& f, const Word& a, const Word& b) {
  for (unsigned s = 1; s < f.q; ++s) {
    bool same = true;
    for (std::size_t j = 0; j < a.size() && same; ++j) same = f.mul(s, a[j]) == b[j];
    if (same) return true;
  }
  return false;
}

inline bool support_inside(const Word& inner, const Word& outer) {
  for (std::size_t j = 0; j < inner.size(); ++j)
    if (inner[j] != 0 && outer[j] == 0) return false;
  return true;
}

// Naive all-pairs minimality over every nonzero codeword. Returns the first
// (outer, inner) pair, in message order, with supp(inner) inside supp(outer)
// and inner not a multiple of outer.
inline std::optional<std::pair<Word, Word>> non_minimal_pair(const Gf& f, const Rows& g) {
  auto words = codewords(f, g);
  words.erase(words.begin());
  for (const Word& outer : words)
    for (const Word& inner : words)
      if (support_inside(inner, outer) && !proportional(f, outer, inner)) return std::make_pair(outer, inner);
  return std::nullopt;
}

// Same question on normalized representatives with packed supports; used where
// the codeword-level scan would be slow.
inline bool minimal_by_representatives(const Gf& f, const Rows& g) {
  std::vector<std::vector<std::uint64_t>> supports;
  const std::uint64_t total = power(f.q, g.size());
  for (std::uint64_t i = 1; i < total; ++i) {
    const Word msg = message(f.q, g.size(), i);
    const auto lead = std::find_if(msg.begin(), msg.end(), [](unsigned v) { return v != 0; });
    if (*lead != 1) continue;
    const Word c = encode(f, g, msg);
    std::vector<std::uint64_t> s((c.size() + 63) / 64, 0);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j]) s[j / 64] |= std::uint64_t{1} << (j % 64);
    supports.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < supports.size(); ++a)
    for (std::size_t b = 0; b < supports.size(); ++b) {
      if (a == b) continue;
      bool inside = true;
      for (std::size_t w = 0; w < supports[a].size() && inside; ++w) inside = (supports[b][w] & ~supports[a][w]) == 0;
      if (inside) return false;
    }
  return true;
}

inline std::uint64_t griesmer(unsigned q, std::size_t k, std::uint64_t d) {
  std::uint64_t total = 0;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += d / qi + (d % qi != 0);
    if (qi <= d) qi *= q;
  }
  return total;
}

// w_min / w_max > (q-1)/q, cross-multiplied.
inline bool ab_holds(unsigned q, std::uint64_t w_min, std::uint64_t w_max) { return q * w_min > (q - 1) * w_max; }

}  // namespace oracle
