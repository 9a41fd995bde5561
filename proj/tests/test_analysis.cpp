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


#include <random>

#include "doctest.h"
#include "mincode/analysis.hpp"
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "support.hpp"

using namespace mincode;

namespace {

void check_witness(const LinearCode& c, const Witness& w) {
  const auto o = testing::oracle_field(c.field());
  const auto words = oracle::codewords(o, testing::oracle_rows(c.generator()));
  const auto outer = testing::as_word(w.outer), inner = testing::as_word(w.inner);
  CHECK(std::find(words.begin(), words.end(), outer) != words.end());
  CHECK(std::find(words.begin(), words.end(), inner) != words.end());
  CHECK(oracle::weight(inner) > 0);
  CHECK(oracle::support_inside(inner, outer));
  CHECK_FALSE(oracle::proportional(o, outer, inner));
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("minimality agrees with the naive codeword oracle on random codes") {
    std::mt19937_64 rng(21);
    int minimal_seen = 0, non_minimal_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const unsigned q = std::vector<unsigned>{2, 2, 3, 4, 5}[trial % 5];
      const std::size_t k = 2 + rng() % (q == 2 ? 4 : 2);
      const std::size_t n = k + 2 + rng() % 9;
      const LinearCode c = testing::random_code(q, k, n, rng);
      const auto o = testing::oracle_field(c.field());
      const auto pair = oracle::non_minimal_pair(o, testing::oracle_rows(c.generator()));
      const MinimalityResult r = is_minimal(c);
      CAPTURE(q);
      CAPTURE(k);
      CHECK(r.minimal == !pair.has_value());
      if (r.witness) check_witness(c, *r.witness);
      (r.minimal ? minimal_seen : non_minimal_seen)++;
    }
    CHECK(minimal_seen > 0);
    CHECK(non_minimal_seen > 0);
  }

  TEST_CASE("even_weight_code(4) is not minimal") {
    const LinearCode e = even_weight_code(4);
    const MinimalityResult r = is_minimal(e);
    CHECK_FALSE(r.minimal);
    REQUIRE(r.witness);
    check_witness(e, *r.witness);
    CHECK_FALSE(is_minimal_codeword(e, Vector{1, 1, 1, 1}));
    CHECK(is_minimal_codeword(e, Vector{1, 1, 0, 0}));
    const auto o = testing::oracle_field(e.field());
    // (1,1,0,0) sits inside the all-ones word and is not a multiple of it.
    CHECK(oracle::support_inside({1, 1, 0, 0}, {1, 1, 1, 1}));
    CHECK_FALSE(oracle::proportional(o, {1, 1, 1, 1}, {1, 1, 0, 0}));
  }

  TEST_CASE("single-codeword checks agree with the oracle") {
    std::mt19937_64 rng(8);
    for (unsigned q : {2u, 3u, 4u}) {
      const LinearCode c = testing::random_code(q, 3, 6, rng);
      const auto o = testing::oracle_field(c.field());
      const auto words = oracle::codewords(o, testing::oracle_rows(c.generator()));
      for (std::size_t i = 1; i < words.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 1; j < words.size() && minimal; ++j)
          if (oracle::support_inside(words[j], words[i]) && !oracle::proportional(o, words[i], words[j]))
            minimal = false;
        const Vector v(words[i].begin(), words[i].end());
        CHECK(is_minimal_codeword(c, v) == minimal);
      }
    }
  }

  TEST_CASE("single-codeword input validation") {
    const LinearCode e = even_weight_code(4);
    const auto kind = [&](const Vector& v) {
      try {
        is_minimal_codeword(e, v);
      } catch (const Error& err) {
        return err.kind();
      }
      return ErrorKind::IoError;
    };
    CHECK(kind(Vector{0, 0, 0, 0}) == ErrorKind::ZeroCodeword);
    CHECK(kind(Vector{1, 0, 0, 0}) == ErrorKind::NotACodeword);
    CHECK(kind(Vector{1, 1, 0}) == ErrorKind::NotACodeword);
  }

  TEST_CASE("extensions are minimal") {
    for (const LinearCode& base : {simplex(2, 3), simplex(3, 2), simplex(4, 2), solomon_stiffler(5, {3})}) {
      const LinearCode c = ab_violating_extend(base).code;
      CHECK(is_minimal(c).minimal);
      CHECK(oracle::minimal_by_representatives(testing::oracle_field(c.field()), testing::oracle_rows(c.generator())));
    }
  }

  TEST_CASE("long masks take the sampled-signature path") {
    // Length above 128 with a planted non-minimal pair and a minimal control.
    const LinearCode s = ab_violating_extend(simplex(2, 8)).code;
    REQUIRE(s.length() > 128);
    CHECK(is_minimal(s).minimal);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < s.dimension(); ++r) rows.push_back(s.generator().row_vector(r));
    for (auto& row : rows) row.push_back(0);
    rows[0].back() = 1;  // a coordinate only row 0 touches
    Vector extra(rows[0].size(), 0);
    extra.back() = 1;
    rows.push_back(extra);  // weight-1 codeword, inside every word that uses row 0's tail
    const LinearCode planted = testing::code_from(2, rows);
    const MinimalityResult r = is_minimal(planted);
    CHECK_FALSE(r.minimal);
    REQUIRE(r.witness);
    CHECK(hamming_weight(r.witness->inner) < hamming_weight(r.witness->outer));
    for (std::size_t j = 0; j < planted.length(); ++j)
      if (r.witness->inner[j]) CHECK(r.witness->outer[j]);
  }

  TEST_CASE("minimality is independent of thread count") {
    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 10; ++trial) {
      const LinearCode c = testing::random_code(2, 9, 20, rng);
      EnumerationOptions one;
      one.threads = 1;
      const MinimalityResult a = is_minimal(c, one);
      for (unsigned t : {2u, 4u, 7u}) {
        EnumerationOptions many;
        many.threads = t;
        const MinimalityResult b = is_minimal(c, many);
        CHECK(a.minimal == b.minimal);
        if (a.witness && b.witness) {
          CHECK(a.witness->outer == b.witness->outer);
          CHECK(a.witness->inner == b.witness->inner);
        }
      }
    }
  }

  TEST_CASE("AB condition") {
    const ABStatus s = ab_status(solomon_stiffler(5, {1, 3}));
    CHECK(s.ratio == Ratio{11, 16});
    CHECK(s.satisfied == oracle::ab_holds(2, 11, 16));
    CHECK(s.satisfied);
    const ABStatus e = ab_status(even_weight_code(4));
    CHECK(e.ratio == Ratio{2, 4});
    CHECK(e.ratio.reduced() == Ratio{1, 2});
    CHECK_FALSE(e.satisfied);
    for (unsigned q : {2u, 3u, 5u})
      for (std::size_t lo = 1; lo < 12; ++lo)
        for (std::size_t hi = lo; hi < 14; ++hi) CHECK(ab_condition(q, lo, hi) == oracle::ab_holds(q, lo, hi));
  }

  TEST_CASE("Griesmer bound") {
    CHECK(griesmer(2, 4, 5) == 11);
    CHECK(griesmer(2, 5, 12) == 24);
    for (unsigned q : {2u, 3u, 4u, 7u})
      for (std::size_t k = 1; k < 8; ++k)
        for (std::size_t d = 0; d < 60; ++d) CHECK(griesmer(q, k, d) == oracle::griesmer(q, k, d));
    CHECK(griesmer_defect(solomon_stiffler(5, {3})) == 0);
    CHECK(griesmer_defect(ab_violating_extend(solomon_stiffler(5, {3})).code) == 32 - 24);
  }

  TEST_CASE("analyze report") {
    const CodeReport r = analyze(ab_violating_extend(solomon_stiffler(5, {3})).code);
    CHECK(r.n == 32);
    CHECK(r.k == 5);
    CHECK(r.d == 12u);
    CHECK(r.w_max == 24u);
    CHECK(r.minimal == true);
    CHECK(r.ab_satisfied == false);
    CHECK(r.doubly_even == true);
    CHECK(r.griesmer_defect == 8);
    CHECK(r.distribution == WeightDistribution::from_entries({{0, 1}, {12, 14}, {16, 1}, {20, 14}, {24, 2}}));

    const CodeReport s = analyze(simplex(3, 2));
    CHECK(s.minimal == true);
    CHECK(s.ab_satisfied == true);
    CHECK(s.ab_ratio == Ratio{3, 3});
    CHECK_FALSE(s.doubly_even.has_value());
    const auto o = testing::oracle_field(simplex(3, 2).field());
    bool zero = true;
    for (const auto& row : oracle::gram(o, testing::oracle_rows(simplex(3, 2).generator())))
      for (unsigned v : row) zero &= v == 0;
    CHECK(s.self_orthogonal == zero);
  }

  TEST_CASE("analyze skips work it cannot or should not do") {
    AnalyzeOptions skip;
    skip.skip_minimality = true;
    const CodeReport a = analyze(simplex(2, 4), skip);
    CHECK_FALSE(a.minimal.has_value());
    CHECK(a.d == 8u);

    AnalyzeOptions capped;
    capped.enumeration.cap = 16;
    const CodeReport b = analyze(simplex(2, 10), capped);
    CHECK_FALSE(b.minimal.has_value());
    CHECK_FALSE(b.distribution.has_value());
    CHECK_FALSE(b.d.has_value());
    CHECK(b.projective);

    try {
      is_minimal(simplex(2, 10), capped.enumeration);
      FAIL("expected EnumerationTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EnumerationTooLarge);
    }
  }
}
