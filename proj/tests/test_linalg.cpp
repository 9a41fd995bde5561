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
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "mincode/linalg.hpp"
#include "support.hpp"

using namespace mincode;

TEST_SUITE("linalg") {
  TEST_CASE("simplex(2,3) generator has rank 3 by row-space count") {
    const LinearCode s = simplex(2, 3);
    const auto o = testing::oracle_field(s.field());
    CHECK(oracle::rank_by_rowspace(o, testing::oracle_rows(s.generator())) == 3);
    CHECK(rank(s.generator()) == 3);
  }

  TEST_CASE("rank matches the row-space oracle on random matrices") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      const auto f = Field::make(q);
      for (int trial = 0; trial < 10; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
        Matrix m = testing::random_matrix(f, rows, cols, rng);
        if (trial % 3 == 0 && rows > 1) {  // force a dependent row
          Vector r = m.row_vector(0);
          axpy(*f, 1, m.row(1), r);
          std::copy(r.begin(), r.end(), m.row(rows - 1).begin());
        }
        CAPTURE(q);
        CHECK(rank(m) == oracle::rank_by_rowspace(testing::oracle_field(*f), testing::oracle_rows(m)));
      }
    }
  }

  TEST_CASE("product matches the naive triple loop") {
    std::mt19937_64 rng(5);
    for (unsigned q : {2u, 3u, 4u, 8u, 9u, 16u}) {
      const auto f = Field::make(q);
      const oracle::Gf o = testing::oracle_field(*f);
      for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = testing::random_matrix(f, 3, 5, rng);
        const Matrix b = testing::random_matrix(f, 5, 4, rng);
        CHECK(testing::oracle_rows(multiply(a, b)) ==
              oracle::product(o, testing::oracle_rows(a), testing::oracle_rows(b)));
      }
    }
  }

  TEST_CASE("multiply rejects mismatched shapes") {
    const auto f = Field::make(3);
    try {
      multiply(Matrix(f, 2, 3), Matrix(f, 2, 3));
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
  }

  TEST_CASE("rref is reduced and spans the same row space") {
    std::mt19937_64 rng(17);
    for (unsigned q : {2u, 5u, 9u}) {
      const auto f = Field::make(q);
      const Matrix m = testing::random_matrix(f, 4, 7, rng);
      const RrefResult r = rref(m);
      CHECK(r.rank == rank(m));
      REQUIRE(r.pivot_cols.size() == r.rank);
      for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t pc = r.pivot_cols[i];
        if (i) CHECK(pc > r.pivot_cols[i - 1]);
        for (std::size_t row = 0; row < r.reduced.rows(); ++row)
          CHECK(r.reduced.at(row, pc) == (row == i ? 1 : 0));
      }
      // Stacking the reduced rows on the original does not raise the rank.
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
      for (std::size_t i = 0; i < r.rank; ++i) rows.push_back(r.reduced.row_vector(i));
      CHECK(rank(Matrix::from_rows(f, rows)) == r.rank);
    }
  }

  TEST_CASE("transpose and gram") {
    const auto f = Field::make(3);
    const Matrix g = Matrix::from_rows(f, {{0, 1, 1, 1}, {1, 0, 1, 2}});
    const Matrix t = transpose(g);
    CHECK(t.rows() == 4);
    CHECK(t.at(3, 1) == 2);
    CHECK(testing::oracle_rows(gram(g)) == oracle::gram(testing::oracle_field(*f), testing::oracle_rows(g)));
    CHECK(gram(g).is_zero());
  }

  TEST_CASE("vector helpers") {
    const auto f = Field::make(5);
    const Vector v{0, 3, 1, 0, 4};
    CHECK(hamming_weight(v) == 3);
    const WeightAndSupport ws = weight_and_support(v);
    CHECK(ws.weight == 3);
    CHECK(ws.mask.indices() == std::vector<std::size_t>{1, 2, 4});
    const Vector n = normalize_leading(*f, v);
    CHECK(n[1] == 1);
    CHECK(proportional(*f, v, n));
    CHECK(proportional(*f, v, scale(*f, 2, v)));
    CHECK_FALSE(proportional(*f, v, Vector{0, 3, 1, 0, 3}));
    CHECK(dot(*f, v, Vector{1, 1, 1, 1, 1}) == 3);
    CHECK(combine(Matrix::from_rows(f, {{1, 0}, {0, 1}}), Vector{2, 3}) == Vector{2, 3});
    CHECK(lex_key(5, Vector{1, 0}) > lex_key(5, Vector{0, 4}));
    CHECK(lex_key(3, Vector{1, 2}) == 5);
  }

  TEST_CASE("support masks across word boundaries") {
    SupportMask a(130), b(130);
    for (std::size_t i : {0u, 63u, 64u, 129u}) a.set(i);
    for (std::size_t i : {0u, 5u, 63u, 64u, 100u, 129u}) b.set(i);
    CHECK(a.subset_of(b));
    CHECK_FALSE(b.subset_of(a));
    CHECK(a.popcount() == 4);
    CHECK(words_for_bits(130) == 3);
  }

  TEST_CASE("generator validation") {
    const auto f = Field::make(2);
    try {
      LinearCode::from_generator(Matrix::from_rows(f, {{1, 1, 0}, {1, 1, 0}}));
      FAIL("expected RankDeficient");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankDeficient);
    }
    try {
      LinearCode::from_generator(Matrix(f, 0, 3));
      FAIL("expected DimensionTooSmall");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionTooSmall);
    }
  }
}
