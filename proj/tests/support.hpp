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

#include <random>
#include <vector>

#include "mincode/codes.hpp"
#include "mincode/galois.hpp"
#include "mincode/linalg.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Gf oracle_field(const mincode::Field& f) {
  return oracle::Gf(f.characteristic(), f.degree(), f.modulus());
}

inline oracle::Rows oracle_rows(const mincode::Matrix& g) {
  oracle::Rows rows(g.rows(), oracle::Word(g.cols()));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) rows[r][c] = g.at(r, c);
  return rows;
}

inline oracle::Distribution as_map(const mincode::WeightDistribution& d) {
  oracle::Distribution m;
  for (const auto& [w, c] : d.entries()) m[w] = c;
  return m;
}

inline oracle::Distribution brute_distribution(const mincode::LinearCode& c) {
  return oracle::distribution(oracle_field(c.field()), oracle_rows(c.generator()));
}

inline oracle::Word as_word(const mincode::Vector& v) { return oracle::Word(v.begin(), v.end()); }

inline mincode::Matrix random_matrix(const mincode::FieldPtr& f, std::size_t rows, std::size_t cols,
                                     std::mt19937_64& rng) {
  mincode::Matrix m(f, rows, cols);
  std::uniform_int_distribution<unsigned> pick(0, f->order() - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<mincode::Element>(pick(rng));
  return m;
}

// Random full-rank k x n generator.
inline mincode::LinearCode random_code(unsigned q, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  const auto f = mincode::Field::make(q);
  for (;;) {
    mincode::Matrix g = random_matrix(f, k, n, rng);
    if (mincode::rank(g) == k) return mincode::LinearCode::from_generator(std::move(g));
  }
}

inline mincode::LinearCode code_from(unsigned q, const std::vector<mincode::Vector>& rows) {
  return mincode::LinearCode::from_generator(mincode::Matrix::from_rows(mincode::Field::make(q), rows));
}

}  // namespace testing
