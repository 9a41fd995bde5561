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


#include "mincode/constructions.hpp"

#include <algorithm>
#include <unordered_set>

#include "internal.hpp"
#include "mincode/analysis.hpp"
#include "mincode/error.hpp"

namespace mincode {

namespace {

constexpr std::uint64_t kMaxSimplexColumns = std::uint64_t{1} << 24;

std::uint64_t point_count(unsigned q, std::size_t m) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total += power;
    if (total > kMaxSimplexColumns || power > kMaxSimplexColumns) return kMaxSimplexColumns + 1;
    power *= q;
  }
  return total;
}

// Projective points of F_q^m, leading entry 1, ascending lex_key. Within the
// block led by position p the tail digits run through all q^(m-1-p) values.
template <typename Visit>
void for_each_point(unsigned q, std::size_t m, Visit&& visit) {
  for (std::size_t lead = m; lead-- > 0;) {
    Vector v(m, 0);
    v[lead] = 1;
    while (true) {
      visit(v);
      std::size_t r = m;
      while (r-- > lead + 1) {
        if (v[r] + 1u < q) {
          ++v[r];
          break;
        }
        v[r] = 0;
      }
      if (r == lead) break;
    }
  }
}

Matrix columns_to_matrix(const FieldPtr& f, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix g(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) g.at(r, c) = columns[c][r];
  return g;
}

std::vector<Vector> simplex_columns(unsigned q, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::DimensionTooSmall, "simplex dimension must be at least 1");
  const std::uint64_t count = point_count(q, m);
  if (count > kMaxSimplexColumns)
    throw Error(ErrorKind::EnumerationTooLarge,
                "simplex(" + std::to_string(q) + ", " + std::to_string(m) + ") has too many columns");
  std::vector<Vector> cols;
  cols.reserve(count);
  for_each_point(q, m, [&](const Vector& v) { cols.push_back(v); });
  return cols;
}

struct Selection {
  Vector r1;
  std::vector<Vector> rest;  // rows 2..k
};

std::size_t rank_of(const FieldPtr& f, const std::vector<Vector>& rows) {
  return rank(Matrix::from_rows(f, rows));
}

// Greedily appends candidates that raise the rank until `basis` has `target` rows.
void complete_basis(const FieldPtr& f, std::vector<Vector>& basis, const std::vector<Vector>& candidates,
                    std::size_t target) {
  for (const Vector& c : candidates) {
    if (basis.size() == target) break;
    basis.push_back(c);
    if (rank_of(f, basis) != basis.size()) basis.pop_back();
  }
  if (basis.size() != target)
    throw Error(ErrorKind::RankDeficient, "basis completion reached only " + std::to_string(basis.size()) +
                                              " of " + std::to_string(target) + " rows");
}

Selection select_basis(const LinearCode& code, std::size_t w_min, std::size_t w_max, BasisRule rule) {
  const Field& f = code.field();
  const FieldPtr& fp = code.field_ptr();
  const Matrix& g = code.generator();
  const std::size_t k = code.dimension();

  Selection sel;
  Vector r1_message;
  walk_messages(code, [&](const Vector& message, const Vector& cw) {
    if (hamming_weight(cw) != w_max) return true;
    sel.r1 = cw;
    r1_message = message;
    return false;
  });

  std::vector<Vector> generator_rows;
  for (std::size_t r = 0; r < k; ++r) generator_rows.push_back(g.row_vector(r));

  if (rule == BasisRule::CoordinateHyperplane) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < sel.r1.size(); ++j)
      if (sel.r1[j]) support.push_back(j);
    std::vector<std::optional<Vector>> first(support.size());
    walk_representatives(code, [&](const Vector& message, const Vector& cw) {
      if (message == r1_message || hamming_weight(cw) != w_min) return true;
      for (std::size_t s = 0; s < support.size(); ++s)
        if (!first[s] && cw[support[s]] == 0) first[s] = cw;
      return !first[0];
    });
    const auto hit = std::find_if(first.begin(), first.end(), [](const auto& v) { return v.has_value(); });
    if (hit != first.end()) {
      const std::size_t j = support[static_cast<std::size_t>(hit - first.begin())];
      const Element scale_to = f.inv(sel.r1[j]);
      std::vector<Vector> projected;
      for (const Vector& row : generator_rows) {
        Vector p = row;
        axpy(f, f.neg(f.mul(row[j], scale_to)), sel.r1, p);
        projected.push_back(std::move(p));
      }
      std::vector<Vector> basis{**hit};
      complete_basis(fp, basis, projected, k - 1);
      sel.rest = std::move(basis);
      return sel;
    }
  }

  std::optional<Vector> r2;
  walk_representatives(code, [&](const Vector& message, const Vector& cw) {
    if (message == r1_message || hamming_weight(cw) != w_min) return true;
    r2 = cw;
    return false;
  });
  if (!r2) throw Error(ErrorKind::DimensionTooSmall, "no minimum-weight codeword independent of r1");
  std::vector<Vector> basis{sel.r1, *r2};
  complete_basis(fp, basis, generator_rows, k);
  sel.rest.assign(basis.begin() + 1, basis.end());
  return sel;
}

Matrix assemble(const FieldPtr& f, const Selection& sel, const std::vector<Element>& values, std::size_t pad) {
  const std::size_t prefix = values.size() + pad;
  const std::size_t n = prefix + sel.r1.size();
  Matrix g(f, sel.rest.size() + 1, n);
  for (std::size_t i = 0; i < values.size(); ++i) g.at(0, i) = values[i];
  for (std::size_t i = values.size(); i < prefix; ++i) g.at(0, i) = 1;
  for (std::size_t c = 0; c < sel.r1.size(); ++c) g.at(0, prefix + c) = sel.r1[c];
  for (std::size_t r = 0; r < sel.rest.size(); ++r)
    for (std::size_t c = 0; c < sel.r1.size(); ++c) g.at(r + 1, prefix + c) = sel.rest[r][c];
  return g;
}

struct Prepared {
  std::size_t n_prime = 0;
  std::size_t w_min = 0;
  std::size_t w_max = 0;
  WeightDistribution subcode;
  Selection selection;
  std::vector<Element> values;
  WeightDistribution base;
};

Prepared prepare_extension(const LinearCode& code, const ExtendOptions& opts) {
  if (code.dimension() < 2)
    throw Error(ErrorKind::DimensionTooSmall, "extension needs k >= 2, got k = " + std::to_string(code.dimension()));
  const WeightDistribution dist = weight_distribution(code, opts.enumeration);
  const std::size_t w_min = *dist.min_nonzero_weight();
  const std::size_t w_max = *dist.max_weight();
  const unsigned q = code.q();
  if (!ab_condition(q, w_min, w_max)) {
    const Ratio r = Ratio{w_min, w_max}.reduced();
    throw Error(ErrorKind::ABConditionFails,
                "w_min/w_max = " + std::to_string(w_min) + "/" + std::to_string(w_max) + " (= " +
                    std::to_string(r.num) + "/" + std::to_string(r.den) + ") does not exceed (q-1)/q = " +
                    std::to_string(q - 1) + "/" + std::to_string(q));
  }
  const auto n_prime = static_cast<std::size_t>(extension_length(q, w_min, w_max));

  std::vector<Element> values(n_prime, 1);
  if (opts.values) {
    if (opts.values->size() != n_prime)
      throw Error(ErrorKind::BadValuesLength, "expected " + std::to_string(n_prime) + " values, got " +
                                                  std::to_string(opts.values->size()));
    for (Element v : *opts.values)
      if (v == 0 || !code.field().contains(v))
        throw Error(ErrorKind::BadValuesLength,
                    "values must be nonzero elements of GF(" + std::to_string(q) + "), got " + std::to_string(v));
    values = *opts.values;
  }

  Prepared p;
  p.selection = select_basis(code, w_min, w_max, opts.rule);
  p.values = std::move(values);
  p.base = dist;
  p.n_prime = n_prime;
  p.w_min = w_min;
  p.w_max = w_max;
  p.subcode =
      weight_distribution(LinearCode::from_generator(Matrix::from_rows(code.field_ptr(), p.selection.rest)),
                          opts.enumeration);
  return p;
}

ExtensionResult finish(const Prepared& p, Matrix generator, std::size_t pad) {
  return ExtensionResult{LinearCode::from_generator(std::move(generator)),
                         p.n_prime,
                         pad,
                         p.w_min,
                         p.w_max,
                         p.subcode,
                         predict_extension_distribution(p.base, p.subcode, p.n_prime + pad),
                         std::nullopt};
}

}  // namespace

LinearCode simplex(unsigned q, std::size_t m) {
  const FieldPtr f = Field::make(q);
  return LinearCode::from_generator(columns_to_matrix(f, m, simplex_columns(q, m)));
}

LinearCode even_weight_code(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::LengthTooSmall, "even-weight code needs n >= 3, got " + std::to_string(n));
  Matrix g(Field::make(2), n - 1, n);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    g.at(r, r) = 1;
    g.at(r, n - 1) = 1;
  }
  return LinearCode::from_generator(std::move(g));
}

LinearCode solomon_stiffler(std::size_t k, const std::vector<std::size_t>& u) {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 1 || u[i] >= k || (i > 0 && u[i] <= u[i - 1]))
      throw Error(ErrorKind::InvalidProfile, "profile must satisfy 1 <= u1 < u2 < ... < ut < k = " +
                                                 std::to_string(k));
    sum += u[i];
  }
  if (sum > k)
    throw Error(ErrorKind::InvalidProfile,
                "sum of u is " + std::to_string(sum) + ", exceeding k = " + std::to_string(k));

  // Blocks fill coordinates from the end, so row 0 lies outside them
  // whenever sum(u) < k.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
  std::size_t end = k;
  for (std::size_t dim : u) {
    blocks.emplace_back(end - dim, end);
    end -= dim;
  }
  const auto inside_block = [&](const Vector& v) {
    for (auto [b, e] : blocks) {
      bool inside = true;
      for (std::size_t i = 0; i < v.size() && inside; ++i)
        if (v[i] && (i < b || i >= e)) inside = false;
      if (inside) return true;
    }
    return false;
  };

  std::vector<Vector> kept;
  for (Vector& v : simplex_columns(2, k))
    if (!inside_block(v)) kept.push_back(std::move(v));
  return LinearCode::from_generator(columns_to_matrix(Field::make(2), k, kept));
}

ComplementResult simplex_complement(const LinearCode& code, std::size_t h, const EnumerationOptions& opts) {
  if (!is_projective(code)) throw Error(ErrorKind::NotProjective, "input code is not projective");
  const unsigned q = code.q();
  const std::size_t k = code.dimension();
  const std::size_t big_k = k + h;
  const std::uint64_t total = point_count(q, big_k);
  if (total > kMaxSimplexColumns)
    throw Error(ErrorKind::EnumerationTooLarge, "ambient simplex has too many columns");
  if (code.length() >= total)
    throw Error(ErrorKind::LengthTooSmall, "complement would be empty: n = " + std::to_string(code.length()) +
                                               " of " + std::to_string(total) + " points");

  const Matrix& g = code.generator();
  std::unordered_set<std::uint64_t> removed;
  for (std::size_t c = 0; c < g.cols(); ++c) {
    Vector col = normalize_leading(code.field(), g.column(c));
    col.resize(big_k, 0);
    removed.insert(lex_key(q, col));
  }

  std::vector<Vector> kept;
  std::size_t hits = 0;
  for (Vector& v : simplex_columns(q, big_k)) {
    if (removed.count(lex_key(q, v)))
      ++hits;
    else
      kept.push_back(std::move(v));
  }
  if (hits != removed.size())
    throw Error(ErrorKind::ColumnNotFound, std::to_string(removed.size() - hits) +
                                              " normalized columns were not found in the simplex");

  ComplementResult out{LinearCode::from_generator(columns_to_matrix(code.field_ptr(), big_k, kept)), {}, {}};
  if (code.enumerable(opts.cap)) {
    const std::size_t w = max_weight(code, opts);
    out.base_max_weight = w;
    if (h + k < 2) {
      out.minimality_threshold = false;
    } else {
      // q^(h+k-2) > w, stopping as soon as the power passes w.
      std::uint64_t power = 1;
      for (std::size_t i = 0; i < h + k - 2 && power <= w; ++i) power *= q;
      out.minimality_threshold = power > w;
    }
  }
  return out;
}

std::int64_t extension_length(unsigned q, std::size_t w_min, std::size_t w_max) {
  const std::uint64_t num = std::uint64_t{q} * w_min;
  const std::uint64_t den = q - 1;
  return static_cast<std::int64_t>((num + den - 1) / den) - static_cast<std::int64_t>(w_max);
}

ExtensionResult ab_violating_extend(const LinearCode& code, const ExtendOptions& opts) {
  Prepared p = prepare_extension(code, opts);
  Matrix g = assemble(code.field_ptr(), p.selection, p.values, 0);
  return finish(p, std::move(g), 0);
}

ExtensionResult self_orthogonal_extend(const LinearCode& code, const ExtendOptions& opts) {
  if (!is_self_orthogonal(code)) throw Error(ErrorKind::NotSelfOrthogonal, "input code is not self-orthogonal");
  Prepared p = prepare_extension(code, opts);
  const unsigned q = code.q();
  for (std::size_t pad = 0; pad <= q; ++pad) {
    Matrix g = assemble(code.field_ptr(), p.selection, p.values, pad);
    if (!gram(g).is_zero()) continue;
    ExtensionResult out = finish(p, std::move(g), pad);
    const auto reps = out.code.projective_count();
    if (reps && *reps <= opts.enumeration.cap) out.minimal = is_minimal(out.code, opts.enumeration).minimal;
    return out;
  }
  throw Error(ErrorKind::PaddingExhausted, "no padding of at most " + std::to_string(q) +
                                               " columns makes the extension self-orthogonal");
}

WeightDistribution predict_extension_distribution(const WeightDistribution& full, const WeightDistribution& sub,
                                                  std::size_t n_prime) {
  const std::size_t len = std::max(full.length(), sub.length());
  for (std::size_t w = 0; w <= len; ++w)
    if (sub[w] > full[w])
      throw Error(ErrorKind::InconsistentInputs, "subcode count " + std::to_string(sub[w]) + " at weight " +
                                                     std::to_string(w) + " exceeds " + std::to_string(full[w]));
  WeightDistribution out(len + n_prime);
  for (std::size_t w = 0; w <= len; ++w) {
    if (sub[w]) out.add(w, sub[w]);
    if (full[w] > sub[w]) out.add(w + n_prime, full[w] - sub[w]);
  }
  return out;
}

}  // namespace mincode
