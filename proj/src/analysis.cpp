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


#include "mincode/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>

#include "internal.hpp"
#include "mincode/error.hpp"
#include "mincode/kernels.hpp"

namespace mincode {

namespace {

void require_codeword(const LinearCode& code, std::span<const Element> c) {
  if (c.size() != code.length())
    throw Error(ErrorKind::NotACodeword, "vector length " + std::to_string(c.size()) + " != code length " +
                                             std::to_string(code.length()));
  if (hamming_weight(c) == 0) throw Error(ErrorKind::ZeroCodeword, "the zero vector has no support");
  const Matrix& g = code.generator();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(g.row_vector(r));
  rows.emplace_back(c.begin(), c.end());
  if (rank(Matrix::from_rows(g.field_ptr(), rows)) != g.rows())
    throw Error(ErrorKind::NotACodeword, "vector is not in the row space of the generator");
}

// Subset search over representative masks. Long masks get a 128-coordinate
// sampled signature; signatures are contiguous, so the all-pairs pass stays in
// cache and full masks are read only for signature hits.
class SubsetScan {
 public:
  SubsetScan(const RepresentativeMasks& reps, std::size_t length) : reps_(reps), kern_(kernels::active()) {
    if (reps.words <= kSigWords) return;
    // Evenly spaced columns of structured codes often span a small subspace
    // and collide; a fixed pseudo-random sample does not.
    std::vector<std::size_t> all(length);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::sample(all.begin(), all.end(), std::back_inserter(positions_), 64 * kSigWords, std::mt19937_64{0x5eed});
    sigs_.resize(reps.count * kSigWords);
    for (std::size_t i = 0; i < reps.count; ++i) signature(reps.mask(i), &sigs_[i * kSigWords]);
  }

  // First j in [from, to) with mask_j inside target, or `to`.
  std::size_t first(const std::uint64_t* target, std::size_t from, std::size_t to) const {
    if (from >= to) return to;
    if (sigs_.empty()) return from + kern_.first_subset(reps_.mask(from), to - from, reps_.words, target);
    std::uint64_t sig[kSigWords];
    signature(target, sig);
    while (from < to) {
      const std::size_t hit = from + kern_.first_subset(&sigs_[from * kSigWords], to - from, kSigWords, sig);
      if (hit >= to) return to;
      if (inside(reps_.mask(hit), target)) return hit;
      from = hit + 1;
    }
    return to;
  }

 private:
  static constexpr std::size_t kSigWords = 2;

  void signature(const std::uint64_t* mask, std::uint64_t* out) const {
    std::fill(out, out + kSigWords, 0);
    for (std::size_t s = 0; s < positions_.size(); ++s) {
      const std::size_t p = positions_[s];
      out[s / 64] |= ((mask[p / 64] >> (p % 64)) & 1u) << (s % 64);
    }
  }

  bool inside(const std::uint64_t* a, const std::uint64_t* b) const {
    for (std::size_t w = 0; w < reps_.words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

  const RepresentativeMasks& reps_;
  const kernels::KernelSet& kern_;
  std::vector<std::size_t> positions_;
  std::vector<std::uint64_t> sigs_;
};

}  // namespace

bool is_minimal_codeword(const LinearCode& code, std::span<const Element> c, const EnumerationOptions& opts) {
  require_codeword(code, c);
  const RepresentativeMasks reps = representative_masks(code, opts);
  const SupportMask target = weight_and_support(c).mask;
  const Field& f = code.field();
  const SubsetScan scan(reps, code.length());
  std::size_t from = 0;
  while (from < reps.count) {
    const std::size_t hit = scan.first(target.words().data(), from, reps.count);
    if (hit >= reps.count) break;
    const Vector other = combine(code.generator(), representative_message(code.q(), code.dimension(), hit));
    if (!proportional(f, c, other)) return false;
    from = hit + 1;
  }
  return true;
}

MinimalityResult is_minimal(const LinearCode& code, const EnumerationOptions& opts) {
  const RepresentativeMasks reps = representative_masks(code, opts);
  const SubsetScan scan(reps, code.length());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Partners of rep i: the first j != i with mask_j inside mask_i. Distinct
  // representatives are never proportional, so any such j is a witness.
  auto partner = [&](std::size_t i) -> std::size_t {
    const std::uint64_t* target = reps.mask(i);
    const std::size_t lo = scan.first(target, 0, i);
    if (lo < i) return lo;
    const std::size_t hi = scan.first(target, i + 1, reps.count);
    return hi < reps.count ? hi : kNone;
  };

  std::atomic<std::size_t> best_outer{kNone};
  std::vector<std::pair<std::size_t, std::size_t>> found(std::max(1u, resolve_threads(opts.threads)),
                                                         {kNone, kNone});
  run_partitioned(reps.count, static_cast<unsigned>(found.size()),
                  [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
                    for (std::size_t i = begin; i < end; ++i) {
                      if (best_outer.load(std::memory_order_relaxed) < begin) return;
                      const std::size_t j = partner(i);
                      if (j == kNone) continue;
                      found[worker] = {i, j};
                      std::size_t cur = best_outer.load();
                      while (i < cur && !best_outer.compare_exchange_weak(cur, i)) {
                      }
                      return;
                    }
                  });

  MinimalityResult out;
  const auto first = std::min_element(found.begin(), found.end());
  if (first->first == kNone) return out;
  out.minimal = false;
  const Matrix& g = code.generator();
  out.witness = Witness{combine(g, representative_message(code.q(), code.dimension(), first->first)),
                        combine(g, representative_message(code.q(), code.dimension(), first->second))};
  return out;
}

Ratio Ratio::reduced() const noexcept {
  const std::uint64_t g = std::gcd(num, den);
  return g ? Ratio{num / g, den / g} : *this;
}

bool ab_condition(unsigned q, std::size_t w_min, std::size_t w_max) noexcept {
  return std::uint64_t{q} * w_min > std::uint64_t{q - 1} * w_max;
}

ABStatus ab_status(const LinearCode& code, const EnumerationOptions& opts) {
  const std::size_t lo = min_weight(code, opts);
  const std::size_t hi = max_weight(code, opts);
  return ABStatus{Ratio{lo, hi}, ab_condition(code.q(), lo, hi)};
}

std::uint64_t griesmer(unsigned q, std::size_t k, std::size_t d) {
  if (d == 0) return 0;
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += (d + power - 1) / power;
    if (power > d) {
      total += k - i - 1;  // every later term is ceil(d / q^i) = 1
      break;
    }
    power *= q;
  }
  return total;
}

std::int64_t griesmer_defect(const LinearCode& code, const EnumerationOptions& opts) {
  return static_cast<std::int64_t>(code.length()) -
         static_cast<std::int64_t>(griesmer(code.q(), code.dimension(), min_weight(code, opts)));
}

CodeReport analyze(const LinearCode& code, const AnalyzeOptions& opts) {
  CodeReport r;
  r.q = code.q();
  r.n = code.length();
  r.k = code.dimension();
  r.projective = is_projective(code);
  r.self_orthogonal = is_self_orthogonal(code);

  if (code.enumerable(opts.enumeration.cap)) {
    const WeightDistribution dist = weight_distribution(code, opts.enumeration);
    r.d = dist.min_nonzero_weight();
    r.w_max = dist.max_weight();
    r.distribution = dist;
    r.ab_ratio = Ratio{*r.d, *r.w_max};
    r.ab_satisfied = ab_condition(r.q, *r.d, *r.w_max);
    r.griesmer_length = griesmer(r.q, r.k, *r.d);
    r.griesmer_defect = static_cast<std::int64_t>(r.n) - static_cast<std::int64_t>(*r.griesmer_length);
    if (r.q == 2) r.doubly_even = is_doubly_even(code, opts.enumeration);
  }

  const auto reps = code.projective_count();
  if (!opts.skip_minimality && reps && *reps <= opts.enumeration.cap) {
    MinimalityResult m = is_minimal(code, opts.enumeration);
    r.minimal = m.minimal;
    r.witness = std::move(m.witness);
  }
  return r;
}

}  // namespace mincode
