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
#include <optional>
#include <vector>

#include "mincode/codes.hpp"

namespace mincode {

/// Columns are the projective points of F_q^m with leading coefficient 1,
/// ascending by integer encoding (entry 0 most significant).
LinearCode simplex(unsigned q, std::size_t m);

/// Binary [n, n-1, 2] code with generator [I | 1]. Throws LengthTooSmall for n < 3.
LinearCode even_weight_code(std::size_t n);

/// Simplex(2, k) with the nonzero vectors of t coordinate-block subspaces
/// removed; block i has dimension u[i] and sits just before blocks 0..i-1,
/// block 0 ending at coordinate k - 1.
/// Requires 1 <= u[0] < u[1] < ... < k and sum(u) <= k (InvalidProfile).
LinearCode solomon_stiffler(std::size_t k, const std::vector<std::size_t>& u);

struct ComplementResult {
  LinearCode code;
  /// q^(h+k-2) > w_max(C); unset when C is too large to enumerate.
  std::optional<bool> minimality_threshold;
  std::optional<std::size_t> base_max_weight;
};

ComplementResult simplex_complement(const LinearCode& code, std::size_t h, const EnumerationOptions& opts = {});

/// How rows 2..k of the extended generator are chosen once r1 is fixed.
enum class BasisRule {
  /// r2 and the completion lie in the coordinate hyperplane {c : c_j = 0},
  /// j being the first position of supp(r1) where some minimum-weight
  /// codeword other than a multiple of r1 vanishes.
  CoordinateHyperplane,
  /// r2 is the first minimum-weight codeword not proportional to r1; the
  /// basis is completed greedily from the original generator rows.
  GeneratorCompletion,
};

struct ExtendOptions {
  std::optional<std::vector<Element>> values;
  BasisRule rule = BasisRule::CoordinateHyperplane;
  EnumerationOptions enumeration;
};

struct ExtensionResult {
  LinearCode code;
  std::size_t n_prime = 0;
  std::size_t pad = 0;
  std::size_t base_min_weight = 0;
  std::size_t base_max_weight = 0;
  /// Distribution of span(r2..rk), the subcode left after dropping row 1.
  WeightDistribution subcode;
  WeightDistribution predicted;
  /// Brute-force minimality of the output; set only by self_orthogonal_extend
  /// and only when the output is small enough to check.
  std::optional<bool> minimal;
};

/// ceil(q * w_min / (q - 1)) - w_max as a signed quantity.
std::int64_t extension_length(unsigned q, std::size_t w_min, std::size_t w_max);

ExtensionResult ab_violating_extend(const LinearCode& code, const ExtendOptions& opts = {});

ExtensionResult self_orthogonal_extend(const LinearCode& code, const ExtendOptions& opts = {});

/// Distribution of the extension: out[w] = sub[w] + (full[w - n'] - sub[w - n']).
/// Throws InconsistentInputs if sub exceeds full anywhere.
WeightDistribution predict_extension_distribution(const WeightDistribution& full, const WeightDistribution& sub,
                                                  std::size_t n_prime);

/// Binary trace code with rows Tr(e_j a^i) and Tr(e_j a^(3i)) over GF(2^m),
/// m in {3, 5, 7, 9}. Throws UnsupportedDegree otherwise.
LinearCode dual_bch_trace(unsigned m);

}  // namespace mincode
