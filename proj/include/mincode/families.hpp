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

// Closed-form parameters of the extension families, as pure arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mincode/codes.hpp"

namespace mincode {

struct FamilyArgs {
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> n1;
  std::vector<std::int64_t> u;
};

struct CodeParams {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t w_max = 0;
};

struct ExpectedParams {
  std::string family;
  unsigned q = 2;
  CodeParams base;  // the code the extension starts from
  CodeParams code;  // the extended code
  std::uint64_t n_prime = 0;
  std::uint64_t pad = 0;
  std::optional<WeightDistribution> distribution;
  std::optional<std::string> minimality_condition;
  std::optional<bool> condition_holds;
};

/// Family names: P4.1-P4.5, P4.7-P4.11, P5.0-P5.2, P5.4, P6.1, P6.2, C6.1
/// (case-insensitive). Throws UnknownFamily, ConstraintViolated.
ExpectedParams family_parameters(std::string_view family, const FamilyArgs& args);

std::vector<std::string> family_names();

}  // namespace mincode
