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

#include <optional>
#include <string>

#include "json.hpp"
#include "mincode/analysis.hpp"

namespace mincode::cli {

using Json = nlohmann::ordered_json;

struct ReportExtras {
  std::optional<std::string> construction;
  Json parameters = Json::object();
  std::optional<std::size_t> n_prime;
  std::optional<std::size_t> pad;
  std::optional<WeightDistribution> predicted;
  std::optional<bool> complement_threshold;
};

Json distribution_json(const WeightDistribution& d);

Json vector_json(const Vector& v);

Json report_json(const CodeReport& r, const ReportExtras& extras = {});

std::string render_text(const CodeReport& r, const ReportExtras& extras = {});

}  // namespace mincode::cli
