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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mincode/cli/report.hpp"
#include "mincode/codes.hpp"

namespace mincode::cli {

enum class RowStatus { Pass, Fail, SkippedExternal, SkippedTypo, SkippedExtended };

std::string_view to_string(RowStatus s);

struct RowOutcome {
  std::string label;
  std::string provenance;
  RowStatus status = RowStatus::Pass;
  std::vector<std::string> failures;
  std::string note;
};

struct ReproduceOptions {
  EnumerationOptions enumeration;
  /// Supply id -> matrix file path, for rows whose source code is not built in.
  std::map<std::string, std::string> supplied;
  bool extended = false;
  unsigned jobs = 0;
};

struct TableOutcome {
  std::string id;
  std::string title;
  std::vector<RowOutcome> rows;

  std::size_t count(RowStatus s) const;
  std::size_t skipped() const;
  bool ok() const { return count(RowStatus::Fail) == 0; }
};

/// Builds the starting code of a recipe: {"family": simplex|solomon-stiffler|even-weight|dual-bch, ...}.
LinearCode build_code(const Json& recipe);

RowOutcome reproduce_row(const Json& row, const ReproduceOptions& opts);

/// Rows run concurrently; outcomes keep fixture order. Throws UnknownTable.
TableOutcome reproduce_table(std::string_view id, const ReproduceOptions& opts = {});

std::string render_outcome_text(const TableOutcome& t);

Json outcome_json(const TableOutcome& t);

}  // namespace mincode::cli
