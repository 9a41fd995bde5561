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

// Generator matrix files: a "q n k" header line, then k rows of n integers
// in [0, q). Lines starting with '#' and blank lines are ignored.

#include <string>
#include <string_view>

#include "mincode/codes.hpp"

namespace mincode::cli {

/// Throws ParseError naming `source` and the 1-based line number.
Matrix parse_matrix(std::string_view text, std::string_view source = "<input>");

std::string format_matrix(const Matrix& g);

/// Throws IoError, ParseError, RankDeficient.
LinearCode read_code(const std::string& path);

void write_code(const std::string& path, const LinearCode& code);

}  // namespace mincode::cli
