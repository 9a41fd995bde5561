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

#include <string>
#include <string_view>
#include <vector>

#include "mincode/cli/report.hpp"

namespace mincode::cli {

const Json& fixture_document();

std::vector<std::string> table_ids();

/// Looks a table up by id or alias. Throws UnknownTable.
const Json& fixture_table(std::string_view id);

}  // namespace mincode::cli
