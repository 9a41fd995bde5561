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


#include "mincode/cli/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "mincode/error.hpp"

namespace mincode::cli {

namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool to_uint(std::string_view token, unsigned long long& value) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Matrix parse_matrix(std::string_view text, std::string_view source) {
  std::optional<Matrix> g;
  FieldPtr field;
  std::size_t rows_read = 0;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t k = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!g) {
      unsigned long long q = 0, nn = 0, kk = 0;
      if (tokens.size() != 3 || !to_uint(tokens[0], q) || !to_uint(tokens[1], nn) || !to_uint(tokens[2], kk))
        fail(source, line_no, "expected header \"q n k\"");
      if (nn == 0 || kk == 0) fail(source, line_no, "n and k must be positive");
      if (q > 256) fail(source, line_no, "unsupported field order " + std::to_string(q));
      try {
        field = Field::make(static_cast<unsigned>(q));
      } catch (const Error& e) {
        fail(source, line_no, e.what());
      }
      n = nn;
      k = kk;
      g.emplace(field, k, n);
    } else {
      if (rows_read == k) fail(source, line_no, "more than k = " + std::to_string(k) + " rows");
      if (tokens.size() != n)
        fail(source, line_no, "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
      for (std::size_t c = 0; c < n; ++c) {
        unsigned long long v = 0;
        if (!to_uint(tokens[c], v)) fail(source, line_no, "bad entry '" + std::string(tokens[c]) + "'");
        if (v >= field->order())
          fail(source, line_no, "entry " + std::to_string(v) + " is not below q = " + std::to_string(field->order()));
        g->at(rows_read, c) = static_cast<Element>(v);
      }
      ++rows_read;
    }
    if (end == text.size()) break;
  }

  if (!g) fail(source, line_no ? line_no : 1, "missing header \"q n k\"");
  if (rows_read != k)
    fail(source, line_no, "expected " + std::to_string(k) + " rows, found " + std::to_string(rows_read));
  return std::move(*g);
}

std::string format_matrix(const Matrix& g) {
  std::ostringstream out;
  out << g.field().order() << ' ' << g.cols() << ' ' << g.rows() << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << static_cast<unsigned>(g.at(r, c));
    out << '\n';
  }
  return out.str();
}

LinearCode read_code(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return LinearCode::from_generator(parse_matrix(buf.str(), path));
}

void write_code(const std::string& path, const LinearCode& code) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << format_matrix(code.generator());
  if (!out.flush()) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace mincode::cli
