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


#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "mincode/analysis.hpp"
#include "mincode/cli/fixtures.hpp"
#include "mincode/cli/matrix_io.hpp"
#include "mincode/cli/report.hpp"
#include "mincode/cli/reproduce.hpp"
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "support.hpp"

using namespace mincode;

namespace {

std::string parse_error(std::string_view text) {
  try {
    cli::parse_matrix(text, "m.txt");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("no parse error");
  return {};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mincode_test_" + name);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("matrix text format") {
    const Matrix m = cli::parse_matrix("# comment\n3 4 2\n0 1 1 1   \n# between rows\n1 0 1 2\n\n");
    CHECK(m.field().order() == 3);
    CHECK(testing::oracle_rows(m) == oracle::Rows{{0, 1, 1, 1}, {1, 0, 1, 2}});
    CHECK(cli::format_matrix(m) == "3 4 2\n0 1 1 1\n1 0 1 2\n");
    CHECK(cli::parse_matrix(cli::format_matrix(m)) == m);
  }

  TEST_CASE("parse errors name the line") {
    CHECK(parse_error("2 x 3\n1 0 0\n").find("m.txt:1:") != std::string::npos);
    CHECK(parse_error("2 3\n").find("m.txt:1:") != std::string::npos);
    CHECK(parse_error("6 2 1\n1 0\n").find("m.txt:1:") != std::string::npos);
    CHECK(parse_error("2 3 1\n1 0\n").find("m.txt:2:") != std::string::npos);
    CHECK(parse_error("# c\n2 3 1\n1 0 2\n").find("m.txt:3:") != std::string::npos);
    CHECK(parse_error("2 3 2\n1 0 1\n").find("m.txt:") != std::string::npos);
    CHECK(parse_error("2 3 1\n1 0 1\n0 1 1\n").find("m.txt:3:") != std::string::npos);
    CHECK(parse_error("").find("m.txt:") != std::string::npos);
  }

  TEST_CASE("write then read reproduces the generator exactly") {
    std::mt19937_64 rng(12);
    for (unsigned q : {2u, 3u, 4u, 9u, 16u, 256u}) {
      const LinearCode c = testing::random_code(q, 3, 9, rng);
      const auto path = temp_file("roundtrip.txt");
      cli::write_code(path.string(), c);
      const LinearCode back = cli::read_code(path.string());
      std::filesystem::remove(path);
      CHECK(back.generator() == c.generator());
      CHECK(back.q() == q);
    }
  }

  TEST_CASE("missing files raise IoError") {
    try {
      cli::read_code("/nonexistent/matrix.txt");
      FAIL("expected IoError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IoError);
    }
  }

  TEST_CASE("reports are deterministic and keep key order") {
    const ExtensionResult r = ab_violating_extend(simplex(2, 3));
    cli::ReportExtras extras;
    extras.construction = "extension";
    extras.n_prime = r.n_prime;
    extras.pad = r.pad;
    extras.predicted = r.predicted;
    const std::string a = cli::report_json(analyze(r.code), extras).dump();
    const std::string b = cli::report_json(analyze(LinearCode::from_generator(r.code.generator())), extras).dump();
    CHECK(a == b);
    const cli::Json j = cli::Json::parse(a);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    REQUIRE(keys.size() >= 6);
    CHECK(keys[0] == "q");
    CHECK(keys[1] == "n");
    CHECK(keys[2] == "k");
    CHECK(keys[3] == "d");
    CHECK(j["distribution"] == cli::Json::parse("[[0,1],[4,3],[8,4]]"));
    CHECK(j["ab_ratio"] == cli::Json::parse("[4,8]"));
    CHECK(j["minimal"] == true);
    CHECK(j["n_prime"] == 4);
    CHECK(j["predicted_distribution"] == j["distribution"]);
    CHECK(j["predicted_matches"] == true);
  }

  TEST_CASE("text report mentions skipped minimality") {
    AnalyzeOptions o;
    o.skip_minimality = true;
    const std::string text = cli::render_text(analyze(simplex(2, 4), o));
    CHECK(text.find("skipped") != std::string::npos);
    CHECK(cli::report_json(analyze(simplex(2, 4), o))["minimal"] == "skipped");
  }

  TEST_CASE("fixture tables and aliases") {
    const auto ids = cli::table_ids();
    for (const char* id : {"2", "3", "tab:5-1", "tab:6-1", "tab:6-2", "appendix-A"})
      CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK(&cli::fixture_table("table-3") == &cli::fixture_table("3"));
    CHECK(&cli::fixture_table("appendix") == &cli::fixture_table("appendix-A"));
    try {
      cli::fixture_table("tab:9-9");
      FAIL("expected UnknownTable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownTable);
    }
    for (const auto& table : cli::fixture_document()["tables"])
      for (const auto& row : table["rows"]) {
        CHECK(row.contains("label"));
        CHECK(row.contains("provenance"));
        CHECK(row.contains("status"));
        if (row["status"] != "typo") CHECK(row.contains("expect"));
      }
  }

  TEST_CASE("table 3 reproduces") {
    const cli::TableOutcome t = cli::reproduce_table("3");
    REQUIRE(t.rows.size() == 3);
    CHECK(t.count(cli::RowStatus::Pass) == 3);
    CHECK(t.rows[0].label.find("[35,5,12]") != std::string::npos);
    CHECK(t.rows[1].label.find("[34,5,12]") != std::string::npos);
    CHECK(t.rows[2].label.find("[31,5,10]") != std::string::npos);
    const std::string text = cli::render_outcome_text(t);
    CHECK(text.find("summary: 3 passed, 0 failed, 0 skipped") != std::string::npos);
  }

  TEST_CASE("table order is stable under concurrency") {
    cli::ReproduceOptions serial, parallel;
    serial.jobs = 1;
    parallel.jobs = 4;
    const std::string a = cli::outcome_json(cli::reproduce_table("tab:6-1", serial)).dump();
    const std::string b = cli::outcome_json(cli::reproduce_table("tab:6-1", parallel)).dump();
    CHECK(a == b);
  }

  TEST_CASE("a wrong expectation fails its row") {
    cli::Json row = cli::fixture_table("3")["rows"][0];
    row["expect"].back()["d"] = 13;
    const cli::RowOutcome r = cli::reproduce_row(row, {});
    CHECK(r.status == cli::RowStatus::Fail);
    CHECK_FALSE(r.failures.empty());
  }

  TEST_CASE("supplied matrices run external rows") {
    cli::ReproduceOptions o;
    o.supplied["app-2-9-4-4"] = MINCODE_TEST_DATA "/binary_9_4_4.txt";
    const cli::TableOutcome t = cli::reproduce_table("appendix-A", o);
    bool found = false;
    for (const auto& r : t.rows)
      if (r.label.find("[9,4,4]_2") == 0) {
        found = true;
        CHECK(r.status == cli::RowStatus::Pass);
        for (const auto& f : r.failures) MESSAGE(f);
      }
    CHECK(found);
    CHECK(t.ok());
  }
}
