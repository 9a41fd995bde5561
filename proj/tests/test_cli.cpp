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


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + MINCODE_CLI + std::string(" ") + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(MINCODE_TEST_DATA) + "/" + name; }

std::string tmp(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("mincode_cli_") + name)).string();
}

std::string first_line(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct writes matrix files") {
    const std::string out = tmp("simplex.txt");
    Run r = run("construct simplex --q 2 --m 3 --out " + out);
    CHECK(r.status == 0);
    CHECK(first_line(out) == "2 7 3");
    CHECK(r.out.find("[7,3,4]_2") != std::string::npos);

    r = run("construct solomon-stiffler --k 5 --u 3 --out " + out);
    CHECK(r.status == 0);
    CHECK(first_line(out) == "2 24 5");

    r = run("construct dual-bch --m 5 --out " + out);
    CHECK(r.status == 0);
    CHECK(first_line(out) == "2 31 10");
    CHECK(r.out.find("[31,10,12]_2") != std::string::npos);

    r = run("construct even-weight --n 4");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("2 4 3\n", 0) == 0);
    std::filesystem::remove(out);
  }

  TEST_CASE("construct errors") {
    CHECK(run("construct solomon-stiffler --k 5 --u 3 --u 3").status == 2);
    CHECK(run("construct simplex --q 6 --m 2").status == 1);
    CHECK(run("construct simplex --q 2").status == 2);
    CHECK(run("construct hamming --m 3").status == 1);
    CHECK(run("construct dual-bch --m 4").status == 1);
  }

  TEST_CASE("extend") {
    const std::string in = tmp("s23.txt"), out = tmp("s23x.txt");
    REQUIRE(run("construct simplex --q 2 --m 3 --out " + in).status == 0);
    Run r = run("extend --in " + in + " --out " + out + " --json");
    CHECK(r.status == 0);
    CHECK(first_line(out) == "2 11 3");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 11);
    CHECK(j["minimal"] == true);
    CHECK(j["ab_satisfied"] == false);
    CHECK(j["n_prime"] == 4);
    CHECK(j["predicted_matches"] == true);

    REQUIRE(run("construct simplex --q 3 --m 2 --out " + in).status == 0);
    r = run("extend --self-orthogonal --in " + in + " --out " + out);
    CHECK(r.status == 0);
    CHECK(first_line(out) == "3 7 2");

    r = run("extend --in " + in + " --values 2,2");
    CHECK(r.status == 0);

    r = run("extend --in " + data("even_weight_4.txt"));
    CHECK(r.status == 2);
    CHECK(r.out.find("ABConditionFails") != std::string::npos);
    CHECK(r.out.find("1/2") != std::string::npos);

    r = run("extend --in " + in + " --values 1,1,1");
    CHECK(r.status == 2);

    REQUIRE(run("construct simplex --q 2 --m 12 --out " + in).status == 0);
    CHECK(run("extend --in " + in + " --cap 100").status == 3);
    CHECK(run("extend --in " + in, "MINCODE_CAP=100").status == 3);
    std::filesystem::remove(in);
    std::filesystem::remove(out);
  }

  TEST_CASE("complement") {
    const std::string out = tmp("comp.txt");
    Run r = run("complement --in " + data("even_weight_4.txt") + " --h 2 --out " + out);
    CHECK(r.status == 0);
    CHECK(first_line(out) == "2 27 5");

    r = run("complement --in " + data("ternary_7_3_4.txt") + " --h 1 --out " + out + " --json");
    CHECK(r.status == 0);
    CHECK(first_line(out) == "3 33 4");
    CHECK(nlohmann::json::parse(r.out).contains("complement_threshold"));

    r = run("complement --in " + data("not_projective.txt") + " --h 1");
    CHECK(r.status == 2);
    CHECK(r.out.find("NotProjective") != std::string::npos);
    std::filesystem::remove(out);
  }

  TEST_CASE("analyze") {
    const std::string in = tmp("an.txt");
    REQUIRE(run("construct simplex --q 2 --m 3 --out " + in).status == 0);
    Run r = run("analyze --in " + in + " --json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["minimal"] == true);
    CHECK(j["ab_satisfied"] == true);
    CHECK(run("analyze --in " + in + " --json").out == r.out);

    REQUIRE(run("construct simplex --q 2 --m 10 --out " + in).status == 0);
    r = run("analyze --in " + in + " --cap 16");
    CHECK(r.status == 0);
    CHECK(r.out.find("skipped") != std::string::npos);
    r = run("analyze --in " + in + " --json", "MINCODE_CAP=16");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["minimal"] == "skipped");

    r = run("analyze --in " + data("bad_header.txt"));
    CHECK(r.status == 1);
    CHECK(r.out.find("bad_header.txt:1:") != std::string::npos);
    CHECK(run("analyze --in /nonexistent.txt").status == 1);
    CHECK(run("analyze --in " + in, "MINCODE_CAP=lots").status == 1);
    std::filesystem::remove(in);
  }

  TEST_CASE("predict") {
    Run r = run("predict --family P6.1 --q 2 --m 3 --json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 11);
    CHECK(j["distribution"] == nlohmann::json::parse("[[0,1],[4,3],[8,4]]"));
    r = run("predict --family P4.11 --n 4 --h 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("[35,5,12]_2") != std::string::npos);
    CHECK(run("predict --family P5.3 --m 3").status == 1);
    CHECK(run("predict --family P6.2 --m 4").status == 2);
  }

  TEST_CASE("reproduce") {
    Run r = run("reproduce --table 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("summary: 3 passed, 0 failed, 0 skipped") != std::string::npos);

    r = run("reproduce --table 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("summary: 13 passed, 0 failed, 1 skipped") != std::string::npos);
    CHECK(r.out.find("SKIPPED(typo)") != std::string::npos);

    r = run("reproduce --table appendix-A --json --supply app-2-9-4-4=" + data("binary_9_4_4.txt"));
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("rows"));

    CHECK(run("reproduce --table nope").status == 1);
    CHECK(run("reproduce --table 3 --supply broken").status == 1);
  }

  TEST_CASE("usage errors exit 1, help exits 0") {
    CHECK(run("").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("--help").status == 0);
    CHECK(run("complement --help").status == 0);
  }
}
