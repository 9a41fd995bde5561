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


#include "mincode/cli/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "../internal.hpp"
#include "mincode/analysis.hpp"
#include "mincode/cli/fixtures.hpp"
#include "mincode/cli/matrix_io.hpp"
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "mincode/families.hpp"

namespace mincode::cli {

namespace {

struct Stage {
  LinearCode code;
  std::optional<ExtensionResult> extension;
};

class Checker {
 public:
  explicit Checker(std::vector<std::string>& failures) : failures_(failures) {}

  template <typename A, typename B>
  void equal(const std::string& where, const char* field, const A& actual, const B& expected) {
    if (actual == expected) return;
    std::ostringstream out;
    out << where << ": " << field << " = " << actual << ", expected " << expected;
    failures_.push_back(out.str());
  }

  void fail(const std::string& message) { failures_.push_back(message); }

 private:
  std::vector<std::string>& failures_;
};

WeightDistribution distribution_from(const Json& entries) {
  std::vector<std::pair<std::size_t, std::uint64_t>> pairs;
  for (const Json& e : entries) pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::uint64_t>());
  return WeightDistribution::from_entries(pairs);
}

std::string set_string(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void check_stage(const Stage& stage, const Json& expect, const std::string& where, const EnumerationOptions& opts,
                 Checker& check) {
  const LinearCode& c = stage.code;
  if (expect.contains("q")) check.equal(where, "q", c.q(), expect["q"].get<unsigned>());
  if (expect.contains("n")) check.equal(where, "n", c.length(), expect["n"].get<std::size_t>());
  if (expect.contains("k")) check.equal(where, "k", c.dimension(), expect["k"].get<std::size_t>());
  if (expect.contains("self_orthogonal"))
    check.equal(where, "self_orthogonal", is_self_orthogonal(c), expect["self_orthogonal"].get<bool>());

  const WeightDistribution dist = weight_distribution(c, opts);
  const std::size_t d = *dist.min_nonzero_weight();
  const std::size_t w_max = *dist.max_weight();
  if (expect.contains("d")) check.equal(where, "d", d, expect["d"].get<std::size_t>());
  if (expect.contains("w_max")) check.equal(where, "w_max", w_max, expect["w_max"].get<std::size_t>());
  if (expect.contains("weights")) {
    const auto want = expect["weights"].get<std::vector<std::size_t>>();
    const auto got = dist.nonzero_weights();
    if (got != want) check.fail(where + ": weights = " + set_string(got) + ", expected " + set_string(want));
  }
  if (expect.contains("distribution")) {
    const WeightDistribution want = distribution_from(expect["distribution"]);
    if (!(dist == want))
      check.fail(where + ": distribution = " + dist.to_string() + ", expected " + want.to_string());
  }
  if (expect.contains("ab_satisfied"))
    check.equal(where, "ab_satisfied", ab_condition(c.q(), d, w_max), expect["ab_satisfied"].get<bool>());
  if (expect.contains("griesmer_defect"))
    check.equal(where, "griesmer_defect",
                static_cast<std::int64_t>(c.length()) - static_cast<std::int64_t>(griesmer(c.q(), c.dimension(), d)),
                expect["griesmer_defect"].get<std::int64_t>());
  if (expect.contains("doubly_even"))
    check.equal(where, "doubly_even", is_doubly_even(c, opts), expect["doubly_even"].get<bool>());
  if (expect.contains("minimal"))
    check.equal(where, "minimal", is_minimal(c, opts).minimal, expect["minimal"].get<bool>());
  if (stage.extension && !(stage.extension->predicted == dist))
    check.fail(where + ": predicted distribution " + stage.extension->predicted.to_string() +
               " differs from measured " + dist.to_string());
}

FamilyArgs family_args(const Json& f) {
  FamilyArgs a;
  const auto opt = [&](const char* key, std::optional<std::int64_t>& slot) {
    if (f.contains(key)) slot = f[key].get<std::int64_t>();
  };
  opt("q", a.q);
  opt("m", a.m);
  opt("k", a.k);
  opt("h", a.h);
  opt("t", a.t);
  opt("l", a.l);
  opt("n", a.n);
  opt("n1", a.n1);
  if (f.contains("u")) a.u = f["u"].get<std::vector<std::int64_t>>();
  return a;
}

void check_formula(const Json& formula, const std::vector<Stage>& stages, const EnumerationOptions& opts,
                   Checker& check) {
  const ExpectedParams p = family_parameters(formula["family"].get<std::string>(), family_args(formula));
  const std::string where = "formula " + p.family;
  const Stage& last = stages.back();
  if (!last.extension) {
    check.fail(where + ": recipe has no extension step");
    return;
  }
  const Stage& base = stages[stages.size() - 2];
  const auto compare = [&](const std::string& tag, const LinearCode& c, const CodeParams& want) {
    const WeightDistribution dist = weight_distribution(c, opts);
    check.equal(where + " " + tag, "n", std::uint64_t{c.length()}, want.n);
    check.equal(where + " " + tag, "k", std::uint64_t{c.dimension()}, want.k);
    check.equal(where + " " + tag, "d", std::uint64_t{*dist.min_nonzero_weight()}, want.d);
    check.equal(where + " " + tag, "w_max", std::uint64_t{*dist.max_weight()}, want.w_max);
  };
  compare("base", base.code, p.base);
  compare("extension", last.code, p.code);
  check.equal(where, "n'", std::uint64_t{last.extension->n_prime}, p.n_prime);
  check.equal(where, "pad", std::uint64_t{last.extension->pad}, p.pad);
  if (p.distribution) {
    const WeightDistribution dist = weight_distribution(last.code, opts);
    if (!(dist == *p.distribution))
      check.fail(where + ": distribution = " + dist.to_string() + ", formula gives " + p.distribution->to_string());
  }
}

}  // namespace

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::SkippedExternal: return "SKIPPED(external)";
    case RowStatus::SkippedTypo: return "SKIPPED(typo)";
    case RowStatus::SkippedExtended: return "SKIPPED(extended)";
  }
  return "?";
}

std::size_t TableOutcome::count(RowStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const RowOutcome& r) { return r.status == s; }));
}

std::size_t TableOutcome::skipped() const {
  return count(RowStatus::SkippedExternal) + count(RowStatus::SkippedTypo) + count(RowStatus::SkippedExtended);
}

LinearCode build_code(const Json& recipe) {
  const std::string family = recipe["family"].get<std::string>();
  if (family == "simplex") return simplex(recipe["q"].get<unsigned>(), recipe["m"].get<std::size_t>());
  if (family == "solomon-stiffler")
    return solomon_stiffler(recipe["k"].get<std::size_t>(), recipe["u"].get<std::vector<std::size_t>>());
  if (family == "even-weight") return even_weight_code(recipe["n"].get<std::size_t>());
  if (family == "dual-bch") return dual_bch_trace(recipe["m"].get<unsigned>());
  throw Error(ErrorKind::UnknownFamily, "unknown construction '" + family + "'");
}

RowOutcome reproduce_row(const Json& row, const ReproduceOptions& opts) {
  RowOutcome out;
  out.label = row["label"].get<std::string>();
  out.provenance = row.value("provenance", "");
  out.note = row.value("note", "");
  const std::string status = row["status"].get<std::string>();
  if (status == "typo") {
    out.status = RowStatus::SkippedTypo;
    return out;
  }
  if (status == "extended" && !opts.extended) {
    out.status = RowStatus::SkippedExtended;
    return out;
  }

  std::optional<std::string> supplied;
  if (row.contains("supply")) {
    const auto it = opts.supplied.find(row["supply"].get<std::string>());
    if (it != opts.supplied.end()) supplied = it->second;
  }
  if (!row.contains("build") && !supplied) {
    out.status = status == "extended" ? RowStatus::SkippedExtended : RowStatus::SkippedExternal;
    if (row.contains("supply"))
      out.note = "supply with --supply " + row["supply"].get<std::string>() + "=PATH" +
                 (out.note.empty() ? "" : "; " + out.note);
    return out;
  }

  Checker check(out.failures);
  try {
    std::vector<Stage> stages;
    stages.push_back(Stage{supplied ? read_code(*supplied) : build_code(row["build"]), std::nullopt});
    ExtendOptions ext;
    ext.enumeration = opts.enumeration;
    for (const Json& step : row["steps"]) {
      const LinearCode& cur = stages.back().code;
      if (step.is_object() && step.contains("complement")) {
        stages.push_back(
            Stage{simplex_complement(cur, step["complement"].get<std::size_t>(), opts.enumeration).code, std::nullopt});
      } else if (step == "extend") {
        ExtensionResult r = ab_violating_extend(cur, ext);
        LinearCode code = r.code;
        stages.push_back(Stage{std::move(code), std::move(r)});
      } else if (step == "self-orthogonal") {
        ExtensionResult r = self_orthogonal_extend(cur, ext);
        LinearCode code = r.code;
        stages.push_back(Stage{std::move(code), std::move(r)});
      } else {
        throw Error(ErrorKind::ParseError, "unknown step " + step.dump());
      }
    }
    const Json& expect = row["expect"];
    for (std::size_t i = 0; i < stages.size() && i < expect.size(); ++i)
      if (!expect[i].is_null()) check_stage(stages[i], expect[i], "stage " + std::to_string(i), opts.enumeration, check);
    if (row.contains("formula")) check_formula(row["formula"], stages, opts.enumeration, check);
  } catch (const Error& e) {
    check.fail(std::string(to_string(e.kind())) + ": " + e.what());
  }
  out.status = out.failures.empty() ? RowStatus::Pass : RowStatus::Fail;
  return out;
}

TableOutcome reproduce_table(std::string_view id, const ReproduceOptions& opts) {
  const Json& table = fixture_table(id);
  TableOutcome out;
  out.id = table["id"].get<std::string>();
  out.title = table["title"].get<std::string>();
  const Json& rows = table["rows"];
  out.rows.resize(rows.size());

  const unsigned jobs = std::min<unsigned>(resolve_threads(opts.jobs), static_cast<unsigned>(rows.size()));
  ReproduceOptions row_opts = opts;
  if (jobs > 1) row_opts.enumeration.threads = 1;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) out.rows[i] = reproduce_row(rows[i], row_opts);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return out;
}

std::string render_outcome_text(const TableOutcome& t) {
  std::ostringstream out;
  out << "table " << t.id << ": " << t.title << "\n";
  for (const RowOutcome& r : t.rows) {
    std::string tag(to_string(r.status));
    tag.resize(std::max<std::size_t>(tag.size() + 1, 19), ' ');
    out << tag << r.label;
    if (!r.note.empty() && r.status != RowStatus::Pass) out << "  (" << r.note << ")";
    out << "\n";
    for (const std::string& f : r.failures) out << "    " << f << "\n";
  }
  out << "summary: " << t.count(RowStatus::Pass) << " passed, " << t.count(RowStatus::Fail) << " failed, "
      << t.skipped() << " skipped\n";
  return out.str();
}

Json outcome_json(const TableOutcome& t) {
  Json rows = Json::array();
  for (const RowOutcome& r : t.rows) {
    Json j;
    j["label"] = r.label;
    j["provenance"] = r.provenance;
    j["status"] = std::string(to_string(r.status));
    if (!r.failures.empty()) j["failures"] = r.failures;
    if (!r.note.empty()) j["note"] = r.note;
    rows.push_back(j);
  }
  Json out;
  out["table"] = t.id;
  out["title"] = t.title;
  out["rows"] = rows;
  out["passed"] = t.count(RowStatus::Pass);
  out["failed"] = t.count(RowStatus::Fail);
  out["skipped"] = t.skipped();
  return out;
}

}  // namespace mincode::cli
