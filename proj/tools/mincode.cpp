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


// mincode: construct, transform, analyze, predict and reproduce.
//
// Exit codes: 0 success, 2 precondition failure, 3 enumeration cap, 1 other.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mincode/analysis.hpp"
#include "mincode/cli/matrix_io.hpp"
#include "mincode/cli/report.hpp"
#include "mincode/cli/reproduce.hpp"
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "mincode/families.hpp"

namespace {

using namespace mincode;
using cli::Json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ABConditionFails:
    case ErrorKind::NotProjective:
    case ErrorKind::NotSelfOrthogonal:
    case ErrorKind::DimensionTooSmall:
    case ErrorKind::LengthTooSmall:
    case ErrorKind::InvalidProfile:
    case ErrorKind::ConstraintViolated:
    case ErrorKind::BadValuesLength:
    case ErrorKind::PaddingExhausted:
    case ErrorKind::WrongCharacteristic:
    case ErrorKind::RankDeficient:
      return 2;
    case ErrorKind::EnumerationTooLarge:
      return 3;
    default:
      return 1;
  }
}

struct Common {
  std::optional<std::uint64_t> cap;
  unsigned threads = 0;

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.threads = threads;
    if (cap) {
      o.cap = *cap;
    } else if (const char* env = std::getenv("MINCODE_CAP")) {
      try {
        o.cap = std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, std::string("MINCODE_CAP is not an integer: '") + env + "'");
      }
    }
    return o;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--cap", c.cap, "Enumeration cap (codewords or representatives); default 2^22 or $MINCODE_CAP");
  app->add_option("--threads", c.threads, "Worker threads (0 = hardware concurrency)");
}

void emit(const CodeReport& report, const cli::ReportExtras& extras, bool json) {
  if (json)
    std::cout << cli::report_json(report, extras).dump(2) << "\n";
  else
    std::cout << cli::render_text(report, extras);
}

std::string params_string(const LinearCode& c, const EnumerationOptions& opts) {
  std::string s = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension());
  if (c.enumerable(opts.cap)) {
    const WeightDistribution d = weight_distribution(c, opts);
    s += "," + std::to_string(*d.min_nonzero_weight()) + "]_" + std::to_string(c.q()) +
         ", max weight " + std::to_string(*d.max_weight());
  } else {
    s += "]_" + std::to_string(c.q());
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal linear codes: constructions, extensions and verification"};
  app.require_subcommand(1);
  int status = 0;

  // construct
  Common c_common;
  std::string c_family;
  std::optional<unsigned> c_q;
  std::optional<std::size_t> c_m, c_k, c_n;
  std::vector<std::size_t> c_u;
  std::string c_out;
  auto* construct = app.add_subcommand("construct", "Build a generator matrix");
  construct->add_option("family", c_family, "simplex | solomon-stiffler | even-weight | dual-bch")
      ->required()
      ->check(CLI::IsMember({"simplex", "solomon-stiffler", "even-weight", "dual-bch"}));
  construct->add_option("--q", c_q, "Field order");
  construct->add_option("--m", c_m, "Dimension (simplex) or extension degree (dual-bch)");
  construct->add_option("--k", c_k, "Dimension (solomon-stiffler)");
  construct->add_option("--u", c_u, "Subspace dimensions, repeatable (solomon-stiffler)");
  construct->add_option("--n", c_n, "Length (even-weight)");
  construct->add_option("--out", c_out, "Output matrix file (default: stdout)");
  add_common(construct, c_common);

  // extend
  Common e_common;
  std::string e_in, e_out, e_basis = "hyperplane";
  bool e_self = false, e_json = false, e_skip = false;
  std::vector<unsigned> e_values;
  auto* extend = app.add_subcommand("extend", "Extend a code into one violating the AB condition");
  extend->add_option("--in", e_in, "Input matrix file")->required();
  extend->add_flag("--self-orthogonal", e_self, "Pad to keep the result self-orthogonal");
  extend->add_option("--values", e_values, "Nonzero values of the n' new coordinates")->delimiter(',');
  extend->add_option("--basis", e_basis, "Row selection rule: hyperplane | generator")
      ->check(CLI::IsMember({"hyperplane", "generator"}));
  extend->add_option("--out", e_out, "Output matrix file");
  extend->add_flag("--json", e_json, "Machine-readable report");
  extend->add_flag("--skip-minimality", e_skip, "Do not run the minimality scan");
  add_common(extend, e_common);

  // complement
  Common m_common;
  std::string m_in, m_out;
  std::size_t m_h = 0;
  bool m_json = false, m_skip = false;
  auto* complement = app.add_subcommand("complement", "Delete a projective code's columns from a simplex");
  complement->set_help_flag("--help", "Print this help message and exit");
  complement->add_option("--in", m_in, "Input matrix file")->required();
  complement->add_option("--h", m_h, "Extra dimensions")->required();
  complement->add_option("--out", m_out, "Output matrix file");
  complement->add_flag("--json", m_json, "Machine-readable report");
  complement->add_flag("--skip-minimality", m_skip, "Do not run the minimality scan");
  add_common(complement, m_common);

  // analyze
  Common a_common;
  std::string a_in;
  bool a_json = false, a_skip = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report parameters, weights and minimality");
  analyze_cmd->add_option("--in", a_in, "Input matrix file")->required();
  analyze_cmd->add_flag("--json", a_json, "Machine-readable report");
  analyze_cmd->add_flag("--skip-minimality", a_skip, "Do not run the minimality scan");
  add_common(analyze_cmd, a_common);

  // predict
  std::string p_family;
  FamilyArgs p_args;
  bool p_json = false;
  auto* predict = app.add_subcommand("predict", "Evaluate a family's closed-form parameters");
  predict->set_help_flag("--help", "Print this help message and exit");
  predict->add_option("--family", p_family, "Family name, e.g. P4.1, P6.1, C6.1")->required();
  predict->add_option("--q", p_args.q);
  predict->add_option("--m", p_args.m);
  predict->add_option("--k", p_args.k);
  predict->add_option("--h", p_args.h);
  predict->add_option("--t", p_args.t);
  predict->add_option("--l", p_args.l);
  predict->add_option("--n", p_args.n);
  predict->add_option("--n1", p_args.n1);
  predict->add_option("--u", p_args.u, "Repeatable");
  predict->add_flag("--json", p_json, "Machine-readable output");

  // reproduce
  Common r_common;
  std::string r_table;
  std::vector<std::string> r_supply;
  bool r_json = false, r_extended = false;
  unsigned r_jobs = 0;
  auto* reproduce = app.add_subcommand("reproduce", "Check a table's rows end to end");
  reproduce->add_option("--table", r_table, "2 | 3 | tab:5-1 | tab:6-1 | tab:6-2 | appendix-A")->required();
  reproduce->add_option("--supply", r_supply, "ID=PATH matrix for a row whose source code is not built in");
  reproduce->add_flag("--json", r_json, "Machine-readable summary");
  reproduce->add_flag("--extended", r_extended, "Also run rows outside the default budget");
  reproduce->add_option("--jobs", r_jobs, "Rows checked concurrently (0 = hardware concurrency)");
  add_common(reproduce, r_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*construct) {
      const auto need = [&](const auto& v, const char* name) {
        if (!v) throw Error(ErrorKind::ConstraintViolated, std::string("--") + name + " is required for " + c_family);
        return *v;
      };
      std::optional<LinearCode> code;
      if (c_family == "simplex")
        code = simplex(need(c_q, "q"), need(c_m, "m"));
      else if (c_family == "solomon-stiffler")
        code = solomon_stiffler(need(c_k, "k"), c_u);
      else if (c_family == "even-weight")
        code = even_weight_code(need(c_n, "n"));
      else
        code = dual_bch_trace(static_cast<unsigned>(need(c_m, "m")));
      if (c_out.empty()) {
        std::cout << cli::format_matrix(code->generator());
      } else {
        cli::write_code(c_out, *code);
        std::cout << c_family << ": " << params_string(*code, c_common.enumeration()) << "\n";
      }
    } else if (*extend) {
      const EnumerationOptions opts = e_common.enumeration();
      const LinearCode base = cli::read_code(e_in);
      ExtendOptions eo;
      eo.enumeration = opts;
      eo.rule = e_basis == "generator" ? BasisRule::GeneratorCompletion : BasisRule::CoordinateHyperplane;
      if (!e_values.empty()) {
        std::vector<Element> v;
        for (unsigned x : e_values) {
          if (x > 255) throw Error(ErrorKind::BadValuesLength, "value " + std::to_string(x) + " is not a field element");
          v.push_back(static_cast<Element>(x));
        }
        eo.values = v;
      }
      const ExtensionResult r = e_self ? self_orthogonal_extend(base, eo) : ab_violating_extend(base, eo);
      if (!e_out.empty()) cli::write_code(e_out, r.code);
      cli::ReportExtras extras;
      extras.construction = e_self ? "self-orthogonal-extension" : "extension";
      extras.parameters = Json{{"input", e_in}, {"base_min_weight", r.base_min_weight},
                               {"base_max_weight", r.base_max_weight}};
      extras.n_prime = r.n_prime;
      extras.pad = r.pad;
      extras.predicted = r.predicted;
      AnalyzeOptions ao;
      ao.enumeration = opts;
      ao.skip_minimality = e_skip;
      emit(analyze(r.code, ao), extras, e_json);
    } else if (*complement) {
      const EnumerationOptions opts = m_common.enumeration();
      const LinearCode base = cli::read_code(m_in);
      const ComplementResult r = simplex_complement(base, m_h, opts);
      if (!m_out.empty()) cli::write_code(m_out, r.code);
      cli::ReportExtras extras;
      extras.construction = "simplex-complement";
      extras.parameters = Json{{"input", m_in}, {"h", m_h}};
      extras.complement_threshold = r.minimality_threshold;
      AnalyzeOptions ao;
      ao.enumeration = opts;
      ao.skip_minimality = m_skip;
      emit(analyze(r.code, ao), extras, m_json);
    } else if (*analyze_cmd) {
      AnalyzeOptions ao;
      ao.enumeration = a_common.enumeration();
      ao.skip_minimality = a_skip;
      emit(analyze(cli::read_code(a_in), ao), {}, a_json);
    } else if (*predict) {
      const ExpectedParams p = family_parameters(p_family, p_args);
      Json j;
      j["family"] = p.family;
      j["q"] = p.q;
      j["base"] = Json{{"n", p.base.n}, {"k", p.base.k}, {"d", p.base.d}, {"w_max", p.base.w_max}};
      j["n"] = p.code.n;
      j["k"] = p.code.k;
      j["d"] = p.code.d;
      j["w_max"] = p.code.w_max;
      j["n_prime"] = p.n_prime;
      j["pad"] = p.pad;
      if (p.distribution) j["distribution"] = cli::distribution_json(*p.distribution);
      if (p.minimality_condition) {
        j["minimality_condition"] = *p.minimality_condition;
        j["condition_holds"] = *p.condition_holds;
      }
      if (p_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << p.family << ": [" << p.base.n << "," << p.base.k << "," << p.base.d << "]_" << p.q
                  << " (max weight " << p.base.w_max << ") -> [" << p.code.n << "," << p.code.k << "," << p.code.d
                  << "]_" << p.q << " (max weight " << p.code.w_max << "), n' = " << p.n_prime;
        if (p.pad) std::cout << ", pad = " << p.pad;
        std::cout << "\n";
        if (p.distribution) std::cout << "distribution " << p.distribution->to_string() << "\n";
        if (p.minimality_condition)
          std::cout << "condition " << *p.minimality_condition << ": " << (*p.condition_holds ? "holds" : "fails")
                    << "\n";
      }
    } else if (*reproduce) {
      cli::ReproduceOptions ro;
      ro.enumeration = r_common.enumeration();
      ro.extended = r_extended;
      ro.jobs = r_jobs;
      for (const std::string& s : r_supply) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
          throw Error(ErrorKind::ParseError, "--supply expects ID=PATH, got '" + s + "'");
        ro.supplied[s.substr(0, eq)] = s.substr(eq + 1);
      }
      const cli::TableOutcome t = cli::reproduce_table(r_table, ro);
      if (r_json)
        std::cout << cli::outcome_json(t).dump(2) << "\n";
      else
        std::cout << cli::render_outcome_text(t);
      status = t.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
