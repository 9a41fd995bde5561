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


#include "mincode/cli/report.hpp"

#include <sstream>

namespace mincode::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string digits(const Vector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << static_cast<unsigned>(v[i]);
  return out.str();
}

}  // namespace

Json distribution_json(const WeightDistribution& d) {
  Json out = Json::array();
  for (const auto& [w, c] : d.entries()) out.push_back(Json::array({w, c}));
  return out;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Element e : v) out.push_back(static_cast<unsigned>(e));
  return out;
}

Json report_json(const CodeReport& r, const ReportExtras& extras) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.d) j["d"] = *r.d;
  if (r.w_max) j["w_max"] = *r.w_max;
  if (r.distribution) j["distribution"] = distribution_json(*r.distribution);
  if (r.ab_ratio) j["ab_ratio"] = Json::array({r.ab_ratio->num, r.ab_ratio->den});
  if (r.ab_satisfied) j["ab_satisfied"] = *r.ab_satisfied;
  if (r.minimal)
    j["minimal"] = *r.minimal;
  else
    j["minimal"] = "skipped";
  if (r.witness) j["witness"] = Json::array({vector_json(r.witness->outer), vector_json(r.witness->inner)});
  j["projective"] = r.projective;
  j["self_orthogonal"] = r.self_orthogonal;
  if (r.doubly_even) j["doubly_even"] = *r.doubly_even;
  if (r.griesmer_length) j["griesmer_length"] = *r.griesmer_length;
  if (r.griesmer_defect) j["griesmer_defect"] = *r.griesmer_defect;
  if (extras.n_prime) j["n_prime"] = *extras.n_prime;
  if (extras.pad) j["pad"] = *extras.pad;
  if (extras.predicted) {
    j["predicted_distribution"] = distribution_json(*extras.predicted);
    if (r.distribution) j["predicted_matches"] = *extras.predicted == *r.distribution;
  }
  if (extras.complement_threshold) j["complement_threshold"] = *extras.complement_threshold;
  if (extras.construction) {
    Json p;
    p["construction"] = *extras.construction;
    p["parameters"] = extras.parameters;
    j["provenance"] = p;
  }
  return j;
}

std::string render_text(const CodeReport& r, const ReportExtras& extras) {
  std::ostringstream out;
  out << "code             [" << r.n << "," << r.k;
  if (r.d) out << "," << *r.d;
  out << "]_" << r.q << "\n";
  if (extras.construction) out << "construction     " << *extras.construction << " " << extras.parameters.dump() << "\n";
  if (r.w_max) out << "max weight       " << *r.w_max << "\n";
  if (r.distribution) out << "distribution     " << r.distribution->to_string() << "\n";
  if (!r.distribution) out << "distribution     skipped (q^k exceeds the enumeration cap)\n";
  if (r.ab_ratio) {
    const Ratio red = r.ab_ratio->reduced();
    out << "w_min/w_max      " << r.ab_ratio->num << "/" << r.ab_ratio->den << " (= " << red.num << "/" << red.den
        << ")\n";
    out << "AB condition     " << (*r.ab_satisfied ? "satisfied" : "violated") << " (threshold " << r.q - 1 << "/"
        << r.q << ")\n";
  }
  out << "minimal          " << (r.minimal ? yes_no(*r.minimal) : std::string("skipped")) << "\n";
  if (r.witness) {
    out << "witness outer    " << digits(r.witness->outer) << "\n";
    out << "witness inner    " << digits(r.witness->inner) << "\n";
  }
  out << "projective       " << yes_no(r.projective) << "\n";
  out << "self-orthogonal  " << yes_no(r.self_orthogonal) << "\n";
  if (r.doubly_even) out << "doubly even      " << yes_no(*r.doubly_even) << "\n";
  if (r.griesmer_length)
    out << "Griesmer         g = " << *r.griesmer_length << ", defect " << *r.griesmer_defect << "\n";
  if (extras.n_prime) out << "n'               " << *extras.n_prime << "\n";
  if (extras.pad) out << "pad              " << *extras.pad << "\n";
  if (extras.predicted) {
    out << "predicted        " << extras.predicted->to_string();
    if (r.distribution) out << (*extras.predicted == *r.distribution ? " (matches)" : " (DIFFERS)");
    out << "\n";
  }
  if (extras.complement_threshold)
    out << "threshold        q^(h+k-2) > w_max: " << yes_no(*extras.complement_threshold) << "\n";
  return out.str();
}

}  // namespace mincode::cli
