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


#include "mincode/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "mincode/error.hpp"

namespace mincode {

namespace {

// Wide intermediates; every result is range-checked before it leaves.
using Int = __int128;

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorKind::ConstraintViolated, what); }

Int p2(Int e) {
  if (e < 0) violated("negative exponent in 2^" + std::to_string(static_cast<long long>(e)));
  if (e > 62) violated("2^" + std::to_string(static_cast<long long>(e)) + " is out of range");
  return Int{1} << static_cast<int>(e);
}

Int ipow(Int b, Int e) {
  if (e < 0) violated("negative exponent");
  Int r = 1;
  for (Int i = 0; i < e; ++i) {
    r *= b;
    if (r > (Int{1} << 62)) violated("power out of range");
  }
  return r;
}

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

std::uint64_t out(Int v, const char* name) {
  if (v < 0 || v > (Int{1} << 62)) violated(std::string(name) + " is out of range");
  return static_cast<std::uint64_t>(v);
}

std::int64_t need(const std::optional<std::int64_t>& v, const char* name) {
  if (!v) violated(std::string("parameter ") + name + " is required");
  return *v;
}

void require(bool ok, const std::string& inequality) {
  if (!ok) violated("constraint " + inequality + " does not hold");
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

// Base parameters plus n' determine the extension: same k and d, n + n' + pad,
// w_max + n' + pad.
ExpectedParams extended(std::string family, unsigned q, Int n, Int k, Int d, Int w_max, Int n_prime, Int pad = 0) {
  require(n_prime >= 1, "n' >= 1");
  ExpectedParams e;
  e.family = std::move(family);
  e.q = q;
  e.base = CodeParams{out(n, "n"), out(k, "k"), out(d, "d"), out(w_max, "w_max")};
  e.code = CodeParams{out(n + n_prime + pad, "n"), out(k, "k"), out(d, "d"), out(w_max + n_prime + pad, "w_max")};
  e.n_prime = out(n_prime, "n'");
  e.pad = out(pad, "pad");
  return e;
}

struct Profile {
  Int k;
  Int sum_u = 0;
  Int sum_2u = 0;    // sum 2^u_i
  Int sum_2u_1 = 0;  // sum 2^(u_i - 1)
};

Profile solomon_stiffler_profile(const FamilyArgs& a, std::int64_t min_u) {
  Profile p{need(a.k, "k")};
  if (a.u.empty()) violated("parameter u is required");
  for (std::size_t i = 0; i < a.u.size(); ++i) {
    const std::int64_t ui = a.u[i];
    require(ui >= min_u, "u1 >= " + std::to_string(min_u));
    if (i) require(ui > a.u[i - 1], "u_t > ... > u_1");
    p.sum_u += ui;
    p.sum_2u += p2(ui);
    p.sum_2u_1 += p2(ui - 1);
  }
  require(a.u.back() < p.k - 1, "k - 1 > u_t");
  require(p.sum_u < p.k, "sum u_i < k");
  return p;
}

ExpectedParams solomon_stiffler_family(std::string name, const FamilyArgs& a, std::int64_t min_u) {
  const Profile p = solomon_stiffler_profile(a, min_u);
  const Int n = p2(p.k) - 1 - (p.sum_2u - static_cast<Int>(a.u.size()));
  const Int d = p2(p.k - 1) - p.sum_2u_1;
  return extended(std::move(name), 2, n, p.k, d, p2(p.k - 1), p2(p.k - 1) - p.sum_2u);
}

ExpectedParams p4_1(const FamilyArgs& a) { return solomon_stiffler_family("P4.1", a, 1); }

ExpectedParams p5_0(const FamilyArgs& a) {
  require(need(a.k, "k") >= 5, "k >= 5");
  return solomon_stiffler_family("P5.0", a, 3);
}

ExpectedParams p4_2(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  require(m >= 2, "m >= 2");
  const Int np = p2(2 * m - 1) - p2(m) - p2(m - 1);
  return extended("P4.2", 2, p2(2 * m) - 1, 3 * m, p2(2 * m - 1) - p2(m - 1), p2(2 * m - 1) + p2(m - 1), np);
}

ExpectedParams p4_3(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  const Int h = need(a.h, "h");
  require(m >= 2, "m >= 2");
  require(h >= 1, "h >= 1");
  const Int np = p2(3 * m + h - 1) - p2(2 * m) - p2(m);
  return extended("P4.3", 2, p2(3 * m + h) - p2(2 * m), 3 * m + h, p2(3 * m + h - 1) - p2(2 * m - 1) - p2(m - 1),
                  p2(3 * m + h - 1), np);
}

ExpectedParams p4_4(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  const Int l = need(a.l, "l");
  require(m >= 1 && l >= 1, "m, l >= 1");
  require(m % l == 0 && (m / l) % 2 == 1, "m / l odd");
  require(m + l >= 4, "m + l >= 4");
  const Int e = (m + l - 4) / 2;
  const Int np = p2(m - 2) - 3 * p2(e);
  return extended("P4.4", 2, p2(m - 1) - 1, m, p2(m - 2) - p2(e), p2(m - 2) + p2(e), np);
}

ExpectedParams p4_5(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  const Int h = need(a.h, "h");
  require(m >= 5 && m % 2 == 1, "m >= 5 odd");
  require(h >= 1, "h >= 1");
  const Int np = p2(m + h - 2) - p2(m - 2) - p2((m - 1) / 2);
  return extended("P4.5", 2, p2(m + h - 1) - p2(m - 2) - 1, m + h - 1, p2(m + h - 2) - p2(m - 3) - p2((m - 3) / 2),
                  p2(m + h - 2), np);
}

// One integer parameter; accepted as h or t.
ExpectedParams p4_7(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  if (a.h && a.t && *a.h != *a.t) violated("h and t name the same parameter and must agree");
  const Int h = a.h ? *a.h : need(a.t, "h");
  require(m >= 3, "m >= 3");
  require(h >= 1, "h >= 1");
  const Int np = p2(2 * m + h - 3) - p2(2 * m - 3) - p2(m - 1);
  return extended("P4.7", 2, p2(2 * m + h - 2) - p2(2 * m - 3) - p2(m - 2), 2 * m + h - 2,
                  p2(2 * m + h - 3) - p2(2 * m - 4) - p2(m - 2), p2(2 * m + h - 3), np);
}

Int checked_n1(const FamilyArgs& a, Int m) {
  require(m >= 3 && m % 2 == 1, "m >= 3 odd");
  const Int n1 = need(a.n1, "n1");
  require(n1 == p2(m - 1) || n1 == p2(m - 1) + p2((m - 1) / 2), "n1 in {2^(m-1), 2^(m-1) + 2^((m-1)/2)}");
  return n1;
}

ExpectedParams p4_8(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  const Int n1 = checked_n1(a, m);
  const Int s = p2((m - 1) / 2);
  require(n1 > 3 * s, "n1 > 3 * 2^((m-1)/2)");
  return extended("P4.8", 2, n1, m, (n1 - s) / 2, (n1 + s) / 2, (n1 - 3 * s) / 2);
}

ExpectedParams p4_9(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  const Int t = need(a.t, "t");
  const Int n1 = checked_n1(a, m);
  require(t >= 0, "t >= 0");
  const Int s = p2((m - 1) / 2);
  const Int np = p2(m + t - 1) - n1 - s;
  return extended("P4.9", 2, p2(m + t) - n1 - 1, m + t, p2(m + t - 1) - (n1 + s) / 2, p2(m + t - 1), np);
}

ExpectedParams p4_10(const FamilyArgs& a) {
  const Int q = need(a.q, "q");
  const Int m = need(a.m, "m");
  require(q > 2 && is_prime(static_cast<std::int64_t>(q)), "q odd prime");
  require(m >= 3 && m % 2 == 1, "m >= 3 odd");
  const Int d = ipow(q, m - 1) - ipow(q, m - 2) - ipow(q, (m - 3) / 2);
  const Int w = ipow(q, m - 1) - ipow(q, m - 2) + ipow(q, (m - 3) / 2);
  const Int np = ceil_div(q * d, q - 1) - w;
  return extended("P4.10", static_cast<unsigned>(q), ipow(q, m - 1), m, d, w, np);
}

ExpectedParams p4_11(const FamilyArgs& a) {
  const Int n = need(a.n, "n");
  const Int h = need(a.h, "h");
  require(n >= 3, "n >= 3");
  require(h >= 0, "h >= 0");
  const Int w0 = n % 2 ? n - 1 : n;  // maximum weight of the even-weight code
  const Int top = p2(n + h - 2);
  // With h = 0 every nonzero message is nonzero on the removed columns, so
  // the heaviest codeword misses at least the minimum weight 2 of C0.
  const Int base_max = h == 0 ? top - 2 : top;
  const Int d = top - w0;
  ExpectedParams e = extended("P4.11", 2, 2 * top - n - 1, n + h - 1, d, base_max, 2 * d - base_max);
  e.minimality_condition = n % 2 ? "h > log2(n - 1) - n + 3" : "h > log2(n) - n + 3";
  e.condition_holds = p2(n + h - 3) > w0;
  return e;
}

ExpectedParams p5_1(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  require(m >= 3, "m >= 3");
  ExpectedParams e = extended("P5.1", 2, p2(m) - 1, m, p2(m - 1), p2(m - 1), p2(m - 1));
  e.distribution = WeightDistribution::from_entries(
      {{0, 1}, {out(p2(m - 1), "w"), out(p2(m - 1) - 1, "A")}, {out(p2(m), "w"), out(p2(m - 1), "A")}});
  return e;
}

ExpectedParams p5_2(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  require(m >= 3, "m >= 3");
  return extended("P5.2", 2, p2(2 * m - 2) + p2(m - 1) - 1, 2 * m - 1, p2(2 * m - 3), p2(2 * m - 3) + p2(m - 1),
                  p2(2 * m - 3) - p2(m - 1));
}

ExpectedParams p5_4(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  require(m >= 3, "m >= 3");
  return extended("P5.4", 2, p2(2 * m - 3) + p2(m - 2) - 1, 2 * m - 2, p2(2 * m - 4), p2(2 * m - 4) + p2(m - 2),
                  p2(2 * m - 4) - p2(m - 2));
}

ExpectedParams simplex_extension(std::string name, Int q, Int m, Int pad) {
  const Int top = ipow(q, m - 1);
  const Int np = ceil_div(top, q - 1);
  ExpectedParams e = extended(std::move(name), static_cast<unsigned>(q), (ipow(q, m) - 1) / (q - 1), m, top, top,
                              np, pad);
  e.distribution = WeightDistribution::from_entries(
      {{0, 1}, {out(top, "w"), out(top - 1, "A")}, {out(top + np + pad, "w"), out((q - 1) * top, "A")}});
  return e;
}

ExpectedParams p6_1(const FamilyArgs& a) {
  const Int q = need(a.q, "q");
  const Int m = need(a.m, "m");
  require(is_prime_power(static_cast<std::int64_t>(q)), "q a prime power");
  require(m >= 2, "m >= 2");
  return simplex_extension("P6.1", q, m, 0);
}

ExpectedParams c6_1(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  if (a.q) require(*a.q == 3, "q = 3");
  require(m >= 2, "m >= 2");
  return simplex_extension("C6.1", 3, m, 1);
}

ExpectedParams p6_2(const FamilyArgs& a) {
  const Int m = need(a.m, "m");
  require(m >= 5 && m % 2 == 1, "m >= 5 odd");
  const Int s = p2((m - 1) / 2);
  const Int s3 = p2((m - 3) / 2);
  const Int half = p2(m - 1);
  const Int quarter = p2(m - 2);
  const Int np = half - 3 * s;
  ExpectedParams e = extended("P6.2", 2, p2(m) - 1, 2 * m, half - s, half + s, np);
  WeightDistribution d(out(p2(m) + np - 1, "n"));
  d.add(0, 1);
  const auto put = [&](Int w, Int count) { d.add(out(w, "w"), out(count, "A")); };
  put(half - s, (half + s - 1) * (quarter + s3));
  put(half, (half - 1) * (half + 1));
  put(half + s, (half - s - 1) * (quarter - s3));
  put(p2(m) - p2((m + 3) / 2), (half - s) * (quarter + s3));
  put(p2(m) - 3 * s, half * (half + 1));
  put(p2(m) - p2((m + 1) / 2), (half + s) * (quarter - s3));
  e.distribution = d;
  return e;
}

const std::map<std::string, std::function<ExpectedParams(const FamilyArgs&)>>& registry() {
  static const std::map<std::string, std::function<ExpectedParams(const FamilyArgs&)>> table{
      {"P4.1", p4_1},   {"P4.2", p4_2}, {"P4.3", p4_3}, {"P4.4", p4_4}, {"P4.5", p4_5},
      {"P4.7", p4_7},   {"P4.8", p4_8}, {"P4.9", p4_9}, {"P4.10", p4_10}, {"P4.11", p4_11},
      {"P5.0", p5_0},   {"P5.1", p5_1}, {"P5.2", p5_2}, {"P5.4", p5_4}, {"P6.1", p6_1},
      {"P6.2", p6_2},   {"C6.1", c6_1},
  };
  return table;
}

}  // namespace

ExpectedParams family_parameters(std::string_view family, const FamilyArgs& args) {
  std::string key(family);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::toupper(c); });
  const auto& table = registry();
  const auto it = table.find(key);
  if (it == table.end()) throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(family) + "'");
  return it->second(args);
}

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

}  // namespace mincode
