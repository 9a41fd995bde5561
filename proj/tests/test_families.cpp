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


#include "doctest.h"
#include "mincode/analysis.hpp"
#include "mincode/constructions.hpp"
#include "mincode/error.hpp"
#include "mincode/families.hpp"
#include "support.hpp"

using namespace mincode;

namespace {

void check_measured(const ExpectedParams& e, const LinearCode& c) {
  CHECK(c.length() == e.code.n);
  CHECK(c.dimension() == e.code.k);
  CHECK(min_weight(c) == e.code.d);
  CHECK(max_weight(c) == e.code.w_max);
  if (e.distribution) CHECK(weight_distribution(c) == *e.distribution);
}

void check_base(const ExpectedParams& e, const LinearCode& c) {
  CHECK(c.length() == e.base.n);
  CHECK(c.dimension() == e.base.k);
  CHECK(min_weight(c) == e.base.d);
  CHECK(max_weight(c) == e.base.w_max);
}

ErrorKind kind_of(std::string_view family, const FamilyArgs& a) {
  try {
    family_parameters(family, a);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::IoError;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("simplex extension formula, binary m = 3") {
    FamilyArgs a;
    a.q = 2;
    a.m = 3;
    const ExpectedParams e = family_parameters("P6.1", a);
    CHECK(e.code.n == 11);
    CHECK(e.code.k == 3);
    CHECK(e.code.d == 4);
    REQUIRE(e.distribution);
    CHECK(*e.distribution == WeightDistribution::from_entries({{0, 1}, {4, 3}, {8, 4}}));
    CHECK(family_parameters("p6.1", a).code.n == 11);
  }

  TEST_CASE("complement-of-even-weight family, n = 4, h = 2") {
    FamilyArgs a;
    a.n = 4;
    a.h = 2;
    const ExpectedParams e = family_parameters("P4.11", a);
    CHECK(e.code.n == 35);
    CHECK(e.code.k == 5);
    CHECK(e.code.d == 12);
    CHECK(e.code.w_max == 24);
  }

  TEST_CASE("six-weight dual BCH extension, m = 5") {
    FamilyArgs a;
    a.m = 5;
    const ExpectedParams e = family_parameters("P6.2", a);
    CHECK(e.n_prime == 4);
    CHECK(e.code.n == 35);
    CHECK(e.code.k == 10);
    CHECK(e.code.d == 12);
    REQUIRE(e.distribution);
    CHECK(*e.distribution == WeightDistribution::from_entries({{0, 1}, {12, 190}, {16, 375}, {20, 338}, {24, 120}}));
  }

  TEST_CASE("formulas agree with the constructed codes") {
    SUBCASE("Solomon-Stiffler extensions") {
      for (const auto& [k, u] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
               {5, {1}}, {5, {3}}, {5, {1, 2}}, {6, {1, 3}}, {6, {4}}, {7, {1, 2, 3}}, {7, {2, 4}}, {8, {5}}}) {
        FamilyArgs a;
        a.k = k;
        a.u = u;
        const ExpectedParams e = family_parameters("P4.1", a);
        std::vector<std::size_t> uu(u.begin(), u.end());
        const LinearCode base = solomon_stiffler(static_cast<std::size_t>(k), uu);
        check_base(e, base);
        const ExtensionResult r = ab_violating_extend(base);
        CHECK(r.n_prime == e.n_prime);
        check_measured(e, r.code);
        if (u.front() >= 3) {
          const ExpectedParams s = family_parameters("P5.0", a);
          const ExtensionResult so = self_orthogonal_extend(base);
          CHECK(so.pad == s.pad);
          check_measured(s, so.code);
        }
      }
    }
    SUBCASE("complements of even-weight codes") {
      for (std::int64_t n : {3, 4, 5, 6}) {
        for (std::int64_t h : {0, 1, 2}) {
          if (n + h - 1 > 8) continue;
          FamilyArgs a;
          a.n = n;
          a.h = h;
          CAPTURE(n);
          CAPTURE(h);
          std::optional<ComplementResult> c;
          try {
            c = simplex_complement(even_weight_code(static_cast<std::size_t>(n)), static_cast<std::size_t>(h));
          } catch (const Error&) {
            // Empty or rank-deficient complement: no family member either.
            CHECK_THROWS(family_parameters("P4.11", a));
            continue;
          }
          std::optional<ExpectedParams> maybe;
          try {
            maybe = family_parameters("P4.11", a);
          } catch (const Error& err) {
            // No extension: the complement already sits on the AB boundary.
            CHECK(err.kind() == ErrorKind::ConstraintViolated);
            CHECK_FALSE(ab_status(c->code).satisfied);
            continue;
          }
          const ExpectedParams& e = *maybe;
          check_base(e, c->code);
          check_measured(e, ab_violating_extend(c->code).code);
        }
      }
    }
    SUBCASE("binary simplex") {
      for (std::int64_t m : {3, 4, 5, 6}) {
        FamilyArgs a;
        a.m = m;
        const ExpectedParams e = family_parameters("P5.1", a);
        check_measured(e, ab_violating_extend(simplex(2, static_cast<std::size_t>(m))).code);
      }
    }
    SUBCASE("q-ary simplex") {
      for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::int64_t m : {2, 3}) {
          FamilyArgs a;
          a.q = q;
          a.m = m;
          const ExpectedParams e = family_parameters("P6.1", a);
          const LinearCode s = simplex(static_cast<unsigned>(q), static_cast<std::size_t>(m));
          check_base(e, s);
          check_measured(e, ab_violating_extend(s).code);
        }
      }
    }
    SUBCASE("ternary self-orthogonal simplex") {
      for (std::int64_t m : {2, 3, 4}) {
        FamilyArgs a;
        a.m = m;
        const ExpectedParams e = family_parameters("C6.1", a);
        const ExtensionResult r = self_orthogonal_extend(simplex(3, static_cast<std::size_t>(m)));
        CHECK(r.pad == e.pad);
        check_measured(e, r.code);
      }
    }
    SUBCASE("dual BCH") {
      for (std::int64_t m : {5, 7}) {
        FamilyArgs a;
        a.m = m;
        const ExpectedParams e = family_parameters("P6.2", a);
        const LinearCode base = dual_bch_trace(static_cast<unsigned>(m));
        check_base(e, base);
        check_measured(e, ab_violating_extend(base).code);
      }
    }
  }

  TEST_CASE("every listed family evaluates on valid parameters") {
    FamilyArgs a;
    a.q = 3;
    a.m = 5;
    a.k = 6;
    a.h = 1;
    a.t = 1;
    a.l = 1;
    a.n = 4;
    a.n1 = 16;
    a.u = {1, 3};
    for (const std::string& name : family_names()) {
      FamilyArgs b = a;
      if (name == "P6.1") b.q = 4;
      if (name == "P6.2" || name == "P4.8" || name == "P4.9") b.m = 5;
      if (name == "P4.8" || name == "P4.9") b.n1 = 16;
      if (name == "P5.0") b.u = {3};
      if (name == "P4.7") b.t.reset();
      if (name == "P4.11") b.h = 2;
      if (name == "C6.1" || name == "P4.10") b.m = 3;
      CAPTURE(name);
      const ExpectedParams e = family_parameters(name, b);
      CHECK(e.code.n == e.base.n + e.n_prime + e.pad);
      CHECK(e.code.d == e.base.d);
      CHECK(e.code.w_max == e.base.w_max + e.n_prime + e.pad);
    }
  }

  TEST_CASE("errors") {
    FamilyArgs a;
    a.m = 5;
    CHECK(kind_of("P5.3", a) == ErrorKind::UnknownFamily);
    CHECK(kind_of("simplex", a) == ErrorKind::UnknownFamily);
    a.m = 4;
    CHECK(kind_of("P6.2", a) == ErrorKind::ConstraintViolated);
    CHECK(kind_of("P6.1", a) == ErrorKind::ConstraintViolated);  // q missing
    FamilyArgs b;
    b.k = 5;
    b.u = {3, 2};
    CHECK(kind_of("P4.1", b) == ErrorKind::ConstraintViolated);
    b.u = {2};
    CHECK(kind_of("P5.0", b) == ErrorKind::ConstraintViolated);
    FamilyArgs c;
    c.q = 6;
    c.m = 2;
    CHECK(kind_of("P6.1", c) == ErrorKind::ConstraintViolated);
    FamilyArgs d;
    d.m = 3;
    d.h = 1;
    d.t = 2;
    CHECK(kind_of("P4.7", d) == ErrorKind::ConstraintViolated);
  }
}
