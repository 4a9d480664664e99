// Copyright 2026 The Brauer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>  // for string

#include "doctest.h"

#include "brauer/errors.hpp"
#include "brauer/verify.hpp"

using namespace brauer;

namespace {
  Claim const* find_claim(VerifyReport const& r, std::string const& part) {
    for (auto const& c : r.claims) {
      if (c.name.find(part) != std::string::npos) {
        return &c;
      }
    }
    return nullptr;
  }
}  // namespace

TEST_CASE("suite names") {
  CHECK(all_suites().size() == 6);
  for (auto s : all_suites()) {
    CHECK(parse_suite(suite_name(s)) == s);
  }
  CHECK_FALSE(parse_suite("bogus").has_value());
}

TEST_CASE("relations suite") {
  auto r = verify(4, {Suite::relations});
  CHECK(r.passed());
  CHECK(r.claims.size() >= 7);
  CHECK(r.to_text().find("PASS relations:") != std::string::npos);
  CHECK(r.to_text().find("FAIL") == std::string::npos);
}

TEST_CASE("generation suite") {
  auto r = verify(5, {Suite::generation});
  CHECK(r.passed());
  auto const* c = find_claim(r, "closure of atoms");
  REQUIRE(c != nullptr);
  CHECK(c->expected == "825");
  CHECK(c->computed == "825");
}

TEST_CASE("H-class suite") {
  auto r = verify(6, {Suite::hclasses});
  CHECK(r.passed());
  auto text = r.to_text();
  CHECK(text.find("(expected 24, computed 24)") != std::string::npos);
  CHECK(text.find("(expected 2, computed 2)") != std::string::npos);
}

TEST_CASE("all suites at n = 5") {
  auto r = verify(5, all_suites());
  CHECK(r.passed());
  for (auto s : all_suites()) {
    bool found = false;
    for (auto const& c : r.claims) {
      found |= c.suite == suite_name(s);
    }
    CHECK(found);
  }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(verify(8, {Suite::generation}), limit_error);
  CHECK_THROWS_AS(verify(7, {Suite::irreducible}), limit_error);
  CHECK_THROWS_AS(verify(1, {Suite::counts}), domain_error);
}
