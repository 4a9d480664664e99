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

#include "doctest.h"
#include "json.hpp"

#include "brauer/diagram.hpp"
#include "brauer/errors.hpp"
#include "brauer/json_io.hpp"
#include "brauer/presentation.hpp"

using namespace brauer;

TEST_CASE("diagram JSON") {
  auto d = parse_diagram("n=6;{1,5}{4,6}{2,1'}{3,6'}{2',4'}{3',5'}");
  auto j = diagram_to_json(d);
  CHECK(j.dump()
        == R"({"blocks":[[1,5],[4,6],[2,-1],[3,-6],[-2,-4],[-3,-5]],"n":6})");
  CHECK(diagram_from_json(j) == d);
  for_each_diagram(4, [](BrauerDiagram const& e) {
    REQUIRE(diagram_from_json(diagram_to_json(e)) == e);
  });

  CHECK_THROWS_AS(diagram_from_json(nlohmann::json::parse(R"({"n":2})")),
                  domain_error);
  CHECK_THROWS_AS(
      diagram_from_json(nlohmann::json::parse(R"({"n":2,"blocks":[[1,2]]})")),
      domain_error);
  CHECK_THROWS_AS(diagram_from_json(nlohmann::json::parse(
                      R"({"n":2,"blocks":[[1,2],[-1,0]]})")),
                  domain_error);
  CHECK_THROWS_AS(diagram_from_json(nlohmann::json::parse(
                      R"({"n":"2","blocks":[[1,2],[-1,-2]]})")),
                  domain_error);
}

TEST_CASE("word JSON") {
  auto w = make_word(5, {{1, 2}, {2, 3}});
  auto j = word_to_json(w);
  CHECK(j.dump() == R"({"n":5,"quarks":[[1,2],[2,3]]})");
  CHECK(word_from_json(j) == w);
  CHECK_THROWS_AS(
      word_from_json(nlohmann::json::parse(R"({"n":5,"quarks":[]})")),
      domain_error);
  CHECK_THROWS_AS(
      word_from_json(nlohmann::json::parse(R"({"n":5,"quarks":[[1,1]]})")),
      domain_error);
}
