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

#include <algorithm>  // for find
#include <random>     // for mt19937_64
#include <vector>     // for vector

#include "doctest.h"

#include "brauer/decomposition.hpp"
#include "brauer/diagram.hpp"
#include "brauer/errors.hpp"
#include "brauer/presentation.hpp"

#include "oracles.hpp"

using namespace brauer;

namespace {
  void check_decomposition(BrauerDiagram const& d) {
    auto w = decompose(d);
    REQUIRE(phi(w) == d);
    auto lb = left_brackets(d);
    REQUIRE(std::find(lb.begin(), lb.end(), LabelPair{w[0].i, w[0].j})
            != lb.end());
    REQUIRE(w.size() <= decomposition_length_bound(d.rank(), corank(d)));
  }
}  // namespace

TEST_CASE("group elements of an atom's H-class") {
  CHECK(bracket_cycles(atom(4, 1, 2)).empty());
  CHECK(decompose_group_corank2(atom(4, 1, 2)) == make_word(4, {{1, 2}}));

  auto swap34 = parse_diagram("n=4;{1,2}{3,4'}{4,3'}{1',2'}");
  CHECK(bracket_cycles(swap34) == std::vector<LabelCycle>{{3, 4}});
  CHECK(decompose_group_corank2(swap34)
        == make_word(4, {{1, 2}, {1, 3}, {1, 4}, {1, 2}}));

  // Lines 3 -> 5', 4 -> 3', 5 -> 4'; the cycle starts at 3 and continues
  // with the label whose line ends at 3'.
  auto three = parse_diagram("n=5;{1,2}{3,5'}{4,3'}{5,4'}{1',2'}");
  CHECK(bracket_cycles(three) == std::vector<LabelCycle>{{3, 4, 5}});
  CHECK(decompose_group_corank2(three)
        == make_word(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 2}}));

  CHECK_THROWS_AS(bracket_cycles(identity(4)), domain_error);
  CHECK_THROWS_AS(decompose_group_corank2(atom(4, 1, 2) * atom(4, 2, 3)),
                  domain_error);

  std::size_t group = 0;
  for_each_diagram(5, [&](BrauerDiagram const& d) {
    if (corank(d) != 2 || left_brackets(d) != right_brackets(d)) {
      return;
    }
    ++group;
    REQUIRE(phi(decompose_group_corank2(d)) == d);
  });
  CHECK(group == 10 * 6);
}

TEST_CASE("corank-2 elements") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        CHECK(decompose_corank2(atom(n, i, j)) == make_word(n, {{i, j}}));
      }
    }
  }
  auto pi = parse_diagram("n=3;{1,2}{3,1'}{2',3'}");
  auto w  = decompose_corank2(pi);
  CHECK(phi(w) == pi);
  CHECK(w[0] == quark(1, 2));

  std::size_t count = 0;
  for_each_diagram(5, [&](BrauerDiagram const& d) {
    if (corank(d) != 2) {
      return;
    }
    ++count;
    REQUIRE(phi(decompose_corank2(d)) == d);
    REQUIRE(decompose(d) == decompose_corank2(d));
  });
  // C(5,2)^2 bracket choices times 3! line bijections.
  CHECK(count == 10 * 10 * oracle::factorial(3));
  CHECK_THROWS_AS(decompose_corank2(identity(4)), domain_error);
  CHECK_THROWS_AS(decompose_corank2(phi(epsilon(4, 2))), domain_error);
}

TEST_CASE("full decomposition") {
  auto d6 = parse_diagram("n=6;{1,5}{4,6}{2,1'}{3,6'}{2',4'}{3',5'}");
  check_decomposition(d6);

  for (std::size_t n = 2; n <= 5; ++n) {
    std::size_t singular = 0;
    for_each_diagram(n, [&](BrauerDiagram const& d) {
      if (corank(d) == 0) {
        CHECK_THROWS_AS(decompose(d), domain_error);
        return;
      }
      ++singular;
      check_decomposition(d);
    });
    CHECK(singular == oracle::double_factorial_odd(n) - oracle::factorial(n));
  }

  std::mt19937_64 rng(41);
  for (std::size_t n = 6; n <= kMaxRank; ++n) {
    for (int t = 0; t < 300; ++t) {
      auto d = oracle::random_diagram(n, rng);
      if (corank(d) > 0) {
        check_decomposition(d);
      }
    }
  }
}

TEST_CASE("length bound") {
  CHECK(decomposition_length_bound(4, 2) == 6);
  CHECK(decomposition_length_bound(5, 4) == 8);
}

TEST_CASE("factorize") {
  auto f = factorize(atom(5, 2, 4) * atom(5, 1, 3));
  CHECK(f.verified());
  CHECK(f.target == atom(5, 2, 4) * atom(5, 1, 3));
}

TEST_CASE("no atom is a product of the others") {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto report = irreducible_generator_check(n);
    CHECK(report.size() == n * (n - 1) / 2);
    for (auto const& e : report) {
      CHECK(e.irreducible);
    }
  }
  CHECK_THROWS_AS(irreducible_generator_check(8), limit_error);
}
