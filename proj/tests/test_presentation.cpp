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

#include <functional>  // for function
#include <random>      // for mt19937_64
#include <vector>      // for vector

#include "doctest.h"

#include "brauer/diagram.hpp"
#include "brauer/errors.hpp"
#include "brauer/presentation.hpp"

#include "oracles.hpp"

using namespace brauer;

TEST_CASE("quarks and words") {
  CHECK(quark(3, 1) == quark(1, 3));
  CHECK(quark(3, 1).i == 1);
  CHECK_THROWS_AS(quark(2, 2), domain_error);
  CHECK_THROWS_AS(quark(0, 2), domain_error);
  CHECK_THROWS_AS(Word(4, {}), domain_error);
  CHECK_THROWS_AS(Word(3, {quark(1, 4)}), domain_error);
  CHECK_THROWS_AS(Word(1, {quark(1, 2)}), domain_error);

  auto w = make_word(5, {{1, 2}, {3, 2}, {1, 2}});
  CHECK(to_string(w) == "n=5: (1,2)(2,3)(1,2)");
  CHECK(parse_word("n=5: (1,2)(2,3)(1,2)") == w);
  CHECK(parse_word(" n=5:(2,1) (2,3)(1,2) ") == w);
  CHECK(parse_quarks(5, "(1,2)(2,3)(1,2)") == w.quarks());
  CHECK(quarks_to_string(w.quarks()) == "(1,2)(2,3)(1,2)");
  CHECK_THROWS_AS(parse_word("n=5: (1,2)(2,6)"), domain_error);
  CHECK_THROWS_AS(parse_word("n=5: (1,2"), domain_error);
  CHECK_THROWS_AS(parse_word("n=5:"), domain_error);
  CHECK((make_word(4, {{1, 2}}) * make_word(4, {{3, 4}}))
        == make_word(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("evaluation map") {
  CHECK(phi(make_word(4, {{1, 2}})) == atom(4, 1, 2));
  CHECK(phi(make_word(5, {{1, 2}, {2, 3}, {1, 2}}))
        == phi(make_word(5, {{1, 2}})));
  CHECK(to_string(phi(make_word(3, {{1, 3}, {1, 2}})))
        == "n=3;{1,3}{2,3'}{1',2'}");

  auto w = make_word(6, {{1, 4}, {2, 5}, {4, 6}});
  CHECK(words_equal_in_T(w, w));
  CHECK(words_equal_in_T(make_word(4, {{1, 2}, {3, 4}}),
                         make_word(4, {{3, 4}, {1, 2}})));
  CHECK_FALSE(words_equal_in_T(make_word(4, {{1, 2}}),
                               make_word(4, {{1, 3}})));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    std::size_t n = 2 + t % 7;
    auto        u = oracle::random_word(n, 10, rng);
    REQUIRE(corank(phi(u)) >= 2);
    REQUIRE(phi(star(u)) == transpose(phi(u)));
  }
}

TEST_CASE("single relation steps") {
  auto r2 = apply_relation(make_word(4, {{1, 2}, {1, 2}}),
                           {RelationId::R2, 0, Direction::forward, {1, 2}});
  CHECK(r2 == make_word(4, {{1, 2}}));

  auto r5 = apply_relation(make_word(4, {{1, 2}, {2, 3}, {1, 2}}),
                           {RelationId::R5, 0, Direction::forward, {1, 2, 3}});
  CHECK(r5 == make_word(4, {{1, 2}}));

  auto r3 = apply_relation(
      make_word(4, {{1, 2}, {2, 3}, {3, 4}}),
      {RelationId::R3, 0, Direction::forward, {1, 2, 3, 4}});
  CHECK(r3 == make_word(4, {{1, 2}, {1, 4}, {3, 4}}));

  auto back = apply_relation(
      r3, {RelationId::R3, 0, Direction::backward, {1, 2, 3, 4}});
  CHECK(back == make_word(4, {{1, 2}, {2, 3}, {3, 4}}));

  // R7 in the middle of a longer word.
  auto r7 = apply_relation(
      make_word(5, {{1, 5}, {1, 2}, {3, 4}}),
      {RelationId::R7, 1, Direction::forward, {1, 2, 3, 4}});
  CHECK(r7 == make_word(5, {{1, 5}, {3, 4}, {1, 2}}));

  // Pattern mismatch.
  CHECK_THROWS_AS(
      apply_relation(make_word(4, {{1, 2}, {1, 3}}),
                     {RelationId::R2, 0, Direction::forward, {1, 2}}),
      domain_error);
  // Distinctness violated.
  CHECK_THROWS_AS(
      apply_relation(make_word(4, {{1, 2}, {2, 1}, {1, 2}}),
                     {RelationId::R5, 0, Direction::forward, {1, 2, 1}}),
      domain_error);
  // Site past the end.
  CHECK_THROWS_AS(
      apply_relation(make_word(4, {{1, 2}}),
                     {RelationId::R2, 1, Direction::forward, {1, 2}}),
      domain_error);
}

TEST_CASE("every listed relation site preserves the image") {
  std::mt19937_64 rng(23);
  std::size_t     applied = 0;
  for (int t = 0; t < 3000; ++t) {
    std::size_t n     = 2 + t % 7;
    auto        w     = oracle::random_connected_word(n, 6, rng);
    auto        sites = relation_sites(w);
    for (auto const& s : sites) {
      auto rewritten = apply_relation(w, s);
      REQUIRE(phi(rewritten) == phi(w));
      ++applied;
    }
  }
  CHECK(applied > 10000);
}

TEST_CASE("relation families hold") {
  auto n3 = check_all_relations(3);
  REQUIRE(n3.size() == 7);
  for (auto const& f : n3) {
    bool const small = f.id == RelationId::R1 || f.id == RelationId::R2
                       || f.id == RelationId::R4 || f.id == RelationId::R5;
    CHECK(f.applicable() == small);
    CHECK(f.passed());
  }
  for (std::size_t n : {4, 6}) {
    for (auto const& f : check_all_relations(n)) {
      CHECK(f.applicable());
      CHECK(f.passed());
    }
  }
  // 4 * 3 * 2 * 1 ordered tuples for R3 at n = 4.
  CHECK(check_all_relations(4)[2].tuples_checked == 24);
}

TEST_CASE("anti-involution") {
  CHECK(star(make_word(3, {{1, 2}})) == make_word(3, {{1, 2}}));
  CHECK(star(make_word(3, {{1, 2}, {1, 3}})) == make_word(3, {{1, 3}, {1, 2}}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    auto u = oracle::random_word(6, 8, rng);
    auto v = oracle::random_word(6, 8, rng);
    REQUIRE(star(star(u)) == u);
    REQUIRE(star(u * v) == star(v) * star(u));
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(make_word(4, {{1, 2}})));
  CHECK(is_connected(make_word(4, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK_FALSE(is_connected(make_word(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("connected words absorb their reverse") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 5000; ++t) {
    std::size_t n = 2 + t % 7;
    auto        w = oracle::random_connected_word(n, 10, rng);
    REQUIRE(phi(w * star(w)) == atom(n, w[0].i, w[0].j));
  }
}

TEST_CASE("normal form cases") {
  CHECK(normalize(make_word(2, {{1, 2}})) == make_word(2, {{1, 2}}));
  // Disjoint quark appended to the tail.
  CHECK(normalize(make_word(4, {{1, 2}, {3, 4}})) == make_word(4, {{1, 2}, {3, 4}}));
  // Quark meeting only the last head quark.
  CHECK(normalize(make_word(4, {{1, 2}, {2, 3}}))
        == make_word(4, {{1, 2}, {2, 3}}));
  // Quark equal to a tail pair.
  CHECK(normalize(make_word(4, {{1, 2}, {3, 4}, {3, 4}}))
        == make_word(4, {{1, 2}, {3, 4}}));
  // One label in the head's last pair, one in a tail pair.
  CHECK(normalize(make_word(4, {{1, 2}, {3, 4}, {1, 3}}))
        == make_word(4, {{1, 2}, {2, 4}, {1, 3}}));
  // One label in a tail pair, the other free.
  CHECK(normalize(make_word(5, {{1, 2}, {3, 4}, {3, 5}}))
        == make_word(5, {{1, 2}, {1, 4}, {1, 5}, {1, 2}, {3, 5}}));
  // Labels in two different tail pairs.
  CHECK(normalize(make_word(6, {{1, 2}, {3, 4}, {5, 6}, {3, 5}}))
        == make_word(6, {{1, 2}, {1, 6}, {1, 3}, {1, 2}, {4, 6}, {3, 5}}));
}

TEST_CASE("normal form property") {
  auto w = make_word(4, {{1, 2}, {3, 4}, {1, 3}});
  CHECK(is_normal_form(normalize(w)));
  CHECK(phi(normalize(w)) == phi(w));
  CHECK_FALSE(is_normal_form(make_word(4, {{1, 2}, {3, 4}, {1, 3}})));
  CHECK(normal_form_split(make_word(4, {{1, 2}, {3, 4}})) == 0u);
  CHECK(normal_form_split(make_word(4, {{1, 2}, {2, 3}, {1, 4}})) == 1u);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 10000; ++t) {
    std::size_t n = 2 + t % 7;
    auto        u = oracle::random_word(n, 12, rng);
    auto        v = normalize(u);
    REQUIRE(phi(v) == phi(u));
    REQUIRE(is_normal_form(v));
  }
}

namespace {
  // All nonempty sets of pairwise disjoint pairs on {1..n}.
  void disjoint_pair_sets(std::size_t                                  n,
                          std::size_t                                  from,
                          std::vector<LabelPair>&                      cur,
                          std::vector<bool>&                           used,
                          std::vector<std::vector<LabelPair>>&         out) {
    if (!cur.empty()) {
      out.push_back(cur);
    }
    for (std::size_t i = from; i <= n; ++i) {
      if (used[i]) {
        continue;
      }
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        used[i] = used[j] = true;
        cur.emplace_back(i, j);
        disjoint_pair_sets(n, i + 1, cur, used, out);
        cur.pop_back();
        used[i] = used[j] = false;
      }
    }
  }
}  // namespace

TEST_CASE("standard idempotents") {
  auto e = standard_idempotent(4, {{1, 2}, {3, 4}});
  CHECK(e == make_word(4, {{1, 2}, {3, 4}}));
  CHECK(phi(e) * phi(e) == phi(e));
  CHECK(standard_idempotent(2, {{1, 2}}) == make_word(2, {{1, 2}}));
  CHECK_THROWS_AS(standard_idempotent(4, {{1, 2}, {2, 3}}), domain_error);
  CHECK(epsilon(6, 2) == make_word(6, {{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(epsilon(5, 3), domain_error);

  std::vector<std::vector<LabelPair>> sets;
  std::vector<LabelPair>              cur;
  std::vector<bool>                   used(6, false);
  disjoint_pair_sets(5, 1, cur, used, sets);
  std::vector<BrauerDiagram> idem;
  for (auto const& s : sets) {
    idem.push_back(phi(standard_idempotent(5, s)));
    REQUIRE(idem.back() * idem.back() == idem.back());
  }
  for_each_diagram(5, [&](BrauerDiagram const& d) {
    if (corank(d) == 0) {
      return;
    }
    std::size_t matches = 0;
    for (auto const& e : idem) {
      matches += green_related(d, e, GreenRelation::L);
    }
    REQUIRE(matches == 1);
  });
}

TEST_CASE("H-class sizes of standard idempotents") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      auto          e    = phi(epsilon(n, k));
      std::uint64_t size = 0;
      for_each_diagram(n, [&](BrauerDiagram const& d) {
        size += green_related(d, e, GreenRelation::H);
      });
      CHECK(size == oracle::factorial(n - 2 * k));
    }
  }
}

TEST_CASE("gamma generators") {
  CHECK(gamma(4, 3) == make_word(4, {{1, 2}, {1, 3}, {1, 4}, {1, 2}}));
  CHECK(gamma_pair(5, 5, 3) == make_word(5, {{1, 2}, {1, 5}, {1, 3}, {1, 2}}));
  CHECK_THROWS_AS(gamma(4, 2), domain_error);
  CHECK_THROWS_AS(gamma(4, 4), domain_error);
  CHECK_THROWS_AS(gamma_pair(5, 3, 3), domain_error);
  for (std::size_t n = 4; n <= 6; ++n) {
    auto const t12 = atom(n, 1, 2);
    for (std::size_t i = 3; i < n; ++i) {
      auto gi = phi(gamma(n, i));
      CHECK(gi * gi == t12);
      for (std::size_t j = 3; j < n; ++j) {
        auto gj = phi(gamma(n, j));
        if (i + 1 == j) {
          CHECK(gi * gj * gi == gj * gi * gj);
        } else if (i > j + 1 || j > i + 1) {
          CHECK(gi * gj == gj * gi);
        }
      }
    }
  }
}
