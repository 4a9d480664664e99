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

#include "oracles.hpp"

#include <algorithm>  // for sort, next_permutation, shuffle
#include <numeric>    // for iota

namespace oracle {

  namespace {
    int signed_label(brauer::Point p) {
      int v = static_cast<int>(p.label);
      return p.primed ? -v : v;
    }

    brauer::Point point_of(int v) {
      return v > 0 ? brauer::unprimed(static_cast<std::size_t>(v))
                   : brauer::primed(static_cast<std::size_t>(-v));
    }

    void normalise(Matching& m) {
      for (auto& [x, y] : m) {
        if (x > y) {
          std::swap(x, y);
        }
      }
      std::sort(m.begin(), m.end());
    }

    struct UnionFind {
      explicit UnionFind(std::size_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        parent[find(x)] = find(y);
      }
      std::vector<std::size_t> parent;
    };
  }  // namespace

  Matching matching_of(brauer::BrauerDiagram const& d) {
    Matching m;
    for (auto const& [p, q] : d.blocks()) {
      m.emplace_back(signed_label(p), signed_label(q));
    }
    normalise(m);
    return m;
  }

  brauer::BrauerDiagram diagram_of(std::size_t n, Matching const& m) {
    std::vector<brauer::Block> blocks;
    for (auto [x, y] : m) {
      blocks.push_back({point_of(x), point_of(y)});
    }
    return brauer::make_diagram(n, blocks);
  }

  ChainProduct chain_product(brauer::BrauerDiagram const& a,
                             brauer::BrauerDiagram const& b) {
    std::size_t const n = a.rank();
    // Layers: top (a's unprimed) [0, n), middle [n, 2n), bottom (b's
    // primed) [2n, 3n).
    UnionFind uf(3 * n);
    auto      a_node = [n](int v) {
      return v > 0 ? static_cast<std::size_t>(v - 1)
                        : n + static_cast<std::size_t>(-v - 1);
    };
    auto b_node = [n](int v) {
      return v > 0 ? n + static_cast<std::size_t>(v - 1)
                   : 2 * n + static_cast<std::size_t>(-v - 1);
    };
    for (auto [x, y] : matching_of(a)) {
      uf.unite(a_node(x), a_node(y));
    }
    for (auto [x, y] : matching_of(b)) {
      uf.unite(b_node(x), b_node(y));
    }
    std::map<std::size_t, std::vector<int>> outer;
    std::set<std::size_t>                   roots;
    for (std::size_t v = 0; v < 3 * n; ++v) {
      roots.insert(uf.find(v));
    }
    for (std::size_t v = 0; v < n; ++v) {
      outer[uf.find(v)].push_back(static_cast<int>(v + 1));
      outer[uf.find(2 * n + v)].push_back(-static_cast<int>(v + 1));
    }
    ChainProduct out{{}, 0};
    for (auto r : roots) {
      auto it = outer.find(r);
      if (it == outer.end()) {
        ++out.loops;
      } else {
        out.matching.emplace_back(it->second.at(0), it->second.at(1));
      }
    }
    normalise(out.matching);
    return out;
  }

  std::set<Matching> brute_force_matchings(std::size_t n) {
    std::vector<int> points;
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      points.push_back(-i);
      points.push_back(i);
    }
    std::sort(points.begin(), points.end());
    std::set<Matching> out;
    do {
      Matching m;
      for (std::size_t k = 0; k < points.size(); k += 2) {
        m.emplace_back(points[k], points[k + 1]);
      }
      normalise(m);
      out.insert(m);
    } while (std::next_permutation(points.begin(), points.end()));
    return out;
  }

  std::map<Matching, std::size_t> brute_force_lengths(std::size_t n,
                                                      std::size_t max_len) {
    std::vector<std::pair<std::size_t, std::size_t>> atoms;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        atoms.emplace_back(i, j);
      }
    }
    std::map<Matching, std::size_t> best;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        Matching m = matching_of(
            brauer::atom(n, atoms[digits[0]].first, atoms[digits[0]].second));
        for (std::size_t p = 1; p < len; ++p) {
          auto const [i, j] = atoms[digits[p]];
          m = chain_product(diagram_of(n, m), brauer::atom(n, i, j)).matching;
        }
        best.emplace(m, len);  // keeps the first (shortest) length
        std::size_t p = 0;
        while (p < len && ++digits[p] == atoms.size()) {
          digits[p++] = 0;
        }
        if (p == len) {
          break;
        }
      }
    }
    return best;
  }

  std::uint64_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  std::uint64_t double_factorial_odd(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      r *= 2 * k - 1;
    }
    return r;
  }

  brauer::BrauerDiagram random_diagram(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> points;
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      points.push_back(i);
      points.push_back(-i);
    }
    std::shuffle(points.begin(), points.end(), rng);
    Matching m;
    for (std::size_t k = 0; k < points.size(); k += 2) {
      m.emplace_back(points[k], points[k + 1]);
    }
    normalise(m);
    return diagram_of(n, m);
  }

  namespace {
    brauer::Quark random_quark(std::size_t n, std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> pick(1, n);
      std::size_t                                 i = pick(rng), j = pick(rng);
      while (j == i) {
        j = pick(rng);
      }
      return brauer::quark(i, j);
    }
  }  // namespace

  brauer::Word random_word(std::size_t      n,
                           std::size_t      max_len,
                           std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::vector<brauer::Quark>                 q(len(rng));
    for (auto& x : q) {
      x = random_quark(n, rng);
    }
    return brauer::Word(n, std::move(q));
  }

  brauer::Word random_connected_word(std::size_t      n,
                                     std::size_t      max_len,
                                     std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::size_t const                          target = len(rng);
    std::vector<brauer::Quark>                 q{random_quark(n, rng)};
    while (q.size() < target) {
      brauer::Quark next = random_quark(n, rng);
      if (next.meets(q.back())) {
        q.push_back(next);
      }
    }
    return brauer::Word(n, std::move(q));
  }

}  // namespace oracle
