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

#include "brauer/decomposition.hpp"

#include <algorithm>  // for min, max, sort
#include <stdexcept>  // for logic_error
#include <tuple>      // for tuple

#include "brauer/errors.hpp"
#include "brauer/kernels.hpp"

namespace brauer {

  namespace {
    // Line targets: line_of[x] = y when {x, y'} is a line, 0 otherwise.
    std::vector<std::size_t> line_targets(BrauerDiagram const& pi) {
      std::vector<std::size_t> out(pi.rank() + 1, 0);
      for (auto [x, y] : lines(pi)) {
        out[x] = y;
      }
      return out;
    }

    void require_corank(BrauerDiagram const& pi, std::size_t c) {
      if (corank(pi) != c) {
        throw domain_error("expected a diagram of corank " + std::to_string(c)
                           + ", found " + to_string(pi));
      }
    }
  }  // namespace

  std::vector<LabelCycle> bracket_cycles(BrauerDiagram const& pi) {
    require_corank(pi, 2);
    auto const left  = left_brackets(pi);
    auto const right = right_brackets(pi);
    if (left.front() != right.front()) {
      throw domain_error("left and right brackets differ in "
                         + to_string(pi));
    }
    std::size_t const n = pi.rank();
    auto const theta    = line_targets(pi);
    std::vector<std::size_t> inverse(n + 1, 0);
    for (std::size_t x = 1; x <= n; ++x) {
      if (theta[x] != 0) {
        inverse[theta[x]] = x;
      }
    }
    std::vector<LabelCycle> cycles;
    std::vector<bool>       done(n + 1, false);
    for (std::size_t x = 1; x <= n; ++x) {
      if (theta[x] == 0 || theta[x] == x || done[x]) {
        continue;
      }
      LabelCycle c;
      std::size_t y = x;
      do {
        c.push_back(y);
        done[y] = true;
        y       = inverse[y];
      } while (y != x);
      cycles.push_back(std::move(c));
    }
    return cycles;
  }

  Word decompose_group_corank2(BrauerDiagram const& pi) {
    auto const        cycles = bracket_cycles(pi);
    auto const [u, v]        = left_brackets(pi).front();
    std::vector<Quark> q{quark(u, v)};
    for (auto const& c : cycles) {
      for (auto x : c) {
        q.push_back(quark(u, x));
      }
      q.push_back(quark(u, v));
    }
    return Word(pi.rank(), std::move(q));
  }

  Word decompose_corank2(BrauerDiagram const& pi) {
    require_corank(pi, 2);
    auto const [a, b] = left_brackets(pi).front();
    auto const [c, d] = right_brackets(pi).front();
    if (a == c && b == d) {
      return decompose_group_corank2(pi);
    }
    // Orientations (u, v) of {a, b} and (f, g) of {c, d} with v != f; the
    // lexicographically smallest (v, f, g) wins.
    std::tuple<std::size_t, std::size_t, std::size_t, std::size_t> best{
        SIZE_MAX, SIZE_MAX, SIZE_MAX, SIZE_MAX};
    for (auto [u, v] : {LabelPair{a, b}, LabelPair{b, a}}) {
      for (auto [f, g] : {LabelPair{c, d}, LabelPair{d, c}}) {
        if (v != f) {
          best = std::min(best, std::tuple{v, f, g, u});
        }
      }
    }
    auto const [v, f, g, u] = best;
    std::size_t const n     = pi.rank();

    BrauerDiagram const bridge = atom(n, v, f) * atom(n, f, g);
    // Green's lemma: x -> x * bridge and y -> y * back are mutually inverse
    // between the H-class of sigma_{u,v} and that of pi.
    BrauerDiagram const back = atom(n, f, g) * atom(n, v, f) * atom(n, u, v);
    BrauerDiagram const xi   = pi * back;
    if (!green_related(xi, atom(n, u, v), GreenRelation::H)
        || xi * bridge != pi) {
      throw std::logic_error("bridging failed for " + to_string(pi));
    }
    std::vector<Quark> q = decompose_group_corank2(xi).quarks();
    q.push_back(quark(v, f));
    q.push_back(quark(f, g));
    return Word(n, std::move(q));
  }

  Word decompose(BrauerDiagram const& pi) {
    std::size_t const k = corank(pi) / 2;
    if (k == 0) {
      throw domain_error("invertible diagrams have no atom factorization: "
                         + to_string(pi));
    }
    if (k == 1) {
      return decompose_corank2(pi);
    }
    std::size_t const n     = pi.rank();
    auto const        left  = left_brackets(pi);   // sorted by smaller label
    auto const        right = right_brackets(pi);  // likewise

    // Keep the first left bracket {u0, v0} and the first right bracket;
    // extend the lines by sending the remaining left brackets onto the
    // remaining right brackets in order.
    std::vector<point_index> partner(2 * n);
    for (auto [x, y] : lines(pi)) {
      partner[x - 1]     = static_cast<point_index>(n + y - 1);
      partner[n + y - 1] = static_cast<point_index>(x - 1);
    }
    auto link = [&](std::size_t x, std::size_t y, bool bottom) {
      auto const p = static_cast<point_index>(x - 1 + (bottom ? n : 0));
      auto const q = static_cast<point_index>(y - 1 + (bottom ? n : 0));
      partner[p]   = q;
      partner[q]   = p;
    };
    link(left[0].first, left[0].second, false);
    link(right[0].first, right[0].second, true);
    for (std::size_t j = 1; j < k; ++j) {
      auto const [u, v] = left[j];
      auto const [f, g] = right[j];
      partner[u - 1]     = static_cast<point_index>(n + f - 1);
      partner[n + f - 1] = static_cast<point_index>(u - 1);
      partner[v - 1]     = static_cast<point_index>(n + g - 1);
      partner[n + g - 1] = static_cast<point_index>(v - 1);
    }
    BrauerDiagram const tau = BrauerDiagram::from_partners(n, partner);

    std::vector<Quark> q;
    for (std::size_t j = 1; j < k; ++j) {
      q.push_back(quark(left[j].first, left[j].second));
    }
    // decompose_corank2(tau) opens with sigma_{u0,v0}, completing the
    // product of all left-bracket atoms.
    auto const rest = decompose_corank2(tau).quarks();
    q.insert(q.end(), rest.begin(), rest.end());
    return Word(n, std::move(q));
  }

  std::size_t decomposition_length_bound(std::size_t n, std::size_t corank) {
    return 3 * n / 2 + corank / 2 - 1;
  }

  AtomFactorization factorize(BrauerDiagram const& pi) {
    return AtomFactorization{pi, decompose(pi)};
  }

  std::vector<IrreducibilityEntry>
  irreducible_generator_check(std::size_t n, std::size_t limit) {
    std::vector<IrreducibilityEntry> out;
    auto const                       atoms = all_atoms(n);
    for (std::size_t skip = 0; skip < atoms.size(); ++skip) {
      std::vector<BrauerDiagram> others;
      for (std::size_t t = 0; t < atoms.size(); ++t) {
        if (t != skip) {
          others.push_back(atoms[t]);
        }
      }
      auto const table = parallel::closure(n, others, Side::right, limit);
      auto const pair  = left_brackets(atoms[skip]).front();
      out.push_back({pair, table.size(), !table.contains(atoms[skip])});
    }
    return out;
  }

}  // namespace brauer
