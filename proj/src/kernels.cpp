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

#include "brauer/kernels.hpp"

#include <algorithm>      // for sort, max
#include <atomic>         // for atomic_ref
#include <deque>          // for deque
#include <unordered_map>  // for unordered_map

#include <omp.h>

namespace brauer {

  std::size_t ClosureTable::size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(_lengths.begin(), _lengths.end(), [](std::uint8_t v) {
          return v != unreachable;
        }));
  }

  std::size_t ClosureTable::max_length() const noexcept {
    std::size_t best = 0;
    for (auto v : _lengths) {
      if (v != unreachable) {
        best = std::max<std::size_t>(best, v);
      }
    }
    return best;
  }

  void set_thread_count(int threads) {
    if (threads > 0) {
      omp_set_num_threads(threads);
    }
  }

  int thread_count() {
    return omp_get_max_threads();
  }

  std::vector<BrauerDiagram> all_atoms(std::size_t n) {
    std::vector<BrauerDiagram> out;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        out.push_back(atom(n, i, j));
      }
    }
    return out;
  }

  void detail::check_enumeration_limit(std::size_t n, std::size_t limit) {
    if (n > limit || n > kMaxRank) {
      throw limit_error("rank " + std::to_string(n)
                        + " exceeds the enumeration limit "
                        + std::to_string(limit));
    }
    if (n == 0) {
      throw domain_error("rank must be positive");
    }
  }

  namespace {
    void check_generators(std::size_t n, std::span<BrauerDiagram const> gens) {
      for (auto const& g : gens) {
        if (g.rank() != n) {
          throw domain_error("generator rank does not match");
        }
      }
    }

    BrauerDiagram step(BrauerDiagram const& x,
                       BrauerDiagram const& g,
                       Side                 side) {
      return side == Side::right ? multiply(x, g) : multiply(g, x);
    }
  }  // namespace

  ClosureTable parallel::closure(std::size_t                    n,
                                 std::span<BrauerDiagram const> gens,
                                 Side                           side,
                                 std::size_t                    limit) {
    detail::check_enumeration_limit(n, limit);
    check_generators(n, gens);
    std::vector<std::uint8_t> length(
        static_cast<std::size_t>(number_of_diagrams(n)),
        ClosureTable::unreachable);

    std::vector<std::uint64_t> frontier;
    for (auto const& g : gens) {
      auto r = diagram_rank(g);
      if (length[r] == ClosureTable::unreachable) {
        length[r] = 1;
        frontier.push_back(r);
      }
    }
    std::sort(frontier.begin(), frontier.end());

    std::uint8_t level = 1;
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      auto const                 size = static_cast<std::int64_t>(frontier.size());
      std::uint8_t const         next_level = level + 1;
#pragma omp parallel
      {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t idx = 0; idx < size; ++idx) {
          auto x = diagram_unrank(n, frontier[static_cast<std::size_t>(idx)]);
          for (auto const& g : gens) {
            auto r = diagram_rank(step(x, g, side));
            std::atomic_ref<std::uint8_t> cell(length[r]);
            std::uint8_t expected = ClosureTable::unreachable;
            if (cell.load(std::memory_order_relaxed) == expected
                && cell.compare_exchange_strong(expected, next_level)) {
              local.push_back(r);
            }
          }
        }
#pragma omp critical
        next.insert(next.end(), local.begin(), local.end());
      }
      // Each rank is claimed by exactly one thread; sorting makes the next
      // frontier independent of the schedule.
      std::sort(next.begin(), next.end());
      frontier = std::move(next);
      level    = next_level;
    }
    return ClosureTable(n, std::move(length));
  }

  ClosureTable serial::closure(std::size_t                    n,
                               std::span<BrauerDiagram const> gens,
                               Side                           side,
                               std::size_t                    limit) {
    detail::check_enumeration_limit(n, limit);
    check_generators(n, gens);
    std::unordered_map<BrauerDiagram, std::uint8_t> seen;
    std::deque<BrauerDiagram>                       queue;
    for (auto const& g : gens) {
      if (seen.emplace(g, 1).second) {
        queue.push_back(g);
      }
    }
    while (!queue.empty()) {
      BrauerDiagram x = queue.front();
      queue.pop_front();
      std::uint8_t const d = seen.at(x);
      for (auto const& g : gens) {
        BrauerDiagram y = step(x, g, side);
        if (seen.emplace(y, d + 1).second) {
          queue.push_back(y);
        }
      }
    }
    std::vector<std::uint8_t> length(
        static_cast<std::size_t>(number_of_diagrams(n)),
        ClosureTable::unreachable);
    for (auto const& [d, len] : seen) {
      length[diagram_rank(d)] = len;
    }
    return ClosureTable(n, std::move(length));
  }

}  // namespace brauer
