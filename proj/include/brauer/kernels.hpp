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

// Data-parallel kernels over the diagram space: breadth-first closure of a
// generating set with word lengths, and exhaustive sweeps over all
// diagrams of a rank. Each kernel has an OpenMP version and a serial
// reference with an independent data layout, kept for testing.

#ifndef BRAUER_KERNELS_HPP_
#define BRAUER_KERNELS_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t, uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "brauer/diagram.hpp"
#include "brauer/errors.hpp"

namespace brauer {

  // Right: x -> x * g. Left: x -> g * x.
  enum class Side { right, left };

  // Word lengths over a generating set, indexed by diagram_rank.
  class ClosureTable {
   public:
    static constexpr std::uint8_t unreachable = 0xFF;

    ClosureTable(std::size_t n, std::vector<std::uint8_t> lengths)
        : _n(n), _lengths(std::move(lengths)) {}

    std::size_t rank() const noexcept {
      return _n;
    }

    bool contains(BrauerDiagram const& d) const {
      return length(d).has_value();
    }

    std::optional<std::size_t> length(BrauerDiagram const& d) const {
      return length_at(diagram_rank(d));
    }

    std::optional<std::size_t> length_at(std::uint64_t r) const {
      auto v = _lengths.at(r);
      return v == unreachable ? std::nullopt : std::optional<std::size_t>(v);
    }

    // Number of reachable diagrams.
    std::size_t size() const noexcept;

    std::size_t max_length() const noexcept;

    std::vector<std::uint8_t> const& raw() const noexcept {
      return _lengths;
    }

    friend bool operator==(ClosureTable const&, ClosureTable const&) = default;

   private:
    std::size_t               _n;
    std::vector<std::uint8_t> _lengths;
  };

  // Sets the OpenMP thread count for subsequent kernels; 0 keeps the
  // runtime default.
  void set_thread_count(int threads);
  int  thread_count();

  namespace parallel {
    // Level-synchronous BFS from the generators (length 1). Distances do
    // not depend on the thread count.
    ClosureTable closure(std::size_t                    n,
                         std::span<BrauerDiagram const> generators,
                         Side        side  = Side::right,
                         std::size_t limit = kDefaultEnumerationLimit);

    template <typename Pred>
    std::uint64_t count_if(std::size_t n, Pred&& pred,
                           std::size_t limit = kDefaultEnumerationLimit);

    // Smallest rank at which pred fails, if any.
    template <typename Pred>
    std::optional<std::uint64_t>
    first_failure(std::size_t n, Pred&& pred,
                  std::size_t limit = kDefaultEnumerationLimit);
  }  // namespace parallel

  namespace serial {
    // Queue-based BFS keyed by diagram value.
    ClosureTable closure(std::size_t                    n,
                         std::span<BrauerDiagram const> generators,
                         Side        side  = Side::right,
                         std::size_t limit = kDefaultEnumerationLimit);

    template <typename Pred>
    std::uint64_t count_if(std::size_t n, Pred&& pred,
                           std::size_t limit = kDefaultEnumerationLimit) {
      std::uint64_t count = 0;
      for_each_diagram(
          n, [&](BrauerDiagram const& d) { count += pred(d) ? 1 : 0; }, limit);
      return count;
    }

    template <typename Pred>
    std::optional<std::uint64_t>
    first_failure(std::size_t n, Pred&& pred,
                  std::size_t limit = kDefaultEnumerationLimit) {
      std::optional<std::uint64_t> out;
      std::uint64_t                r = 0;
      for_each_diagram(
          n,
          [&](BrauerDiagram const& d) {
            if (!out && !pred(d)) {
              out = r;
            }
            ++r;
          },
          limit);
      return out;
    }
  }  // namespace serial

  std::vector<BrauerDiagram> all_atoms(std::size_t n);

  namespace detail {
    void check_enumeration_limit(std::size_t n, std::size_t limit);
  }

  template <typename Pred>
  std::uint64_t parallel::count_if(std::size_t n, Pred&& pred,
                                   std::size_t limit) {
    detail::check_enumeration_limit(n, limit);
    auto const    total = static_cast<std::int64_t>(number_of_diagrams(n));
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t r = 0; r < total; ++r) {
      if (pred(diagram_unrank(n, static_cast<std::uint64_t>(r)))) {
        ++count;
      }
    }
    return count;
  }

  template <typename Pred>
  std::optional<std::uint64_t>
  parallel::first_failure(std::size_t n, Pred&& pred, std::size_t limit) {
    detail::check_enumeration_limit(n, limit);
    auto const   total = static_cast<std::int64_t>(number_of_diagrams(n));
    std::int64_t first = total;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t r = 0; r < total; ++r) {
      if (r < first && !pred(diagram_unrank(n, static_cast<std::uint64_t>(r)))) {
        first = r;
      }
    }
    if (first == total) {
      return std::nullopt;
    }
    return static_cast<std::uint64_t>(first);
  }

}  // namespace brauer

#endif  // BRAUER_KERNELS_HPP_
