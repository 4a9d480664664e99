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

// Elements of the Brauer monoid: perfect matchings on the 2n points
// {1, ..., n} and {1', ..., n'} with chain-composition multiplication.

#ifndef BRAUER_DIAGRAM_HPP_
#define BRAUER_DIAGRAM_HPP_

#include <array>       // for array
#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint8_t, uint64_t
#include <functional>  // for function, hash
#include <span>        // for span
#include <string>      // for string
#include <string_view> // for string_view
#include <utility>     // for pair
#include <vector>      // for vector

namespace brauer {

  inline constexpr std::size_t kMaxRank = 16;

  // Default cap on exhaustive enumeration; (2*9-1)!! already exceeds 34
  // million diagrams.
  inline constexpr std::size_t kDefaultEnumerationLimit = 8;

  // Internal point index. Unprimed i (1-based) is stored as i - 1 and
  // primed i' as n + i - 1.
  using point_index = std::uint8_t;

  // A user-facing point: 1-based label plus a prime mark.
  struct Point {
    std::size_t label;
    bool        primed;

    friend bool operator==(Point const&, Point const&) = default;
  };

  constexpr Point unprimed(std::size_t i) noexcept {
    return Point{i, false};
  }
  constexpr Point primed(std::size_t i) noexcept {
    return Point{i, true};
  }

  using Block = std::pair<Point, Point>;

  // An unordered pair {i, j} of unprimed labels with i < j. Used for left
  // brackets, and for right brackets with the primes dropped.
  using LabelPair = std::pair<std::size_t, std::size_t>;

  class BrauerDiagram {
   public:
    // Builds from a partner table of length 2n. Throws domain_error unless
    // the table is a fixed-point-free involution.
    static BrauerDiagram from_partners(std::size_t                  n,
                                       std::span<point_index const> partner);

    std::size_t rank() const noexcept {
      return _n;
    }

    point_index partner(point_index p) const noexcept {
      return _partner[p];
    }

    std::span<point_index const> partners() const noexcept {
      return {_partner.data(), 2 * std::size_t{_n}};
    }

    bool is_unprimed(point_index p) const noexcept {
      return p < _n;
    }

    // Blocks in canonical display order: left brackets, then lines, then
    // right brackets; each group sorted, smaller label first in a bracket.
    std::vector<Block> blocks() const;

    friend bool operator==(BrauerDiagram const&,
                           BrauerDiagram const&) = default;
    friend std::strong_ordering operator<=>(BrauerDiagram const&,
                                            BrauerDiagram const&)
        = default;

   private:
    BrauerDiagram() = default;
    friend BrauerDiagram make_unchecked(std::size_t n,
                                        std::span<point_index const>);

    std::uint8_t                              _n = 0;
    std::array<point_index, 2 * kMaxRank>     _partner{};
  };

  // Skips validation; `partner` must already be a perfect matching.
  BrauerDiagram make_unchecked(std::size_t                  n,
                               std::span<point_index const> partner);

  // Validates a block list: n blocks covering every point exactly once.
  BrauerDiagram make_diagram(std::size_t n, std::span<Block const> blocks);
  BrauerDiagram make_diagram(std::size_t n, std::vector<Block> const& blocks);

  BrauerDiagram identity(std::size_t n);

  // The atom with blocks {i,j}, {i',j'} and {k,k'} for every other k.
  BrauerDiagram atom(std::size_t n, std::size_t i, std::size_t j);

  // Image of a permutation given as the 1-based list perm[k-1] = p(k): the
  // diagram with blocks {k, p(k)'}. With this convention
  // multiply(from_permutation(p), from_permutation(q)) is the permutation
  // "first p, then q".
  BrauerDiagram from_permutation(std::span<std::size_t const> perm);
  BrauerDiagram from_permutation(std::vector<std::size_t> const& perm);

  struct Product {
    BrauerDiagram diagram;
    std::size_t   closed_loops;
  };

  // Glues the primed points of `a` to the unprimed points of `b` and
  // follows chains. Closed loops in the middle are dropped from the
  // diagram and reported in `closed_loops`.
  Product       multiply_with_loops(BrauerDiagram const& a,
                                    BrauerDiagram const& b);
  BrauerDiagram multiply(BrauerDiagram const& a, BrauerDiagram const& b);

  BrauerDiagram operator*(BrauerDiagram const& a, BrauerDiagram const& b);

  // Swaps k and k' for every k.
  BrauerDiagram transpose(BrauerDiagram const& d);

  // Twice the number of left brackets.
  std::size_t corank(BrauerDiagram const& d) noexcept;

  std::vector<LabelPair> left_brackets(BrauerDiagram const& d);
  std::vector<LabelPair> right_brackets(BrauerDiagram const& d);

  // Lines as (unprimed label, primed label).
  std::vector<std::pair<std::size_t, std::size_t>>
  lines(BrauerDiagram const& d);

  enum class GreenRelation { R, L, H, D };

  bool green_related(BrauerDiagram const& a,
                     BrauerDiagram const& b,
                     GreenRelation        rel);

  ////////////////////////////////////////////////////////////////////////
  // Text form, e.g. n=6;{1,5}{4,6}{2,1'}{3,6'}{2',4'}{3',5'}
  ////////////////////////////////////////////////////////////////////////

  std::string   to_string(BrauerDiagram const& d);
  BrauerDiagram parse_diagram(std::string_view text);

  ////////////////////////////////////////////////////////////////////////
  // Ranking. Diagrams are ordered by the recursive scheme "match the
  // smallest unmatched point with each larger unmatched point in turn";
  // rank is the position in that order.
  ////////////////////////////////////////////////////////////////////////

  // (2n - 1)!!, the number of diagrams of rank n.
  std::uint64_t number_of_diagrams(std::size_t n);

  std::uint64_t diagram_rank(BrauerDiagram const& d) noexcept;
  BrauerDiagram diagram_unrank(std::size_t n, std::uint64_t r);

  // Calls `visit` once per diagram of rank n, in rank order. Throws
  // limit_error if n > limit.
  void for_each_diagram(std::size_t                                n,
                        std::function<void(BrauerDiagram const&)> const& visit,
                        std::size_t limit = kDefaultEnumerationLimit);

  std::vector<BrauerDiagram>
  enumerate_all(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

  struct DiagramHash {
    std::size_t operator()(BrauerDiagram const& d) const noexcept;
  };

}  // namespace brauer

template <>
struct std::hash<brauer::BrauerDiagram> : brauer::DiagramHash {};

#endif  // BRAUER_DIAGRAM_HPP_
