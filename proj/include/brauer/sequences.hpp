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

// Connected sequences of 2-subsets, their equivalence classes, and the
// intersection graph on 2-subsets.

#ifndef BRAUER_SEQUENCES_HPP_
#define BRAUER_SEQUENCES_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "brauer/diagram.hpp"
#include "brauer/presentation.hpp"

namespace brauer {

  class ConnectedSequence {
   public:
    // Throws domain_error unless items is nonempty, in range, and
    // consecutive items intersect.
    ConnectedSequence(std::size_t n, std::vector<Quark> items);

    std::size_t rank() const noexcept {
      return _n;
    }
    std::vector<Quark> const& items() const noexcept {
      return _items;
    }
    std::size_t size() const noexcept {
      return _items.size();
    }
    Quark const& front() const {
      return _items.front();
    }
    Quark const& back() const {
      return _items.back();
    }

    Word as_word() const {
      return Word(_n, _items);
    }

    friend bool operator==(ConnectedSequence const&,
                           ConnectedSequence const&) = default;

   private:
    std::size_t        _n;
    std::vector<Quark> _items;
  };

  // "(1,2)(2,3)(3,4)"
  ConnectedSequence parse_sequence(std::size_t n, std::string_view text);
  std::string       to_string(ConnectedSequence const& s);

  // Product of the atoms; always of corank 2. Two sequences are equivalent
  // exactly when these diagrams agree.
  BrauerDiagram seq_canonical(ConnectedSequence const& s);

  bool seq_equivalent(ConnectedSequence const& a, ConnectedSequence const& b);

  // Single-step operations, each usable in both directions:
  //   I    {i,j},{i,j}        <-> {i,j}
  //   II   {i,j},{j,k},{k,l}  <-> {i,j},{i,l},{k,l}   (i != l)
  //   III  {i,j},{j,k},{k,i}  <-> {i,j},{k,i}
  //   IV   {i,j},{j,k},{i,j}  <-> {i,j}
  enum class SequenceOp { I = 1, II, III, IV };

  struct SequenceOpSite {
    SequenceOp                 op;
    std::size_t                position;
    Direction                  direction;
    std::array<std::size_t, 4> binding;
  };

  ConnectedSequence apply_sequence_op(ConnectedSequence const& s,
                                      SequenceOpSite const&    site);

  std::vector<SequenceOpSite> sequence_op_sites(ConnectedSequence const& s);

  // n(n-1)n!/4
  std::uint64_t count_classes_formula(std::size_t n);
  // (n-2)!
  std::uint64_t count_paths_formula(std::size_t n);

  // Number of corank-2 diagrams, by enumeration.
  std::uint64_t count_classes(std::size_t n,
                              std::size_t limit = kDefaultEnumerationLimit - 1);

  // Number of corank-2 diagrams with left bracket `from` and right bracket
  // `to`, by enumeration.
  std::uint64_t count_paths(std::size_t n,
                            LabelPair   from,
                            LabelPair   to,
                            std::size_t limit = kDefaultEnumerationLimit - 1);

  // Vertices are the 2-subsets of {1..n} in colex order; edges join
  // intersecting subsets.
  class GammaGraph {
   public:
    explicit GammaGraph(std::size_t n);

    std::size_t rank() const noexcept {
      return _n;
    }
    std::size_t vertex_count() const noexcept {
      return _vertices.size();
    }
    std::size_t edge_count() const noexcept;

    LabelPair const& vertex(std::size_t v) const {
      return _vertices.at(v);
    }
    // Colex rank of {i, j}.
    std::size_t index_of(LabelPair p) const;

    std::vector<std::size_t> const& neighbours(std::size_t v) const {
      return _adjacency.at(v);
    }
    std::size_t degree(std::size_t v) const {
      return neighbours(v).size();
    }
    bool adjacent(std::size_t v, std::size_t w) const;

    // A walk given by vertex indices; throws unless consecutive vertices
    // are adjacent.
    ConnectedSequence path_to_sequence(std::vector<std::size_t> const& path) const;
    std::vector<std::size_t> sequence_to_path(ConnectedSequence const& s) const;

    // Graphviz text.
    std::string to_dot() const;

   private:
    std::size_t                           _n;
    std::vector<LabelPair>                _vertices;
    std::vector<std::vector<std::size_t>> _adjacency;
  };

  GammaGraph gamma_graph(std::size_t n);

}  // namespace brauer

#endif  // BRAUER_SEQUENCES_HPP_
