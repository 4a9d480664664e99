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

// Minimal atom-word lengths on the singular part of the Brauer monoid.

#ifndef BRAUER_GEODESICS_HPP_
#define BRAUER_GEODESICS_HPP_

#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "brauer/decomposition.hpp"
#include "brauer/diagram.hpp"
#include "brauer/kernels.hpp"
#include "brauer/presentation.hpp"

namespace brauer {

  inline constexpr std::size_t kDefaultGeodesicLimit = 7;

  // floor(3n/2) - 2
  constexpr std::size_t max_length_formula(std::size_t n) noexcept {
    return 3 * n / 2 - 2;
  }

  class GeodesicTable {
   public:
    static constexpr int format_version = 1;

    explicit GeodesicTable(ClosureTable table) : _table(std::move(table)) {}

    std::size_t rank() const noexcept {
      return _table.rank();
    }

    // Undefined (nullopt) for invertible diagrams.
    std::optional<std::size_t> length(BrauerDiagram const& d) const {
      return _table.length(d);
    }

    std::size_t size() const noexcept {
      return _table.size();
    }

    std::size_t max_length() const noexcept {
      return _table.max_length();
    }

    // Among diagrams of maximal length, the one with the lexicographically
    // smallest text form.
    BrauerDiagram witness() const;

    ClosureTable const& closure() const noexcept {
      return _table;
    }

    // Text cache: a header line, then "<diagram>\t<length>" sorted by the
    // diagram text.
    void save(std::filesystem::path const& file) const;

    // nullopt if the file is missing, has another version or rank, or is
    // incomplete.
    static std::optional<GeodesicTable> load(std::filesystem::path const& file,
                                             std::size_t                  n);

    friend bool operator==(GeodesicTable const&, GeodesicTable const&) = default;

   private:
    ClosureTable _table;
  };

  // Multi-source BFS from the atoms.
  GeodesicTable bfs_lengths(std::size_t n,
                            std::size_t limit = kDefaultGeodesicLimit,
                            Side        side  = Side::right);

  // Reads the table from cache_dir if present and valid, otherwise
  // computes and writes it there. An empty cache_dir disables caching.
  GeodesicTable cached_bfs_lengths(std::size_t                  n,
                                   std::filesystem::path const& cache_dir,
                                   std::size_t limit = kDefaultGeodesicLimit);

  std::filesystem::path cache_file(std::filesystem::path const& cache_dir,
                                   std::size_t                  n);

  struct LongestElement {
    std::size_t   length;
    BrauerDiagram witness;
  };

  LongestElement max_length(std::size_t n,
                            std::size_t limit = kDefaultGeodesicLimit);

  // Cyclic decomposition of an element of the H-class of sigma_{1,2}.
  struct CyclicDecomposition {
    std::size_t             n;
    LabelPair               base{1, 2};
    std::vector<LabelCycle> cycles;
    // Fixed points of the induced permutation on {3, ..., n}.
    std::size_t trivial_count;

    std::size_t nontrivial_count() const noexcept {
      return cycles.size();
    }

    // t_12, then per cycle t_{1,x_1} ... t_{1,x_p} t_12.
    Word word() const;

    // (n - 2) - s + c + 1, or 1 when there are no cycles.
    std::size_t word_length() const noexcept;
  };

  CyclicDecomposition cyclic_decomposition(BrauerDiagram const& pi);

  std::size_t ls_via_cycles(BrauerDiagram const& pi);

}  // namespace brauer

#endif  // BRAUER_GEODESICS_HPP_
