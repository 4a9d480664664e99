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

#include "brauer/geodesics.hpp"

#include <algorithm>  // for sort
#include <fstream>    // for ifstream, ofstream
#include <sstream>    // for ostringstream
#include <utility>    // for pair

#include "brauer/errors.hpp"

namespace brauer {

  namespace {
    std::string cache_header(std::size_t n) {
      return "# brauer geodesic table format="
             + std::to_string(GeodesicTable::format_version)
             + " n=" + std::to_string(n);
    }

    std::uint64_t factorial(std::size_t n) {
      std::uint64_t f = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        f *= k;
      }
      return f;
    }
  }  // namespace

  BrauerDiagram GeodesicTable::witness() const {
    std::size_t const          best = max_length();
    std::optional<std::string> text;
    auto const&                raw = _table.raw();
    for (std::size_t r = 0; r < raw.size(); ++r) {
      if (raw[r] != ClosureTable::unreachable && raw[r] == best) {
        auto s = to_string(diagram_unrank(rank(), r));
        if (!text || s < *text) {
          text = std::move(s);
        }
      }
    }
    if (!text) {
      throw domain_error("empty geodesic table");
    }
    return parse_diagram(*text);
  }

  void GeodesicTable::save(std::filesystem::path const& file) const {
    std::vector<std::pair<std::string, unsigned>> rows;
    auto const&                                   raw = _table.raw();
    for (std::size_t r = 0; r < raw.size(); ++r) {
      if (raw[r] != ClosureTable::unreachable) {
        rows.emplace_back(to_string(diagram_unrank(rank(), r)), raw[r]);
      }
    }
    std::sort(rows.begin(), rows.end());
    auto tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) {
        throw std::runtime_error("cannot write " + tmp.string());
      }
      out << cache_header(rank()) << '\n';
      for (auto const& [text, len] : rows) {
        out << text << '\t' << len << '\n';
      }
    }
    std::filesystem::rename(tmp, file);
  }

  std::optional<GeodesicTable>
  GeodesicTable::load(std::filesystem::path const& file, std::size_t n) {
    std::ifstream in(file);
    if (!in) {
      return std::nullopt;
    }
    std::string line;
    if (!std::getline(in, line) || line != cache_header(n)) {
      return std::nullopt;
    }
    std::vector<std::uint8_t> lengths(
        static_cast<std::size_t>(number_of_diagrams(n)),
        ClosureTable::unreachable);
    std::uint64_t rows = 0;
    try {
      while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
          return std::nullopt;
        }
        auto d = parse_diagram(std::string_view(line).substr(0, tab));
        if (d.rank() != n) {
          return std::nullopt;
        }
        lengths[diagram_rank(d)]
            = static_cast<std::uint8_t>(std::stoul(line.substr(tab + 1)));
        ++rows;
      }
    } catch (std::exception const&) {
      return std::nullopt;
    }
    if (rows != number_of_diagrams(n) - factorial(n)) {
      return std::nullopt;
    }
    return GeodesicTable(ClosureTable(n, std::move(lengths)));
  }

  GeodesicTable bfs_lengths(std::size_t n, std::size_t limit, Side side) {
    if (n < 2) {
      throw domain_error("lengths need n >= 2");
    }
    auto const atoms = all_atoms(n);
    return GeodesicTable(parallel::closure(n, atoms, side, limit));
  }

  std::filesystem::path cache_file(std::filesystem::path const& cache_dir,
                                   std::size_t                  n) {
    return cache_dir
           / ("geodesics-n" + std::to_string(n) + "-v"
              + std::to_string(GeodesicTable::format_version) + ".tsv");
  }

  GeodesicTable cached_bfs_lengths(std::size_t                  n,
                                   std::filesystem::path const& cache_dir,
                                   std::size_t                  limit) {
    if (cache_dir.empty()) {
      return bfs_lengths(n, limit);
    }
    auto const file = cache_file(cache_dir, n);
    if (auto cached = GeodesicTable::load(file, n)) {
      return std::move(*cached);
    }
    auto table = bfs_lengths(n, limit);
    std::filesystem::create_directories(cache_dir);
    table.save(file);
    return table;
  }

  LongestElement max_length(std::size_t n, std::size_t limit) {
    auto const table = bfs_lengths(n, limit);
    return {table.max_length(), table.witness()};
  }

  Word CyclicDecomposition::word() const {
    std::vector<Quark> q{quark(base.first, base.second)};
    for (auto const& c : cycles) {
      for (auto x : c) {
        q.push_back(quark(base.first, x));
      }
      q.push_back(quark(base.first, base.second));
    }
    return Word(n, std::move(q));
  }

  std::size_t CyclicDecomposition::word_length() const noexcept {
    if (cycles.empty()) {
      return 1;
    }
    return (n - 2) - trivial_count + nontrivial_count() + 1;
  }

  CyclicDecomposition cyclic_decomposition(BrauerDiagram const& pi) {
    if (pi.rank() < 2 || corank(pi) != 2
        || left_brackets(pi).front() != LabelPair{1, 2}
        || right_brackets(pi).front() != LabelPair{1, 2}) {
      throw domain_error("cyclic decomposition needs an element of the "
                         "H-class of sigma_{1,2}, found "
                         + to_string(pi));
    }
    auto        cycles = bracket_cycles(pi);
    std::size_t moved  = 0;
    for (auto const& c : cycles) {
      moved += c.size();
    }
    return CyclicDecomposition{
        pi.rank(), {1, 2}, std::move(cycles), pi.rank() - 2 - moved};
  }

  std::size_t ls_via_cycles(BrauerDiagram const& pi) {
    return cyclic_decomposition(pi).word_length();
  }

}  // namespace brauer
