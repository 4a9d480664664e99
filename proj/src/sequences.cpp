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

#include "brauer/sequences.hpp"

#include <algorithm>  // for find
#include <sstream>    // for ostringstream

#include "brauer/errors.hpp"
#include "brauer/kernels.hpp"
#include "rewrite_pattern.hpp"

namespace brauer {

  using detail::RewriteRule;

  ConnectedSequence::ConnectedSequence(std::size_t n, std::vector<Quark> items)
      : _n(n), _items(std::move(items)) {
    // Word validates rank, range and nonemptiness.
    Word check(_n, _items);
    if (!is_connected(_items)) {
      throw domain_error("sequence " + quarks_to_string(_items)
                         + " is not connected");
    }
  }

  ConnectedSequence parse_sequence(std::size_t n, std::string_view text) {
    return ConnectedSequence(n, parse_quarks(n, text));
  }

  std::string to_string(ConnectedSequence const& s) {
    return quarks_to_string(s.items());
  }

  BrauerDiagram seq_canonical(ConnectedSequence const& s) {
    return phi(s.as_word());
  }

  bool seq_equivalent(ConnectedSequence const& a, ConnectedSequence const& b) {
    if (a.rank() != b.rank()) {
      throw domain_error("sequences of different ranks");
    }
    return seq_canonical(a) == seq_canonical(b);
  }

  namespace {
    constexpr std::uint8_t I = 0, J = 1, K = 2, L = 3;

    RewriteRule const& rule(SequenceOp op) {
      static std::array<RewriteRule, 4> const rules = {{
          {{{I, J}, {I, J}}, {{I, J}}, 2, false},
          {{{I, J}, {J, K}, {K, L}}, {{I, J}, {I, L}, {K, L}}, 4, false, {{I, L}}},
          {{{I, J}, {J, K}, {K, I}}, {{I, J}, {K, I}}, 3, false},
          {{{I, J}, {J, K}, {I, J}}, {{I, J}}, 3, false},
      }};
      return rules[static_cast<std::size_t>(op) - 1];
    }
  }  // namespace

  ConnectedSequence apply_sequence_op(ConnectedSequence const& s,
                                      SequenceOpSite const&    site) {
    RewriteRule const& r = rule(site.op);
    if (!detail::admissible(r, site.binding, s.rank())) {
      throw domain_error("inadmissible binding for sequence operation");
    }
    bool const  fwd  = site.direction == Direction::forward;
    auto const& from = fwd ? r.lhs : r.rhs;
    auto const& to   = fwd ? r.rhs : r.lhs;
    if (!detail::matches(s.items(), site.position, from, site.binding)) {
      throw domain_error("sequence operation does not match at position "
                         + std::to_string(site.position));
    }
    return ConnectedSequence(
        s.rank(),
        detail::rewrite(s.items(), site.position, from, to, site.binding));
  }

  std::vector<SequenceOpSite> sequence_op_sites(ConnectedSequence const& s) {
    std::vector<SequenceOpSite> out;
    for (auto op : {SequenceOp::I, SequenceOp::II, SequenceOp::III,
                    SequenceOp::IV}) {
      RewriteRule const& r = rule(op);
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        for (auto dir : {Direction::forward, Direction::backward}) {
          auto const& side = dir == Direction::forward ? r.lhs : r.rhs;
          for (auto const& b :
               detail::bindings_at(s.items(), pos, r, side, s.rank())) {
            out.push_back({op, pos, dir, b});
          }
        }
      }
    }
    return out;
  }

  std::uint64_t count_classes_formula(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
      f *= k;
    }
    return n * (n - 1) * f / 4;
  }

  std::uint64_t count_paths_formula(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k + 2 <= n; ++k) {
      f *= k;
    }
    return f;
  }

  std::uint64_t count_classes(std::size_t n, std::size_t limit) {
    if (n < 2) {
      throw domain_error("connected sequences need n >= 2");
    }
    return parallel::count_if(
        n, [](BrauerDiagram const& d) { return corank(d) == 2; }, limit);
  }

  std::uint64_t count_paths(std::size_t n,
                            LabelPair   from,
                            LabelPair   to,
                            std::size_t limit) {
    if (n < 2) {
      throw domain_error("connected sequences need n >= 2");
    }
    Quark const f = quark(from.first, from.second);
    Quark const t = quark(to.first, to.second);
    if (f.j > n || t.j > n) {
      throw domain_error("pair label exceeds n");
    }
    LabelPair const lf{f.i, f.j}, lt{t.i, t.j};
    return parallel::count_if(
        n,
        [&](BrauerDiagram const& d) {
          return corank(d) == 2 && left_brackets(d).front() == lf
                 && right_brackets(d).front() == lt;
        },
        limit);
  }

  GammaGraph::GammaGraph(std::size_t n) : _n(n) {
    if (n < 2 || n > kMaxRank) {
      throw domain_error("graph rank must be in [2, "
                         + std::to_string(kMaxRank) + "]");
    }
    for (std::size_t j = 2; j <= n; ++j) {
      for (std::size_t i = 1; i < j; ++i) {
        _vertices.emplace_back(i, j);
      }
    }
    _adjacency.resize(_vertices.size());
    for (std::size_t v = 0; v < _vertices.size(); ++v) {
      for (std::size_t w = 0; w < _vertices.size(); ++w) {
        auto const [a, b] = _vertices[v];
        auto const [c, d] = _vertices[w];
        if (v != w && (a == c || a == d || b == c || b == d)) {
          _adjacency[v].push_back(w);
        }
      }
    }
  }

  std::size_t GammaGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (auto const& nb : _adjacency) {
      total += nb.size();
    }
    return total / 2;
  }

  std::size_t GammaGraph::index_of(LabelPair p) const {
    Quark const q = quark(p.first, p.second);
    if (q.j > _n) {
      throw domain_error("pair label exceeds n");
    }
    return (q.j - 1) * (q.j - 2) / 2 + (q.i - 1);
  }

  bool GammaGraph::adjacent(std::size_t v, std::size_t w) const {
    auto const& nb = neighbours(v);
    return std::find(nb.begin(), nb.end(), w) != nb.end();
  }

  ConnectedSequence
  GammaGraph::path_to_sequence(std::vector<std::size_t> const& path) const {
    if (path.empty()) {
      throw domain_error("empty path");
    }
    std::vector<Quark> items;
    for (std::size_t s = 0; s < path.size(); ++s) {
      // Consecutive repeats are allowed: a connected sequence may repeat a
      // pair, which in the graph is the trivial step.
      if (s > 0 && path[s] != path[s - 1] && !adjacent(path[s - 1], path[s])) {
        throw domain_error("path uses a non-edge");
      }
      auto const [i, j] = vertex(path[s]);
      items.push_back(quark(i, j));
    }
    return ConnectedSequence(_n, std::move(items));
  }

  std::vector<std::size_t>
  GammaGraph::sequence_to_path(ConnectedSequence const& s) const {
    if (s.rank() != _n) {
      throw domain_error("sequence rank does not match graph");
    }
    std::vector<std::size_t> out;
    for (auto const& q : s.items()) {
      out.push_back(index_of({q.i, q.j}));
    }
    return out;
  }

  std::string GammaGraph::to_dot() const {
    std::ostringstream os;
    os << "graph Gamma" << _n << " {\n";
    for (auto const& [i, j] : _vertices) {
      os << "  \"" << i << ',' << j << "\";\n";
    }
    for (std::size_t v = 0; v < _vertices.size(); ++v) {
      for (auto w : _adjacency[v]) {
        if (v < w) {
          os << "  \"" << _vertices[v].first << ',' << _vertices[v].second
             << "\" -- \"" << _vertices[w].first << ',' << _vertices[w].second
             << "\";\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

  GammaGraph gamma_graph(std::size_t n) {
    return GammaGraph(n);
  }

}  // namespace brauer
