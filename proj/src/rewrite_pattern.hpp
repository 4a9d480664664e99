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

// Shared machinery for rewrite rules whose sides are sequences of label
// pairs over up to four variables. Used by the quark relations and by the
// connected-sequence operations.

#ifndef BRAUER_SRC_REWRITE_PATTERN_HPP_
#define BRAUER_SRC_REWRITE_PATTERN_HPP_

#include <algorithm>  // for sort, unique
#include <array>      // for array
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t
#include <utility>    // for pair
#include <vector>     // for vector

#include "brauer/presentation.hpp"

namespace brauer::detail {

  using Binding = std::array<std::size_t, 4>;

  struct PairTemplate {
    std::uint8_t a;
    std::uint8_t b;
  };

  using Side = std::vector<PairTemplate>;

  struct RewriteRule {
    Side        lhs;
    Side        rhs;
    std::size_t arity;
    // Every variable distinct from every other; otherwise only the two
    // variables of each pair, plus `extra_distinct`.
    bool                                                 all_distinct;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> extra_distinct = {};
  };

  inline bool admissible(RewriteRule const& rule,
                         Binding const&     b,
                         std::size_t        n) {
    for (std::size_t v = 0; v < rule.arity; ++v) {
      if (b[v] == 0 || b[v] > n) {
        return false;
      }
    }
    if (rule.all_distinct) {
      for (std::size_t v = 0; v < rule.arity; ++v) {
        for (std::size_t w = v + 1; w < rule.arity; ++w) {
          if (b[v] == b[w]) {
            return false;
          }
        }
      }
      return true;
    }
    for (auto const* side : {&rule.lhs, &rule.rhs}) {
      for (auto const& t : *side) {
        if (b[t.a] == b[t.b]) {
          return false;
        }
      }
    }
    for (auto const& [v, w] : rule.extra_distinct) {
      if (b[v] == b[w]) {
        return false;
      }
    }
    return true;
  }

  inline Quark instantiate(PairTemplate t, Binding const& b) {
    return quark(b[t.a], b[t.b]);
  }

  inline std::vector<Quark> instantiate(Side const& side, Binding const& b) {
    std::vector<Quark> out;
    out.reserve(side.size());
    for (auto t : side) {
      out.push_back(instantiate(t, b));
    }
    return out;
  }

  inline bool matches(std::vector<Quark> const& quarks,
                      std::size_t               pos,
                      Side const&               side,
                      Binding const&            b) {
    if (pos + side.size() > quarks.size()) {
      return false;
    }
    for (std::size_t off = 0; off < side.size(); ++off) {
      if (quarks[pos + off] != instantiate(side[off], b)) {
        return false;
      }
    }
    return true;
  }

  namespace impl {
    inline void bind_from(std::vector<Quark> const& quarks,
                          std::size_t               pos,
                          Side const&               side,
                          std::size_t               off,
                          Binding&                  b,
                          std::vector<Binding>&     out) {
      if (off == side.size()) {
        out.push_back(b);
        return;
      }
      Quark const&       q = quarks[pos + off];
      PairTemplate const t = side[off];
      for (auto [x, y] : {std::pair<std::size_t, std::size_t>{q.i, q.j},
                          std::pair<std::size_t, std::size_t>{q.j, q.i}}) {
        if ((b[t.a] != 0 && b[t.a] != x) || (b[t.b] != 0 && b[t.b] != y)) {
          continue;
        }
        Binding saved = b;
        b[t.a]        = x;
        b[t.b]        = y;
        bind_from(quarks, pos, side, off + 1, b, out);
        b = saved;
      }
    }

    inline void fill_free(RewriteRule const&    rule,
                          std::size_t           n,
                          Binding&              b,
                          std::size_t           v,
                          std::vector<Binding>& out) {
      if (v == rule.arity) {
        if (admissible(rule, b, n)) {
          out.push_back(b);
        }
        return;
      }
      if (b[v] != 0) {
        fill_free(rule, n, b, v + 1, out);
        return;
      }
      for (std::size_t x = 1; x <= n; ++x) {
        b[v] = x;
        fill_free(rule, n, b, v + 1, out);
      }
      b[v] = 0;
    }
  }  // namespace impl

  // All admissible bindings under which `side` of `rule` occurs at `pos`.
  // Variables absent from `side` range over [1, n].
  inline std::vector<Binding> bindings_at(std::vector<Quark> const& quarks,
                                          std::size_t               pos,
                                          RewriteRule const&        rule,
                                          Side const&               side,
                                          std::size_t               n) {
    std::vector<Binding> partial, out;
    if (pos + side.size() > quarks.size()) {
      return out;
    }
    Binding b{};
    impl::bind_from(quarks, pos, side, 0, b, partial);
    for (auto& p : partial) {
      impl::fill_free(rule, n, p, 0, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Replaces `from` at `pos` by `to`.
  inline std::vector<Quark> rewrite(std::vector<Quark> const& quarks,
                                    std::size_t               pos,
                                    Side const&               from,
                                    Side const&               to,
                                    Binding const&            b) {
    std::vector<Quark> out(quarks.begin(),
                           quarks.begin() + static_cast<std::ptrdiff_t>(pos));
    auto mid = instantiate(to, b);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(),
               quarks.begin() + static_cast<std::ptrdiff_t>(pos + from.size()),
               quarks.end());
    return out;
  }

}  // namespace brauer::detail

#endif  // BRAUER_SRC_REWRITE_PATTERN_HPP_
