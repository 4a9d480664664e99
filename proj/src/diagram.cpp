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

#include "brauer/diagram.hpp"

#include <algorithm>  // for sort, find
#include <cctype>     // for isdigit, isspace
#include <sstream>    // for ostringstream

#include "brauer/errors.hpp"

namespace brauer {

  namespace {
    constexpr point_index kUnmatched = 0xFF;

    void check_rank(std::size_t n) {
      if (n == 0 || n > kMaxRank) {
        throw domain_error("rank must be in [1, " + std::to_string(kMaxRank)
                           + "], found " + std::to_string(n));
      }
    }

    point_index to_index(std::size_t n, Point p) {
      if (p.label == 0 || p.label > n) {
        throw domain_error("point " + std::to_string(p.label)
                           + (p.primed ? "'" : "") + " out of range for n = "
                           + std::to_string(n));
      }
      return static_cast<point_index>(p.primed ? n + p.label - 1
                                               : p.label - 1);
    }

    Point to_point(std::size_t n, point_index p) {
      return p < n ? unprimed(p + 1) : primed(p - n + 1);
    }

    std::string point_string(Point p) {
      return std::to_string(p.label) + (p.primed ? "'" : "");
    }
  }  // namespace

  BrauerDiagram make_unchecked(std::size_t                  n,
                               std::span<point_index const> partner) {
    BrauerDiagram d;
    d._n = static_cast<std::uint8_t>(n);
    std::copy(partner.begin(), partner.end(), d._partner.begin());
    return d;
  }

  BrauerDiagram BrauerDiagram::from_partners(std::size_t n,
                                             std::span<point_index const> p) {
    check_rank(n);
    if (p.size() != 2 * n) {
      throw domain_error("partner table must have length 2n");
    }
    for (std::size_t x = 0; x < 2 * n; ++x) {
      if (p[x] >= 2 * n || p[x] == x || p[p[x]] != x) {
        throw domain_error("partner table is not a perfect matching");
      }
    }
    return make_unchecked(n, p);
  }

  std::vector<Block> BrauerDiagram::blocks() const {
    std::vector<Block> left, line, right;
    for (point_index x = 0; x < 2 * _n; ++x) {
      point_index y = _partner[x];
      if (x > y) {
        continue;
      }
      Block b{to_point(_n, x), to_point(_n, y)};
      if (y < _n) {
        left.push_back(b);
      } else if (x >= _n) {
        right.push_back(b);
      } else {
        line.push_back(b);
      }
    }
    // Scanning x upward already yields each group sorted by smaller point.
    left.insert(left.end(), line.begin(), line.end());
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }

  BrauerDiagram make_diagram(std::size_t n, std::span<Block const> blocks) {
    check_rank(n);
    if (blocks.size() != n) {
      throw domain_error("expected " + std::to_string(n) + " blocks, found "
                         + std::to_string(blocks.size()));
    }
    std::array<point_index, 2 * kMaxRank> partner;
    partner.fill(kUnmatched);
    for (auto const& [p, q] : blocks) {
      point_index x = to_index(n, p), y = to_index(n, q);
      if (x == y) {
        throw domain_error("block {" + point_string(p) + "," + point_string(q)
                           + "} repeats a point");
      }
      for (auto z : {x, y}) {
        if (partner[z] != kUnmatched) {
          throw domain_error("point " + point_string(to_point(n, z))
                             + " appears in more than one block");
        }
      }
      partner[x] = y;
      partner[y] = x;
    }
    // n blocks of two distinct unused points cover all 2n points.
    return make_unchecked(n, {partner.data(), 2 * n});
  }

  BrauerDiagram make_diagram(std::size_t n, std::vector<Block> const& blocks) {
    return make_diagram(n, std::span<Block const>(blocks));
  }

  BrauerDiagram identity(std::size_t n) {
    check_rank(n);
    std::array<point_index, 2 * kMaxRank> partner;
    for (std::size_t k = 0; k < n; ++k) {
      partner[k]     = static_cast<point_index>(n + k);
      partner[n + k] = static_cast<point_index>(k);
    }
    return make_unchecked(n, {partner.data(), 2 * n});
  }

  BrauerDiagram atom(std::size_t n, std::size_t i, std::size_t j) {
    check_rank(n);
    if (i == j || i == 0 || j == 0 || i > n || j > n) {
      throw domain_error("atom needs distinct labels in [1, n], found "
                         + std::to_string(i) + "," + std::to_string(j));
    }
    std::array<point_index, 2 * kMaxRank> partner;
    for (std::size_t k = 0; k < n; ++k) {
      partner[k]     = static_cast<point_index>(n + k);
      partner[n + k] = static_cast<point_index>(k);
    }
    auto a = static_cast<point_index>(i - 1), b = static_cast<point_index>(j - 1);
    partner[a]     = b;
    partner[b]     = a;
    partner[n + a] = static_cast<point_index>(n + b);
    partner[n + b] = static_cast<point_index>(n + a);
    return make_unchecked(n, {partner.data(), 2 * n});
  }

  BrauerDiagram from_permutation(std::span<std::size_t const> perm) {
    std::size_t n = perm.size();
    check_rank(n);
    std::array<bool, kMaxRank> hit{};
    for (auto v : perm) {
      if (v == 0 || v > n || hit[v - 1]) {
        throw domain_error("not a permutation of {1, ..., n}");
      }
      hit[v - 1] = true;
    }
    std::array<point_index, 2 * kMaxRank> partner;
    for (std::size_t k = 0; k < n; ++k) {
      auto image             = static_cast<point_index>(n + perm[k] - 1);
      partner[k]             = image;
      partner[image]         = static_cast<point_index>(k);
    }
    return make_unchecked(n, {partner.data(), 2 * n});
  }

  BrauerDiagram from_permutation(std::vector<std::size_t> const& perm) {
    return from_permutation(std::span<std::size_t const>(perm));
  }

  Product multiply_with_loops(BrauerDiagram const& a, BrauerDiagram const& b) {
    std::size_t const n = a.rank();
    if (b.rank() != n) {
      throw domain_error("cannot multiply diagrams of ranks "
                         + std::to_string(n) + " and "
                         + std::to_string(b.rank()));
    }
    // Result points: unprimed come from a, primed from b. Middle point m is
    // a's m' glued to b's m.
    std::array<point_index, 2 * kMaxRank> result;
    std::array<bool, kMaxRank>            seen{};

    // Enters the middle layer at m heading into b or into a and follows the
    // chain until it leaves through an outer point.
    auto follow = [&](point_index m, bool into_b) -> point_index {
      while (true) {
        seen[m] = true;
        if (into_b) {
          point_index q = b.partner(m);
          if (q >= n) {
            return q;
          }
          m      = q;
          into_b = false;
        } else {
          point_index q = a.partner(static_cast<point_index>(n + m));
          if (q < n) {
            return q;
          }
          m      = static_cast<point_index>(q - n);
          into_b = true;
        }
      }
    };

    result.fill(kUnmatched);
    for (point_index x = 0; x < n; ++x) {
      if (result[x] != kUnmatched) {
        continue;
      }
      point_index y = a.partner(x);
      // `end` is an unprimed point of a or a primed point of b; both
      // already use result indexing.
      point_index end
          = y < n ? y : follow(static_cast<point_index>(y - n), true);
      result[x]   = end;
      result[end] = x;
    }
    for (point_index x = static_cast<point_index>(n); x < 2 * n; ++x) {
      if (result[x] != kUnmatched) {
        continue;
      }
      point_index y   = b.partner(x);
      point_index end = y >= n ? y : follow(y, false);
      result[x]       = end;
      result[end]     = x;
    }

    std::size_t loops = 0;
    for (point_index m = 0; m < n; ++m) {
      if (seen[m]) {
        continue;
      }
      ++loops;
      point_index cur = m;
      do {
        point_index mid = b.partner(cur);
        seen[cur]       = true;
        seen[mid]       = true;
        cur             = static_cast<point_index>(
            a.partner(static_cast<point_index>(n + mid)) - n);
      } while (cur != m);
    }
    return {make_unchecked(n, {result.data(), 2 * n}), loops};
  }

  BrauerDiagram multiply(BrauerDiagram const& a, BrauerDiagram const& b) {
    return multiply_with_loops(a, b).diagram;
  }

  BrauerDiagram operator*(BrauerDiagram const& a, BrauerDiagram const& b) {
    return multiply(a, b);
  }

  BrauerDiagram transpose(BrauerDiagram const& d) {
    std::size_t const n = d.rank();
    auto flip = [n](point_index p) {
      return static_cast<point_index>(p < n ? p + n : p - n);
    };
    std::array<point_index, 2 * kMaxRank> partner;
    for (point_index x = 0; x < 2 * n; ++x) {
      partner[x] = flip(d.partner(flip(x)));
    }
    return make_unchecked(n, {partner.data(), 2 * n});
  }

  std::size_t corank(BrauerDiagram const& d) noexcept {
    std::size_t count = 0;
    for (point_index x = 0; x < d.rank(); ++x) {
      count += d.partner(x) < d.rank();
    }
    return count;  // each left bracket counted from both ends
  }

  std::vector<LabelPair> left_brackets(BrauerDiagram const& d) {
    std::vector<LabelPair> out;
    for (point_index x = 0; x < d.rank(); ++x) {
      point_index y = d.partner(x);
      if (y < d.rank() && x < y) {
        out.emplace_back(x + 1, y + 1);
      }
    }
    return out;
  }

  std::vector<LabelPair> right_brackets(BrauerDiagram const& d) {
    std::size_t const      n = d.rank();
    std::vector<LabelPair> out;
    for (point_index x = static_cast<point_index>(n); x < 2 * n; ++x) {
      point_index y = d.partner(x);
      if (y >= n && x < y) {
        out.emplace_back(x - n + 1, y - n + 1);
      }
    }
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  lines(BrauerDiagram const& d) {
    std::size_t const                                n = d.rank();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (point_index x = 0; x < n; ++x) {
      point_index y = d.partner(x);
      if (y >= n) {
        out.emplace_back(x + 1, y - n + 1);
      }
    }
    return out;
  }

  bool green_related(BrauerDiagram const& a,
                     BrauerDiagram const& b,
                     GreenRelation        rel) {
    std::size_t const n = a.rank();
    if (b.rank() != n) {
      throw domain_error("cannot compare diagrams of different ranks");
    }
    // Same brackets among the points [lo, lo + n).
    auto same_brackets = [&](std::size_t lo) {
      for (std::size_t x = lo; x < lo + n; ++x) {
        bool in_a = a.partner(x) >= lo && a.partner(x) < lo + n;
        bool in_b = b.partner(x) >= lo && b.partner(x) < lo + n;
        if (in_a != in_b || (in_a && a.partner(x) != b.partner(x))) {
          return false;
        }
      }
      return true;
    };
    switch (rel) {
      case GreenRelation::R:
        return same_brackets(0);
      case GreenRelation::L:
        return same_brackets(n);
      case GreenRelation::H:
        return same_brackets(0) && same_brackets(n);
      case GreenRelation::D:
        return corank(a) == corank(b);
    }
    return false;
  }

  std::string to_string(BrauerDiagram const& d) {
    std::ostringstream os;
    os << "n=" << d.rank() << ';';
    for (auto const& [p, q] : d.blocks()) {
      os << '{' << point_string(p) << ',' << point_string(q) << '}';
    }
    return os.str();
  }

  namespace {
    class Scanner {
     public:
      explicit Scanner(std::string_view s) : _s(s) {}

      void skip_space() {
        while (_pos < _s.size()
               && std::isspace(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _s.size() && _s[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      std::size_t number() {
        skip_space();
        std::size_t start = _pos, value = 0;
        while (_pos < _s.size()
               && std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
          value = value * 10 + static_cast<std::size_t>(_s[_pos] - '0');
          if (value > 1'000'000) {
            fail("number too large");
          }
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a number");
        }
        return value;
      }

      bool at_end() {
        skip_space();
        return _pos == _s.size();
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw domain_error("cannot parse \"" + std::string(_s) + "\" at offset "
                           + std::to_string(_pos) + ": " + what);
      }

     private:
      std::string_view _s;
      std::size_t      _pos = 0;
    };
  }  // namespace

  BrauerDiagram parse_diagram(std::string_view text) {
    Scanner sc(text);
    sc.expect('n');
    sc.expect('=');
    std::size_t n = sc.number();
    sc.expect(';');
    std::vector<Block> blocks;
    while (!sc.at_end()) {
      sc.expect('{');
      std::size_t p = sc.number();
      bool        p_primed = sc.accept('\'');
      sc.expect(',');
      std::size_t q = sc.number();
      bool        q_primed = sc.accept('\'');
      sc.expect('}');
      blocks.push_back({Point{p, p_primed}, Point{q, q_primed}});
    }
    return make_diagram(n, blocks);
  }

  std::uint64_t number_of_diagrams(std::size_t n) {
    std::uint64_t result = 1;
    for (std::uint64_t k = 2 * n - 1; k > 1; k -= 2) {
      result *= k;
    }
    return result;
  }

  std::uint64_t diagram_rank(BrauerDiagram const& d) noexcept {
    std::size_t const n = d.rank();
    // Unmatched points in increasing order.
    std::array<point_index, 2 * kMaxRank> free;
    std::size_t                           nr_free = 2 * n;
    for (std::size_t x = 0; x < nr_free; ++x) {
      free[x] = static_cast<point_index>(x);
    }
    std::uint64_t r = 0;
    while (nr_free > 0) {
      point_index p = free[0];
      point_index q = d.partner(p);
      std::size_t pos
          = static_cast<std::size_t>(std::find(free.begin() + 1,
                                               free.begin() + nr_free, q)
                                     - free.begin());
      r = r * (nr_free - 1) + (pos - 1);
      std::copy(free.begin() + 1, free.begin() + pos, free.begin());
      std::copy(free.begin() + pos + 1,
                free.begin() + nr_free,
                free.begin() + pos - 1);
      nr_free -= 2;
    }
    return r;
  }

  BrauerDiagram diagram_unrank(std::size_t n, std::uint64_t r) {
    check_rank(n);
    if (r >= number_of_diagrams(n)) {
      throw domain_error("diagram rank out of range");
    }
    std::array<std::size_t, kMaxRank> digit;
    for (std::size_t step = n; step-- > 0;) {
      std::uint64_t radix = 2 * (n - step) - 1;
      digit[step]         = static_cast<std::size_t>(r % radix);
      r /= radix;
    }
    std::array<point_index, 2 * kMaxRank> free;
    std::size_t                           nr_free = 2 * n;
    for (std::size_t x = 0; x < nr_free; ++x) {
      free[x] = static_cast<point_index>(x);
    }
    std::array<point_index, 2 * kMaxRank> partner;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pos = digit[step] + 1;
      point_index p = free[0], q = free[pos];
      partner[p] = q;
      partner[q] = p;
      std::copy(free.begin() + 1, free.begin() + pos, free.begin());
      std::copy(free.begin() + pos + 1,
                free.begin() + nr_free,
                free.begin() + pos - 1);
      nr_free -= 2;
    }
    return make_unchecked(n, {partner.data(), 2 * n});
  }

  namespace {
    void enumerate_from(std::size_t                                n,
                        std::array<point_index, 2 * kMaxRank>&     partner,
                        std::size_t                                first,
                        std::function<void(BrauerDiagram const&)> const& visit) {
      while (first < 2 * n && partner[first] != kUnmatched) {
        ++first;
      }
      if (first == 2 * n) {
        visit(make_unchecked(n, {partner.data(), 2 * n}));
        return;
      }
      for (std::size_t q = first + 1; q < 2 * n; ++q) {
        if (partner[q] != kUnmatched) {
          continue;
        }
        partner[first] = static_cast<point_index>(q);
        partner[q]     = static_cast<point_index>(first);
        enumerate_from(n, partner, first + 1, visit);
        partner[first] = kUnmatched;
        partner[q]     = kUnmatched;
      }
    }
  }  // namespace

  void for_each_diagram(std::size_t                                      n,
                        std::function<void(BrauerDiagram const&)> const& visit,
                        std::size_t limit) {
    check_rank(n);
    if (n > limit) {
      throw limit_error("enumeration of rank " + std::to_string(n)
                        + " exceeds the limit " + std::to_string(limit));
    }
    std::array<point_index, 2 * kMaxRank> partner;
    partner.fill(kUnmatched);
    enumerate_from(n, partner, 0, visit);
  }

  std::vector<BrauerDiagram> enumerate_all(std::size_t n, std::size_t limit) {
    std::vector<BrauerDiagram> out;
    if (n <= limit && n <= kMaxRank) {
      out.reserve(static_cast<std::size_t>(number_of_diagrams(n)));
    }
    for_each_diagram(
        n, [&out](BrauerDiagram const& d) { out.push_back(d); }, limit);
    return out;
  }

  std::size_t DiagramHash::operator()(BrauerDiagram const& d) const noexcept {
    // FNV-1a over the partner table.
    std::uint64_t h = 1469598103934665603ULL ^ d.rank();
    for (auto p : d.partners()) {
      h ^= p;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

}  // namespace brauer
