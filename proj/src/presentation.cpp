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

#include "brauer/presentation.hpp"

#include <algorithm>  // for find_if, reverse
#include <cctype>     // for isspace, isdigit
#include <sstream>    // for ostringstream

#include "brauer/errors.hpp"
#include "rewrite_pattern.hpp"

namespace brauer {

  using detail::PairTemplate;
  using detail::RewriteRule;

  Quark quark(std::size_t i, std::size_t j) {
    if (i == j || i == 0 || j == 0 || i > kMaxRank || j > kMaxRank) {
      throw domain_error("invalid quark (" + std::to_string(i) + ","
                         + std::to_string(j) + ")");
    }
    if (i > j) {
      std::swap(i, j);
    }
    return Quark{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
  }

  Word::Word(std::size_t n, std::vector<Quark> quarks)
      : _n(n), _quarks(std::move(quarks)) {
    if (n < 2 || n > kMaxRank) {
      throw domain_error("word rank must be in [2, " + std::to_string(kMaxRank)
                         + "], found " + std::to_string(n));
    }
    if (_quarks.empty()) {
      throw domain_error("words must be nonempty");
    }
    for (auto const& q : _quarks) {
      if (q.i == 0 || q.i >= q.j || q.j > n) {
        throw domain_error("quark (" + std::to_string(q.i) + ","
                           + std::to_string(q.j) + ") invalid for n = "
                           + std::to_string(n));
      }
    }
  }

  Word make_word(std::size_t                                                n,
                 std::initializer_list<std::pair<std::size_t, std::size_t>> q) {
    std::vector<Quark> quarks;
    for (auto [i, j] : q) {
      quarks.push_back(quark(i, j));
    }
    return Word(n, std::move(quarks));
  }

  Word operator*(Word const& u, Word const& v) {
    if (u.rank() != v.rank()) {
      throw domain_error("cannot concatenate words of different ranks");
    }
    std::vector<Quark> q = u.quarks();
    q.insert(q.end(), v.quarks().begin(), v.quarks().end());
    return Word(u.rank(), std::move(q));
  }

  std::string quarks_to_string(std::vector<Quark> const& quarks) {
    std::ostringstream os;
    for (auto const& q : quarks) {
      os << '(' << int(q.i) << ',' << int(q.j) << ')';
    }
    return os.str();
  }

  std::string to_string(Word const& w) {
    return "n=" + std::to_string(w.rank()) + ": " + quarks_to_string(w.quarks());
  }

  namespace {
    [[noreturn]] void parse_failure(std::string_view text, std::string what) {
      throw domain_error("cannot parse \"" + std::string(text) + "\": " + what);
    }

    std::size_t read_number(std::string_view text, std::size_t& pos) {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      std::size_t start = pos, value = 0;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
        if (value > 1'000'000) {
          parse_failure(text, "number too large");
        }
      }
      if (start == pos) {
        parse_failure(text, "expected a number");
      }
      return value;
    }

    bool read_char(std::string_view text, std::size_t& pos, char c) {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
  }  // namespace

  std::vector<Quark> parse_quarks(std::size_t n, std::string_view text) {
    std::vector<Quark> out;
    std::size_t        pos = 0;
    while (true) {
      if (!read_char(text, pos, '(')) {
        break;
      }
      std::size_t i = read_number(text, pos);
      if (!read_char(text, pos, ',')) {
        parse_failure(text, "expected ','");
      }
      std::size_t j = read_number(text, pos);
      if (!read_char(text, pos, ')')) {
        parse_failure(text, "expected ')'");
      }
      if (i > n || j > n) {
        parse_failure(text, "label exceeds n = " + std::to_string(n));
      }
      out.push_back(quark(i, j));
    }
    while (pos < text.size()
           && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos != text.size()) {
      parse_failure(text, "trailing characters");
    }
    if (out.empty()) {
      parse_failure(text, "no quarks");
    }
    return out;
  }

  Word parse_word(std::string_view text) {
    std::size_t pos = 0;
    if (!read_char(text, pos, 'n') || !read_char(text, pos, '=')) {
      parse_failure(text, "expected \"n=\"");
    }
    std::size_t n = read_number(text, pos);
    if (!read_char(text, pos, ':')) {
      parse_failure(text, "expected ':'");
    }
    return Word(n, parse_quarks(n, text.substr(pos)));
  }

  BrauerDiagram phi(Word const& w) {
    BrauerDiagram result = atom(w.rank(), w[0].i, w[0].j);
    for (std::size_t p = 1; p < w.size(); ++p) {
      result = multiply(result, atom(w.rank(), w[p].i, w[p].j));
    }
    return result;
  }

  bool words_equal_in_T(Word const& u, Word const& v) {
    if (u.rank() != v.rank()) {
      throw domain_error("cannot compare words of different ranks");
    }
    return phi(u) == phi(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::uint8_t I = 0, J = 1, K = 2, L = 3;

    RewriteRule const& rule(RelationId id) {
      static std::array<RewriteRule, 7> const rules = {{
          {{{I, J}}, {{J, I}}, 2, true},
          {{{I, J}, {I, J}}, {{I, J}}, 2, true},
          {{{I, J}, {J, K}, {K, L}}, {{I, J}, {I, L}, {K, L}}, 4, true},
          {{{I, J}, {I, K}, {J, K}}, {{I, J}, {J, K}}, 3, true},
          {{{I, J}, {J, K}, {I, J}}, {{I, J}}, 3, true},
          {{{I, J}, {K, L}, {I, K}}, {{I, J}, {J, L}, {I, K}}, 4, true},
          {{{I, J}, {K, L}}, {{K, L}, {I, J}}, 4, true},
      }};
      return rules[static_cast<std::size_t>(id) - 1];
    }

    constexpr std::array<RelationId, 7> kAllRelations = {RelationId::R1,
                                                         RelationId::R2,
                                                         RelationId::R3,
                                                         RelationId::R4,
                                                         RelationId::R5,
                                                         RelationId::R6,
                                                         RelationId::R7};
  }  // namespace

  std::size_t relation_arity(RelationId id) noexcept {
    return rule(id).arity;
  }

  std::string to_string(RelationSite const& site) {
    std::ostringstream os;
    os << 'R' << static_cast<int>(site.id) << '@' << site.position
       << (site.direction == Direction::forward ? " ->" : " <-") << " [";
    for (std::size_t v = 0; v < relation_arity(site.id); ++v) {
      os << (v == 0 ? "" : ",") << "ijkl"[v] << '=' << site.binding[v];
    }
    os << ']';
    return os.str();
  }

  Word apply_relation(Word const& w, RelationSite const& site) {
    RewriteRule const& r = rule(site.id);
    if (!detail::admissible(r, site.binding, w.rank())) {
      throw domain_error("binding for " + to_string(site)
                         + " is not pairwise distinct within [1, n]");
    }
    bool const        fwd  = site.direction == Direction::forward;
    auto const&       from = fwd ? r.lhs : r.rhs;
    auto const&       to   = fwd ? r.rhs : r.lhs;
    if (!detail::matches(w.quarks(), site.position, from, site.binding)) {
      throw domain_error("relation " + to_string(site) + " does not match "
                         + to_string(w));
    }
    return Word(w.rank(),
                detail::rewrite(
                    w.quarks(), site.position, from, to, site.binding));
  }

  std::vector<RelationSite> relation_sites(Word const& w) {
    std::vector<RelationSite> out;
    for (auto id : kAllRelations) {
      RewriteRule const& r = rule(id);
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (auto dir : {Direction::forward, Direction::backward}) {
          auto const& side = dir == Direction::forward ? r.lhs : r.rhs;
          for (auto const& b :
               detail::bindings_at(w.quarks(), pos, r, side, w.rank())) {
            out.push_back(RelationSite{id, pos, dir, b});
          }
        }
      }
    }
    return out;
  }

  std::pair<Word, Word> relation_sides(std::size_t                       n,
                                       RelationId                        id,
                                       std::array<std::size_t, 4> const& b) {
    RewriteRule const& r = rule(id);
    if (!detail::admissible(r, b, n)) {
      throw domain_error("inadmissible binding for relation R"
                         + std::to_string(static_cast<int>(id)));
    }
    return {Word(n, detail::instantiate(r.lhs, b)),
            Word(n, detail::instantiate(r.rhs, b))};
  }

  std::vector<RelationFamilyReport> check_all_relations(std::size_t n) {
    std::vector<RelationFamilyReport> out;
    for (auto id : kAllRelations) {
      RelationFamilyReport report{id, 0, {}};
      std::size_t const    arity = relation_arity(id);
      if (n >= arity) {
        std::array<std::size_t, 4> b{};
        // Odometer over ordered tuples of distinct labels.
        auto recurse = [&](auto&& self, std::size_t v) -> void {
          if (v == arity) {
            auto [lhs, rhs] = relation_sides(n, id, b);
            ++report.tuples_checked;
            if (phi(lhs) != phi(rhs)) {
              report.violations.push_back({b, lhs, rhs});
            }
            return;
          }
          for (std::size_t x = 1; x <= n; ++x) {
            if (std::find(b.begin(), b.begin() + v, x) != b.begin() + v) {
              continue;
            }
            b[v] = x;
            self(self, v + 1);
          }
          b[v] = 0;
        };
        recurse(recurse, 0);
      }
      out.push_back(std::move(report));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Anti-involution, connectivity, normal form
  ////////////////////////////////////////////////////////////////////////

  Word star(Word const& w) {
    std::vector<Quark> q = w.quarks();
    std::reverse(q.begin(), q.end());
    return Word(w.rank(), std::move(q));
  }

  bool is_connected(std::vector<Quark> const& quarks) {
    for (std::size_t p = 1; p < quarks.size(); ++p) {
      if (!quarks[p - 1].meets(quarks[p])) {
        return false;
      }
    }
    return true;
  }

  bool is_connected(Word const& w) {
    return is_connected(w.quarks());
  }

  std::optional<std::size_t> normal_form_split(Word const& w) {
    auto const& q = w.quarks();
    // Moving the split right lengthens the prefix that must be connected
    // and shortens the suffix that must be disjoint, so the leftmost split
    // allowed by the suffix is the only candidate.
    std::size_t first_disjoint = q.size() - 1;
    while (first_disjoint > 0) {
      bool ok = true;
      for (std::size_t p = first_disjoint; p < q.size(); ++p) {
        if (q[first_disjoint - 1].meets(q[p])) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        break;
      }
      --first_disjoint;
    }
    std::size_t connected_end = 0;  // w[0..connected_end] is connected
    while (connected_end + 1 < q.size()
           && q[connected_end].meets(q[connected_end + 1])) {
      ++connected_end;
    }
    if (first_disjoint <= connected_end) {
      return first_disjoint;
    }
    return std::nullopt;
  }

  bool is_normal_form(Word const& w) {
    return normal_form_split(w).has_value();
  }

  Word normalize(Word const& w) {
    // head = u * t_1 (connected); rest = t_2, ..., t_k.
    std::vector<Quark> head{w[0]};
    std::vector<Quark> rest;

    auto find_in_rest = [&rest](std::size_t x) -> std::size_t {
      for (std::size_t s = 0; s < rest.size(); ++s) {
        if (rest[s].contains(x)) {
          return s;
        }
      }
      return rest.size();
    };

    for (std::size_t pos = 1; pos < w.size(); ++pos) {
      Quark const q  = w[pos];
      Quark const p1 = head.back();
      std::size_t si = find_in_rest(q.i), sj = find_in_rest(q.j);
      bool const  in_rest_i = si < rest.size(), in_rest_j = sj < rest.size();

      if (!in_rest_i && !in_rest_j) {
        if (p1.meets(q)) {
          // q meets only t_1: it joins the connected part.
          head.push_back(q);
        } else {
          rest.push_back(q);
        }
        continue;
      }
      if (in_rest_i && in_rest_j && si == sj) {
        // q equals a tail pair: commute it over and absorb by idempotence.
        continue;
      }
      if (p1.meets(q)) {
        // One label a of q in t_1 = {a, d}, the other b in tail pair {c, b}:
        //   t_ad t_cb t_ab = t_ad t_cd t_ab.
        std::size_t const a = p1.contains(q.i) ? q.i : q.j;
        std::size_t const b = q.other(a);
        std::size_t const s = in_rest_i ? si : sj;
        std::size_t const c = rest[s].other(b);
        std::size_t const d = p1.other(a);
        head.push_back(quark(c, d));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
        rest.insert(rest.begin(), q);
        continue;
      }
      std::size_t const p = p1.i, r = p1.j;
      if (in_rest_i != in_rest_j) {
        // One label a in tail pair {a, e}, the other b unused:
        //   t_pr t_ae t_ab = t_pr t_pe t_pb t_pr t_ab.
        std::size_t const a = in_rest_i ? q.i : q.j;
        std::size_t const b = q.other(a);
        std::size_t const s = in_rest_i ? si : sj;
        std::size_t const e = rest[s].other(a);
        head.push_back(quark(p, e));
        head.push_back(quark(p, b));
        head.push_back(quark(p, r));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
        rest.insert(rest.begin(), q);
        continue;
      }
      // Labels in two different tail pairs {a, e} and {f, b}, the one
      // holding a first in the tail:
      //   t_pr t_ae t_fb t_ab = t_pr t_pf t_ap t_pr t_fe t_ab.
      std::size_t const s = std::min(si, sj), t = std::max(si, sj);
      std::size_t const a = si < sj ? q.i : q.j;
      std::size_t const b = q.other(a);
      std::size_t const e = rest[s].other(a);
      std::size_t const f = rest[t].other(b);
      head.push_back(quark(p, f));
      head.push_back(quark(a, p));
      head.push_back(quark(p, r));
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
      rest.insert(rest.begin(), {quark(f, e), q});
    }
    head.insert(head.end(), rest.begin(), rest.end());
    return Word(w.rank(), std::move(head));
  }

  ////////////////////////////////////////////////////////////////////////
  // Distinguished elements
  ////////////////////////////////////////////////////////////////////////

  Word standard_idempotent(std::size_t n, std::vector<LabelPair> const& pairs) {
    std::vector<Quark> q;
    for (auto [i, j] : pairs) {
      Quark next = quark(i, j);
      for (auto const& prev : q) {
        if (prev.meets(next)) {
          throw domain_error("standard idempotent pairs must be disjoint");
        }
      }
      q.push_back(next);
    }
    return Word(n, std::move(q));
  }

  Word epsilon(std::size_t n, std::size_t k) {
    if (k == 0 || 2 * k > n) {
      throw domain_error("epsilon_k needs 1 <= k <= n / 2");
    }
    std::vector<LabelPair> pairs;
    for (std::size_t a = 1; a <= k; ++a) {
      pairs.emplace_back(2 * a - 1, 2 * a);
    }
    return standard_idempotent(n, pairs);
  }

  Word gamma_pair(std::size_t n, std::size_t i, std::size_t j) {
    if (i == j || i < 3 || j < 3 || i > n || j > n) {
      throw domain_error("gamma_{i,j} needs distinct i, j in {3, ..., n}");
    }
    return Word(n, {quark(1, 2), quark(1, i), quark(1, j), quark(1, 2)});
  }

  Word gamma(std::size_t n, std::size_t i) {
    if (n < 4 || i < 3 || i + 1 > n) {
      throw domain_error("gamma_i needs n >= 4 and 3 <= i <= n - 1");
    }
    return gamma_pair(n, i, i + 1);
  }

}  // namespace brauer
