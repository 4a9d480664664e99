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

// The semigroup T on quark generators tau_{i,j} subject to seven families
// of relations, and its evaluation map into the singular part of the
// Brauer monoid.

#ifndef BRAUER_PRESENTATION_HPP_
#define BRAUER_PRESENTATION_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <initializer_list>  // for initializer_list
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "brauer/diagram.hpp"

namespace brauer {

  // The generator tau_{i,j}; stored with i < j so tau_{i,j} = tau_{j,i}
  // holds by construction.
  struct Quark {
    std::uint8_t i;
    std::uint8_t j;

    bool contains(std::size_t x) const noexcept {
      return i == x || j == x;
    }
    bool meets(Quark const& other) const noexcept {
      return contains(other.i) || contains(other.j);
    }
    // The element of the pair that is not x; x must be in the pair.
    std::size_t other(std::size_t x) const noexcept {
      return i == x ? j : i;
    }

    friend bool operator==(Quark const&, Quark const&) = default;
    friend auto operator<=>(Quark const&, Quark const&) = default;
  };

  // Throws domain_error if i == j or either label is 0.
  Quark quark(std::size_t i, std::size_t j);

  // A nonempty word over the quarks of rank n.
  class Word {
   public:
    Word(std::size_t n, std::vector<Quark> quarks);

    std::size_t rank() const noexcept {
      return _n;
    }
    std::size_t size() const noexcept {
      return _quarks.size();
    }
    std::vector<Quark> const& quarks() const noexcept {
      return _quarks;
    }
    Quark const& operator[](std::size_t pos) const {
      return _quarks[pos];
    }

    friend bool operator==(Word const&, Word const&) = default;

   private:
    std::size_t        _n;
    std::vector<Quark> _quarks;
  };

  Word make_word(std::size_t                                             n,
                 std::initializer_list<std::pair<std::size_t, std::size_t>> q);

  // Concatenation in the free semigroup.
  Word operator*(Word const& u, Word const& v);

  // "n=5: (1,2)(2,3)(1,2)"
  std::string to_string(Word const& w);
  Word        parse_word(std::string_view text);

  // "(1,2)(2,3)" with the rank supplied separately.
  std::vector<Quark> parse_quarks(std::size_t n, std::string_view text);
  std::string        quarks_to_string(std::vector<Quark> const& quarks);

  // Product of the atoms of the quarks, left to right.
  BrauerDiagram phi(Word const& w);

  // Equality in T, decided through phi (which is injective).
  bool words_equal_in_T(Word const& u, Word const& v);

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  //   R1  t_ij            = t_ji
  //   R2  t_ij t_ij       = t_ij
  //   R3  t_ij t_jk t_kl  = t_ij t_il t_kl
  //   R4  t_ij t_ik t_jk  = t_ij t_jk
  //   R5  t_ij t_jk t_ij  = t_ij
  //   R6  t_ij t_kl t_ik  = t_ij t_jl t_ik
  //   R7  t_ij t_kl       = t_kl t_ij
  // with i, j, k, l pairwise distinct.
  enum class RelationId { R1 = 1, R2, R3, R4, R5, R6, R7 };

  enum class Direction { forward, backward };

  // Number of distinct labels a relation involves (2, 3 or 4).
  std::size_t relation_arity(RelationId id) noexcept;

  struct RelationSite {
    RelationId id;
    // Index of the first quark the relation side occupies.
    std::size_t position;
    // forward rewrites left side to right side.
    Direction direction;
    // Labels bound to i, j, k, l; entries past the arity are ignored.
    std::array<std::size_t, 4> binding;

    friend bool operator==(RelationSite const&, RelationSite const&) = default;
  };

  std::string to_string(RelationSite const& site);

  // Throws domain_error if the pattern does not occur at the site or the
  // bound labels are not pairwise distinct and in range.
  Word apply_relation(Word const& w, RelationSite const& site);

  // Every site at which some relation applies to w, in either direction.
  // Labels that appear only on the target side range over all admissible
  // values.
  std::vector<RelationSite> relation_sites(Word const& w);

  // Left and right sides of a relation under a binding, as words of rank n.
  std::pair<Word, Word> relation_sides(std::size_t                       n,
                                       RelationId                        id,
                                       std::array<std::size_t, 4> const& b);

  struct RelationViolation {
    std::array<std::size_t, 4> binding;
    Word                       lhs;
    Word                       rhs;
  };

  struct RelationFamilyReport {
    RelationId                     id;
    std::size_t                    tuples_checked;
    std::vector<RelationViolation> violations;

    bool applicable() const noexcept {
      return tuples_checked > 0;
    }
    bool passed() const noexcept {
      return violations.empty();
    }
  };

  // Evaluates both sides of every relation under phi for every admissible
  // ordered tuple of distinct labels.
  std::vector<RelationFamilyReport> check_all_relations(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Anti-involution, connectivity, normal form
  ////////////////////////////////////////////////////////////////////////

  // Reverses the word.
  Word star(Word const& w);

  // Consecutive quarks share a label.
  bool is_connected(Word const& w);
  bool is_connected(std::vector<Quark> const& quarks);

  // Smallest split position p such that w[0..p] is connected and the
  // quarks w[p..] are pairwise disjoint, if any.
  std::optional<std::size_t> normal_form_split(Word const& w);
  bool                       is_normal_form(Word const& w);

  // Rewrites w into an equal word u * t_1 * ... * t_k with u * t_1
  // connected and t_1, ..., t_k pairwise disjoint. Quarks are absorbed one
  // at a time. Output can be longer than the input.
  Word normalize(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Distinguished elements
  ////////////////////////////////////////////////////////////////////////

  // t_{i1,j1} ... t_{ik,jk} for pairwise disjoint pairs.
  Word standard_idempotent(std::size_t n, std::vector<LabelPair> const& pairs);

  // eps_k = t_12 t_34 ... t_{2k-1,2k}.
  Word epsilon(std::size_t n, std::size_t k);

  // gamma_{i,j} = t_12 t_1i t_1j t_12 for distinct i, j in {3..n}.
  Word gamma_pair(std::size_t n, std::size_t i, std::size_t j);

  // gamma_i = gamma_{i,i+1} for 3 <= i <= n - 1.
  Word gamma(std::size_t n, std::size_t i);

}  // namespace brauer

#endif  // BRAUER_PRESENTATION_HPP_
