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

// Constructive factorization of singular Brauer diagrams into atoms.

#ifndef BRAUER_DECOMPOSITION_HPP_
#define BRAUER_DECOMPOSITION_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "brauer/diagram.hpp"
#include "brauer/presentation.hpp"

namespace brauer {

  // A cycle of the permutation a group corank-2 element induces on the
  // labels outside its bracket {u, v}, listed in the order its labels
  // occur in the factorization: starting at the smallest label x and
  // continuing with the label whose line ends at x'.
  using LabelCycle = std::vector<std::size_t>;

  // Nontrivial cycles of the induced permutation, sorted by smallest
  // label. Requires corank 2 with left bracket {u, v} matching right
  // bracket {u', v'}.
  std::vector<LabelCycle> bracket_cycles(BrauerDiagram const& pi);

  // Factorization of a corank-2 element H-related to an atom sigma_{u,v}
  // (u < v): sigma_{u,v}, then for each cycle (x_1 ... x_p) the atoms
  // sigma_{u,x_1} ... sigma_{u,x_p} followed by sigma_{u,v}.
  Word decompose_group_corank2(BrauerDiagram const& pi);

  // Any corank-2 element: pi = xi * sigma_{v,f} * sigma_{f,g} where xi is
  // in the group H-class of sigma_{u,v}, {u,v} the left and {f',g'} the
  // right bracket of pi, oriented so that v != f.
  Word decompose_corank2(BrauerDiagram const& pi);

  // Any element of corank >= 2. The first quark is always a left bracket
  // of pi.
  Word decompose(BrauerDiagram const& pi);

  // Upper bound on decompose(pi).size() for rank n and the given corank:
  // floor(3n/2) + corank/2 - 1.
  std::size_t decomposition_length_bound(std::size_t n, std::size_t corank);

  struct AtomFactorization {
    BrauerDiagram target;
    Word          factors;

    bool verified() const {
      return phi(factors) == target;
    }
  };

  AtomFactorization factorize(BrauerDiagram const& pi);

  struct IrreducibilityEntry {
    LabelPair   atom;
    std::size_t closure_of_others;
    bool        irreducible;
  };

  // For every atom, whether it lies outside the closure of the others.
  std::vector<IrreducibilityEntry>
  irreducible_generator_check(std::size_t n,
                              std::size_t limit = kDefaultEnumerationLimit - 1);

}  // namespace brauer

#endif  // BRAUER_DECOMPOSITION_HPP_
