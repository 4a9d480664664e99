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

#include "brauer/verify.hpp"

#include <map>      // for map
#include <sstream>  // for ostringstream

#include "brauer/decomposition.hpp"
#include "brauer/diagram.hpp"
#include "brauer/errors.hpp"
#include "brauer/geodesics.hpp"
#include "brauer/kernels.hpp"
#include "brauer/presentation.hpp"
#include "brauer/sequences.hpp"

namespace brauer {

  namespace {
    std::uint64_t factorial(std::size_t n) {
      std::uint64_t f = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        f *= k;
      }
      return f;
    }

    template <typename T, typename U>
    Claim claim(Suite s, std::string name, T const& expected, U const& computed) {
      std::ostringstream e, c;
      e << expected;
      c << computed;
      return Claim{std::string(suite_name(s)),
                   std::move(name),
                   e.str(),
                   c.str(),
                   e.str() == c.str()};
    }

    void run_relations(std::size_t n, std::vector<Claim>& out) {
      for (auto const& family : check_all_relations(n)) {
        std::string name
            = "relation R" + std::to_string(static_cast<int>(family.id));
        if (!family.applicable()) {
          out.push_back(claim(Suite::relations,
                              name + " (needs "
                                  + std::to_string(relation_arity(family.id))
                                  + " labels, not applicable)",
                              0,
                              0));
          continue;
        }
        out.push_back(claim(Suite::relations,
                            name + " violations over "
                                + std::to_string(family.tuples_checked)
                                + " tuples",
                            0,
                            family.violations.size()));
      }
    }

    void run_generation(std::size_t n, std::size_t limit, std::vector<Claim>& out) {
      auto const atoms = all_atoms(n);
      auto const table = parallel::closure(n, atoms, Side::right, limit);
      out.push_back(claim(Suite::generation,
                          "closure of atoms has (2n-1)!! - n! elements",
                          number_of_diagrams(n) - factorial(n),
                          table.size()));
      auto mismatch = parallel::first_failure(
          n,
          [&](BrauerDiagram const& d) {
            return table.contains(d) == (corank(d) >= 2);
          },
          limit);
      out.push_back(claim(Suite::generation,
                          "closure equals the diagrams of corank >= 2",
                          "none",
                          mismatch ? to_string(diagram_unrank(n, *mismatch))
                                   : std::string("none")));
    }

    void run_irreducible(std::size_t n, std::size_t limit, std::vector<Claim>& out) {
      std::size_t count = 0, total = 0;
      for (auto const& e : irreducible_generator_check(n, limit)) {
        ++total;
        count += e.irreducible;
      }
      out.push_back(claim(
          Suite::irreducible, "atoms outside the closure of the others", total, count));
    }

    void run_lengths(std::size_t n, std::size_t limit, std::vector<Claim>& out) {
      auto const table = bfs_lengths(n, limit);
      out.push_back(claim(Suite::lengths,
                          "max length = floor(3n/2) - 2",
                          max_length_formula(n),
                          table.max_length()));
      std::size_t checked = 0, agree = 0;
      for_each_diagram(
          n,
          [&](BrauerDiagram const& d) {
            if (corank(d) == 2 && left_brackets(d).front() == LabelPair{1, 2}
                && right_brackets(d).front() == LabelPair{1, 2}) {
              ++checked;
              agree += table.length(d) == ls_via_cycles(d);
            }
          },
          limit);
      out.push_back(claim(Suite::lengths,
                          "cycle formula = BFS length on the H-class of sigma_12",
                          checked,
                          agree));
    }

    void run_counts(std::size_t n, std::size_t limit, std::vector<Claim>& out) {
      out.push_back(claim(Suite::counts,
                          "classes of connected sequences = n(n-1)n!/4",
                          count_classes_formula(n),
                          count_classes(n, limit)));
      // Tally every corank-2 diagram by its bracket pair in one sweep.
      std::map<std::pair<LabelPair, LabelPair>, std::uint64_t> by_ends;
      for_each_diagram(
          n,
          [&](BrauerDiagram const& d) {
            if (corank(d) == 2) {
              ++by_ends[{left_brackets(d).front(), right_brackets(d).front()}];
            }
          },
          limit);
      std::size_t const pairs = n * (n - 1) / 2;
      std::size_t       good  = 0;
      for (auto const& [ends, count] : by_ends) {
        good += count == count_paths_formula(n);
      }
      out.push_back(claim(Suite::counts,
                          "endpoint pairs with (n-2)! path classes",
                          pairs * pairs,
                          good));
    }

    void run_hclasses(std::size_t n, std::size_t limit, std::vector<Claim>& out) {
      using Key = std::pair<std::vector<LabelPair>, std::vector<LabelPair>>;
      std::map<std::size_t, std::map<Key, std::uint64_t>> classes;
      for_each_diagram(
          n,
          [&](BrauerDiagram const& d) {
            ++classes[corank(d) / 2][{left_brackets(d), right_brackets(d)}];
          },
          limit);
      for (std::size_t k = 1; 2 * k <= n; ++k) {
        std::uint64_t const expected = factorial(n - 2 * k);
        std::size_t         good     = 0;
        for (auto const& [key, size] : classes[k]) {
          good += size == expected;
        }
        out.push_back(claim(Suite::hclasses,
                            "H-classes of corank " + std::to_string(2 * k)
                                + " of size (n-2k)! = "
                                + std::to_string(expected),
                            classes[k].size(),
                            good));
        auto const eps = phi(epsilon(n, k));
        out.push_back(claim(Suite::hclasses,
                            "|H(eps_" + std::to_string(k) + ")|",
                            expected,
                            classes[k][{left_brackets(eps), right_brackets(eps)}]));
      }
    }
  }  // namespace

  std::vector<Suite> all_suites() {
    return {Suite::relations,
            Suite::generation,
            Suite::irreducible,
            Suite::lengths,
            Suite::counts,
            Suite::hclasses};
  }

  std::string_view suite_name(Suite s) {
    switch (s) {
      case Suite::relations:
        return "relations";
      case Suite::generation:
        return "generation";
      case Suite::irreducible:
        return "irreducible";
      case Suite::lengths:
        return "lengths";
      case Suite::counts:
        return "counts";
      case Suite::hclasses:
        return "hclasses";
    }
    return "?";
  }

  std::optional<Suite> parse_suite(std::string_view name) {
    for (auto s : all_suites()) {
      if (suite_name(s) == name) {
        return s;
      }
    }
    return std::nullopt;
  }

  std::size_t suite_limit(Suite s) {
    switch (s) {
      case Suite::relations:
        return 8;
      case Suite::irreducible:
        return 6;
      default:
        return 7;
    }
  }

  bool VerifyReport::passed() const {
    for (auto const& c : claims) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (auto const& c : claims) {
      os << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name
         << " (expected " << c.expected << ", computed " << c.computed << ")\n";
    }
    return os.str();
  }

  VerifyReport verify(std::size_t               n,
                      std::vector<Suite> const& suites,
                      bool                      force) {
    if (n < 2) {
      throw domain_error("verification needs n >= 2");
    }
    VerifyReport report{n, {}};
    for (auto s : suites) {
      std::size_t limit = suite_limit(s);
      if (n > limit) {
        if (!force) {
          throw limit_error(std::string(suite_name(s)) + " is limited to n <= "
                            + std::to_string(limit) + "; use --force");
        }
        limit = n;
      }
      switch (s) {
        case Suite::relations:
          run_relations(n, report.claims);
          break;
        case Suite::generation:
          run_generation(n, limit, report.claims);
          break;
        case Suite::irreducible:
          run_irreducible(n, limit, report.claims);
          break;
        case Suite::lengths:
          run_lengths(n, limit, report.claims);
          break;
        case Suite::counts:
          run_counts(n, limit, report.claims);
          break;
        case Suite::hclasses:
          run_hclasses(n, limit, report.claims);
          break;
      }
    }
    return report;
  }

}  // namespace brauer
