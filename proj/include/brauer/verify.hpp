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

// Exhaustive checks of the counting and structural claims, with a
// PASS/FAIL line per claim.

#ifndef BRAUER_VERIFY_HPP_
#define BRAUER_VERIFY_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace brauer {

  enum class Suite { relations, generation, irreducible, lengths, counts, hclasses };

  std::vector<Suite>   all_suites();
  std::string_view     suite_name(Suite s);
  std::optional<Suite> parse_suite(std::string_view name);

  // Largest n a suite accepts without --force.
  std::size_t suite_limit(Suite s);

  struct Claim {
    std::string suite;
    std::string name;
    std::string expected;
    std::string computed;
    bool        passed;
  };

  struct VerifyReport {
    std::size_t        n;
    std::vector<Claim> claims;

    bool passed() const;
    // One "PASS|FAIL suite: name (expected X, computed Y)" line per claim.
    std::string to_text() const;
  };

  // Throws limit_error if n exceeds a suite's limit and force is false.
  VerifyReport verify(std::size_t               n,
                      std::vector<Suite> const& suites,
                      bool                      force = false);

}  // namespace brauer

#endif  // BRAUER_VERIFY_HPP_
