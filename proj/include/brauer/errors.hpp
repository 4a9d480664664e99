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

#ifndef BRAUER_ERRORS_HPP_
#define BRAUER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace brauer {

  // Raised for malformed input: invalid diagrams, words, indices, or a
  // violated operation precondition. The CLI maps this to exit code 2.
  class domain_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Raised when a requested rank exceeds a configured enumeration limit.
  class limit_error : public std::length_error {
   public:
    using std::length_error::length_error;
  };

}  // namespace brauer

#endif  // BRAUER_ERRORS_HPP_
