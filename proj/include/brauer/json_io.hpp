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

// JSON forms of diagrams and words. Primed points are negative integers.

#ifndef BRAUER_JSON_IO_HPP_
#define BRAUER_JSON_IO_HPP_

#include "json.hpp"

#include "brauer/diagram.hpp"
#include "brauer/presentation.hpp"

namespace brauer {

  // {"n":6,"blocks":[[1,5],[4,6],[2,-1],[3,-6],[-2,-4],[-3,-5]]}
  nlohmann::json diagram_to_json(BrauerDiagram const& d);
  BrauerDiagram  diagram_from_json(nlohmann::json const& j);

  // {"n":5,"quarks":[[1,2],[2,3]]}
  nlohmann::json word_to_json(Word const& w);
  Word           word_from_json(nlohmann::json const& j);

}  // namespace brauer

#endif  // BRAUER_JSON_IO_HPP_
