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

#include "brauer/json_io.hpp"

#include "brauer/errors.hpp"

namespace brauer {

  namespace {
    long long signed_label(Point p) {
      auto v = static_cast<long long>(p.label);
      return p.primed ? -v : v;
    }

    Point from_signed(long long v) {
      if (v == 0) {
        throw domain_error("point 0 does not exist");
      }
      return v > 0 ? unprimed(static_cast<std::size_t>(v))
                   : primed(static_cast<std::size_t>(-v));
    }
  }  // namespace

  nlohmann::json diagram_to_json(BrauerDiagram const& d) {
    nlohmann::json blocks = nlohmann::json::array();
    for (auto const& [p, q] : d.blocks()) {
      blocks.push_back({signed_label(p), signed_label(q)});
    }
    return {{"n", d.rank()}, {"blocks", std::move(blocks)}};
  }

  BrauerDiagram diagram_from_json(nlohmann::json const& j) {
    try {
      auto const         n = j.at("n").get<std::size_t>();
      std::vector<Block> blocks;
      for (auto const& b : j.at("blocks")) {
        if (!b.is_array() || b.size() != 2) {
          throw domain_error("each block must be a pair");
        }
        blocks.push_back({from_signed(b[0].get<long long>()),
                          from_signed(b[1].get<long long>())});
      }
      return make_diagram(n, blocks);
    } catch (nlohmann::json::exception const& e) {
      throw domain_error(std::string("malformed diagram JSON: ") + e.what());
    }
  }

  nlohmann::json word_to_json(Word const& w) {
    nlohmann::json quarks = nlohmann::json::array();
    for (auto const& q : w.quarks()) {
      quarks.push_back({int(q.i), int(q.j)});
    }
    return {{"n", w.rank()}, {"quarks", std::move(quarks)}};
  }

  Word word_from_json(nlohmann::json const& j) {
    try {
      auto const         n = j.at("n").get<std::size_t>();
      std::vector<Quark> quarks;
      for (auto const& q : j.at("quarks")) {
        if (!q.is_array() || q.size() != 2) {
          throw domain_error("each quark must be a pair");
        }
        quarks.push_back(quark(q[0].get<std::size_t>(), q[1].get<std::size_t>()));
      }
      return Word(n, std::move(quarks));
    } catch (nlohmann::json::exception const& e) {
      throw domain_error(std::string("malformed word JSON: ") + e.what());
    }
  }

}  // namespace brauer
