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

// Command-line front end: `brauer <subcommand> ...`. Exit codes are 0 on
// success, 2 for invalid input or usage, 1 for internal failures and
// failed verification.

#include <cstdlib>     // for getenv
#include <exception>   // for exception
#include <filesystem>  // for path
#include <iostream>    // for cout, cerr
#include <string>      // for string
#include <vector>      // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "brauer/decomposition.hpp"
#include "brauer/diagram.hpp"
#include "brauer/errors.hpp"
#include "brauer/geodesics.hpp"
#include "brauer/json_io.hpp"
#include "brauer/kernels.hpp"
#include "brauer/presentation.hpp"
#include "brauer/sequences.hpp"
#include "brauer/verify.hpp"

namespace {

  using nlohmann::json;
  using namespace brauer;

  struct Options {
    bool        json   = false;
    bool        force  = false;
    int         threads = 0;
    std::string cache_dir;
  };

  // Result of one subcommand: a JSON value and its plain-text rendering.
  struct Output {
    json        value;
    std::string text;
    int         code = 0;
  };

  std::size_t parse_rank(std::string const& s) {
    std::size_t pos = 0;
    long long   v   = -1;
    try {
      v = std::stoll(s, &pos);
    } catch (std::exception const&) {
      pos = 0;
    }
    if (pos != s.size() || v < 1 || v > static_cast<long long>(kMaxRank)) {
      throw domain_error("invalid rank '" + s + "'");
    }
    return static_cast<std::size_t>(v);
  }

  LabelPair parse_pair(std::string const& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
      throw domain_error("expected a pair i,j but got '" + s + "'");
    }
    auto i = parse_rank(s.substr(0, comma));
    auto j = parse_rank(s.substr(comma + 1));
    return {i, j};
  }

  std::string bool_text(bool b) {
    return b ? "true" : "false";
  }

  json diagram_value(BrauerDiagram const& d) {
    return {{"text", to_string(d)}, {"diagram", diagram_to_json(d)}};
  }

  json word_value(Word const& w) {
    return {{"text", to_string(w)}, {"word", word_to_json(w)}};
  }

  std::filesystem::path cache_dir(Options const& opt) {
    if (!opt.cache_dir.empty()) {
      return opt.cache_dir;
    }
    if (char const* env = std::getenv("BRAUER_CACHE_DIR")) {
      return env;
    }
    return {};
  }

  std::size_t geodesic_limit(Options const& opt) {
    return opt.force ? kMaxRank : kDefaultGeodesicLimit;
  }

  std::size_t enumeration_limit(Options const& opt) {
    return opt.force ? kMaxRank : kDefaultEnumerationLimit;
  }

  std::size_t sweep_limit(Options const& opt) {
    return opt.force ? kMaxRank : kDefaultEnumerationLimit - 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer monoid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print a single JSON object");
  app.add_flag("--force", opt.force, "Lift the size limits of exhaustive commands");
  app.add_option("--threads", opt.threads, "OpenMP thread count (0: runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", opt.cache_dir,
                 "Directory for geodesic tables (default: $BRAUER_CACHE_DIR)");

  std::string a, b, c;
  std::vector<std::string> suites;
  bool dot = false;
  Output out;

  auto* mult = app.add_subcommand("mult", "Product of two diagrams");
  mult->add_option("a", a)->required();
  mult->add_option("b", b)->required();
  mult->callback([&] {
    auto p    = multiply_with_loops(parse_diagram(a), parse_diagram(b));
    out.value = diagram_value(p.diagram);
    out.value["closed_loops"] = p.closed_loops;
    out.text = to_string(p.diagram);
  });

  auto* cor = app.add_subcommand("corank", "Corank of a diagram");
  cor->add_option("diagram", a)->required();
  cor->callback([&] {
    auto k    = corank(parse_diagram(a));
    out.value = k;
    out.text  = std::to_string(k);
  });

  auto* green = app.add_subcommand("green", "Green's relations between two diagrams");
  green->add_option("a", a)->required();
  green->add_option("b", b)->required();
  green->callback([&] {
    auto x = parse_diagram(a), y = parse_diagram(b);
    out.value = json::object();
    for (auto [name, rel] : {std::pair{"R", GreenRelation::R},
                             std::pair{"L", GreenRelation::L},
                             std::pair{"H", GreenRelation::H},
                             std::pair{"D", GreenRelation::D}}) {
      bool r          = green_related(x, y, rel);
      out.value[name] = r;
      out.text += std::string(out.text.empty() ? "" : " ") + name + "="
                  + bool_text(r);
    }
  });

  auto* dec = app.add_subcommand("decompose", "Factor a singular diagram into atoms");
  dec->add_option("diagram", a)->required();
  dec->callback([&] {
    auto f    = factorize(parse_diagram(a));
    bool ok   = f.verified();
    out.value = word_value(f.factors);
    out.value["length"]   = f.factors.size();
    out.value["verified"] = ok;
    out.text = to_string(f.factors) + "\nverified: " + bool_text(ok);
    out.code = ok ? 0 : 1;
  });

  auto* norm = app.add_subcommand("normalize", "Normal form of a word");
  norm->add_option("word", a)->required();
  norm->callback([&] {
    auto w    = normalize(parse_word(a));
    out.value = word_value(w);
    out.text  = to_string(w);
  });

  auto* ph = app.add_subcommand("phi", "Diagram of a word");
  ph->add_option("word", a)->required();
  ph->callback([&] {
    auto d    = phi(parse_word(a));
    out.value = diagram_value(d);
    out.text  = to_string(d);
  });

  auto* eq = app.add_subcommand("equal", "Whether two words are equal in T");
  eq->add_option("u", a)->required();
  eq->add_option("v", b)->required();
  eq->callback([&] {
    bool r    = words_equal_in_T(parse_word(a), parse_word(b));
    out.value = r;
    out.text  = bool_text(r);
  });

  auto* len = app.add_subcommand("length", "Minimal atom-word length of a diagram");
  len->add_option("diagram", a)->required();
  len->callback([&] {
    auto d = parse_diagram(a);
    if (corank(d) == 0) {
      throw domain_error("length is undefined for invertible diagrams");
    }
    auto table = cached_bfs_lengths(d.rank(), cache_dir(opt), geodesic_limit(opt));
    auto l     = *table.length(d);
    out.value  = l;
    out.text   = std::to_string(l);
  });

  auto* lng = app.add_subcommand("longest", "Maximal length over the singular part");
  lng->add_option("n", a)->required();
  lng->callback([&] {
    auto n     = parse_rank(a);
    auto table = cached_bfs_lengths(n, cache_dir(opt), geodesic_limit(opt));
    auto w     = table.witness();
    out.value  = {{"n", n},
                  {"length", table.max_length()},
                  {"formula", max_length_formula(n)},
                  {"witness", diagram_value(w)}};
    out.text = std::to_string(table.max_length()) + "\n" + to_string(w);
  });

  auto* cls = app.add_subcommand("classes", "Classes of connected sequences");
  cls->add_option("n", a)->required();
  cls->callback([&] {
    auto n     = parse_rank(a);
    auto count = count_classes(n, sweep_limit(opt));
    out.value  = {{"n", n}, {"count", count}, {"formula", count_classes_formula(n)}};
    out.text   = std::to_string(count);
  });

  auto* pth = app.add_subcommand("paths", "Classes of connected sequences between two pairs");
  pth->add_option("n", a)->required();
  pth->add_option("from", b)->required();
  pth->add_option("to", c)->required();
  pth->callback([&] {
    auto n     = parse_rank(a);
    auto count = count_paths(n, parse_pair(b), parse_pair(c), sweep_limit(opt));
    out.value  = {{"n", n}, {"count", count}, {"formula", count_paths_formula(n)}};
    out.text   = std::to_string(count);
  });

  auto* seq = app.add_subcommand("seq-equal", "Whether two connected sequences are equivalent");
  seq->add_option("n", a)->required();
  seq->add_option("s", b)->required();
  seq->add_option("t", c)->required();
  seq->callback([&] {
    auto n    = parse_rank(a);
    bool r    = seq_equivalent(parse_sequence(n, b), parse_sequence(n, c));
    out.value = r;
    out.text  = bool_text(r);
  });

  auto* ver = app.add_subcommand("verify", "Check the counting and structural claims");
  ver->add_option("n", a)->required();
  ver->add_option("suites", suites, "Suites to run (default: all)");
  ver->callback([&] {
    auto               n = parse_rank(a);
    std::vector<Suite> chosen;
    for (auto const& s : suites) {
      auto parsed = parse_suite(s);
      if (!parsed) {
        throw domain_error("unknown suite '" + s + "'");
      }
      chosen.push_back(*parsed);
    }
    if (chosen.empty()) {
      chosen = all_suites();
    }
    auto report = verify(n, chosen, opt.force);
    json claims = json::array();
    for (auto const& cl : report.claims) {
      claims.push_back({{"suite", cl.suite},
                        {"name", cl.name},
                        {"expected", cl.expected},
                        {"computed", cl.computed},
                        {"passed", cl.passed}});
    }
    out.value = {{"n", n}, {"passed", report.passed()}, {"claims", claims}};
    out.text  = report.to_text();
    if (!out.text.empty() && out.text.back() == '\n') {
      out.text.pop_back();
    }
    out.code = report.passed() ? 0 : 1;
  });

  auto* en = app.add_subcommand("enumerate", "List every diagram of rank n in rank order");
  en->add_option("n", a)->required();
  en->callback([&] {
    auto n    = parse_rank(a);
    json list = json::array();
    for_each_diagram(
        n,
        [&](BrauerDiagram const& d) {
          auto t = to_string(d);
          if (opt.json) {
            list.push_back(t);
          } else {
            out.text += t;
            out.text += '\n';
          }
        },
        enumeration_limit(opt));
    out.value = {{"n", n}, {"count", number_of_diagrams(n)}, {"diagrams", list}};
    if (!out.text.empty()) {
      out.text.pop_back();
    }
  });

  auto* gr = app.add_subcommand("graph", "Intersection graph on 2-subsets");
  gr->add_option("n", a)->required();
  gr->add_flag("--dot", dot, "Print Graphviz text");
  gr->callback([&] {
    auto g        = gamma_graph(parse_rank(a));
    json vertices = json::array(), edges = json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      vertices.push_back({g.vertex(v).first, g.vertex(v).second});
      for (auto w : g.neighbours(v)) {
        if (v < w) {
          edges.push_back({v, w});
        }
      }
    }
    out.value = {{"n", g.rank()}, {"vertices", vertices}, {"edges", edges}};
    if (dot) {
      out.value["dot"] = g.to_dot();
      out.text         = g.to_dot();
      if (!out.text.empty() && out.text.back() == '\n') {
        out.text.pop_back();
      }
    } else {
      out.text = std::to_string(g.vertex_count()) + " vertices, "
                 + std::to_string(g.edge_count()) + " edges";
    }
  });

  app.parse_complete_callback([&] { set_thread_count(opt.threads); });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  } catch (domain_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (limit_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (opt.json) {
    std::cout << json{{"command", command}, {"result", out.value}}.dump() << '\n';
  } else {
    std::cout << out.text << '\n';
  }
  return out.code;
}
