// Copyright 2026 The cyclepack Authors
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

// cyclepack: generate digraph families, analyse them, and check the
// disjoint-cycle and long-path statements on concrete instances.
//
// Exit codes: 0 on completion, 1 on usage or input errors, 2 when a
// refutation candidate was found.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclepack/digraph.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/harness.hpp"
#include "cyclepack/io.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/paths.hpp"
#include "cyclepack/probes.hpp"
#include "cyclepack/report.hpp"

namespace {

using cyclepack::Digraph;
using cyclepack::Vertex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCandidate = 2;

struct InstanceFlags {
  std::string input;
  std::string family;
  std::int64_t g = 4, k = 1, c = 0, t = 0;
  std::string variant = "with_chord";
  std::int64_t h = 1, p = 1, m = 1, delta = 0;
  std::uint64_t seed = 1;
  std::int64_t pad = 0, pad_degree = 1;
  std::uint64_t pad_seed = 1;
};

struct Instance {
  Digraph digraph;
  std::string id;
  // Named vertex sets for counting bounds ("X", "Y").
  std::map<std::string, std::vector<Vertex>> layers;
};

void add_instance_options(CLI::App* cmd, InstanceFlags& flags) {
  cmd->add_option("--input", flags.input, "Edge-list file");
  cmd->add_option("--family", flags.family,
                  "even | odd | bipartite | circular | complete | random")
      ->check(CLI::IsMember({"even", "odd", "bipartite", "circular",
                             "complete", "random"}));
  cmd->add_option("--g", flags.g, "Girth parameter (even, odd, circular)");
  cmd->add_option("--k", flags.k, "Packing target (even, odd)");
  cmd->add_option("--c", flags.c, "Outdegree shift (even)");
  cmd->add_option("--variant", flags.variant, "with_chord | without_chord (odd)")
      ->check(CLI::IsMember({"with_chord", "without_chord"}));
  cmd->add_option("--h", flags.h, "Block size (bipartite)");
  cmd->add_option("--p", flags.p, "Outdegree (circular)");
  cmd->add_option("--m", flags.m, "Vertex count (complete, random)");
  cmd->add_option("--delta", flags.delta, "Outdegree (random)");
  cmd->add_option("--seed", flags.seed, "Seed (random)");
  cmd->add_option("--pad-sources", flags.pad, "Append this many source vertices");
  cmd->add_option("--pad-degree", flags.pad_degree, "Outdegree of padded sources");
  cmd->add_option("--pad-seed", flags.pad_seed, "Seed for padded sources");
}

Instance load_instance(const InstanceFlags& flags) {
  if (flags.input.empty() == flags.family.empty()) {
    throw CLI::ValidationError("exactly one of --input or --family is required");
  }
  Instance inst;
  if (!flags.input.empty()) {
    inst.digraph = cyclepack::read_edge_list_file(flags.input);
    inst.id = flags.input;
  } else if (flags.family == "even") {
    const auto params = cyclepack::ConstructionParams::even(flags.g, flags.k, flags.c);
    inst.digraph = cyclepack::gen_layered(params, false);
    inst.layers = {{"X", params.x_layer()}, {"Y", params.y_layer()}};
    inst.id = "even_girth(g=" + std::to_string(flags.g) + ",k=" +
              std::to_string(flags.k) + ",c=" + std::to_string(flags.c) + ")";
  } else if (flags.family == "odd") {
    const auto params = cyclepack::ConstructionParams::odd(flags.g, flags.k);
    inst.digraph = cyclepack::gen_layered(params, flags.variant == "with_chord");
    inst.layers = {{"X", params.x_layer()}, {"Y", params.y_layer()}};
    inst.id = "odd_girth(g=" + std::to_string(flags.g) + ",k=" +
              std::to_string(flags.k) + "," + flags.variant + ")";
  } else if (flags.family == "bipartite") {
    inst.digraph = cyclepack::gen_bipartite_tournament(flags.h);
    inst.layers = {{"X", cyclepack::bipartite_tournament_x_layer(flags.h)},
                   {"Y", cyclepack::bipartite_tournament_y_layer(flags.h)}};
    inst.id = "bipartite_tournament(h=" + std::to_string(flags.h) + ")";
  } else if (flags.family == "circular") {
    inst.digraph = cyclepack::gen_circular(flags.p, flags.g);
    inst.id = "circular(p=" + std::to_string(flags.p) + ",g=" +
              std::to_string(flags.g) + ")";
  } else if (flags.family == "complete") {
    inst.digraph = cyclepack::gen_complete_symmetric(flags.m);
    inst.id = "complete_symmetric(m=" + std::to_string(flags.m) + ")";
  } else {
    inst.digraph =
        cyclepack::gen_random_min_outdegree(flags.m, flags.delta, flags.seed);
    inst.id = "random(m=" + std::to_string(flags.m) + ",delta=" +
              std::to_string(flags.delta) + ",seed=" +
              std::to_string(flags.seed) + ")";
  }
  if (flags.pad > 0) {
    inst.digraph = cyclepack::pad_sources(inst.digraph, flags.pad,
                                          flags.pad_degree, flags.pad_seed);
    inst.id += "+sources(" + std::to_string(flags.pad) + "," +
               std::to_string(flags.pad_degree) + ")";
  }
  return inst;
}

// "X", "Y", or a comma list of ids and inclusive ranges like "0-4".
std::vector<Vertex> parse_vertex_set(const std::string& text,
                                     const Instance& inst) {
  if (auto it = inst.layers.find(text); it != inst.layers.end()) {
    return it->second;
  }
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(static_cast<Vertex>(std::stoul(item)));
      } else {
        const auto lo = std::stoul(item.substr(0, dash));
        const auto hi = std::stoul(item.substr(dash + 1));
        for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<Vertex>(v));
      }
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("bad vertex set entry '" + item + "'");
    }
  }
  return out;
}

void emit(const json& j) { std::cout << cyclepack::dump(j); }

json cycle_or_null(const cyclepack::GirthCertificate& cert) {
  return cert.acyclic() ? json(nullptr) : json(cert.witness);
}

void print_report(const cyclepack::VerificationReport& r) {
  std::cout << r.kind << " " << r.instance_id << "\n";
  std::cout << "  vertices " << r.measured.vertex_count << ", arcs "
            << r.measured.arc_count << ", girth "
            << (r.measured.girth ? std::to_string(*r.measured.girth)
                                 : std::string("acyclic"))
            << ", min outdegree " << r.measured.min_outdegree << "\n";
  for (const auto& c : r.claims) {
    std::cout << "  [" << cyclepack::to_string(c.verdict) << "] " << c.id
              << ": predicted " << c.predicted << ", measured "
              << (c.measured ? std::to_string(*c.measured) : std::string("-"))
              << " (" << c.basis << ")";
    if (!c.note.empty()) std::cout << " - " << c.note;
    std::cout << "\n";
  }
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
}

int report_exit(const cyclepack::VerificationReport& r, bool as_json) {
  if (as_json) {
    emit(json(r));
  } else {
    print_report(r);
  }
  return r.has_verdict(cyclepack::Verdict::kRefutationCandidate)
             ? kExitCandidate
             : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-disjoint cycle packing and long-path analysis for "
               "digraphs"};
  app.require_subcommand(1);
  // "-h" is taken by the block-size flag.
  app.set_help_flag("--help", "Print this help message and exit");

  bool as_json = false;
  cyclepack::HarnessOptions harness;

  // generate
  InstanceFlags gen_flags;
  std::string gen_output, gen_dot;
  auto* gen = app.add_subcommand("generate", "Write a digraph as an edge list");
  add_instance_options(gen, gen_flags);
  gen->add_option("--output", gen_output, "Edge-list file (default stdout)");
  gen->add_option("--dot", gen_dot, "Also write DOT to this file");

  // analyze
  InstanceFlags an_flags;
  bool skip_connectivity = false;
  auto* analyze = app.add_subcommand(
      "analyze", "Degrees, girth and strong connectivity");
  add_instance_options(analyze, an_flags);
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->add_flag("--no-connectivity", skip_connectivity,
                    "Skip the strong connectivity computation");

  // pack
  InstanceFlags pack_flags;
  std::uint64_t pack_budget = 20'000'000;
  std::optional<std::size_t> pack_max_len;
  std::string bound_set, bound_mode = "certified";
  std::size_t bound_q = 1;
  auto* pack = app.add_subcommand("pack", "Maximum vertex-disjoint cycle packing");
  add_instance_options(pack, pack_flags);
  pack->add_flag("--json", as_json, "JSON output");
  pack->add_option("--budget", pack_budget, "Search node budget");
  pack->add_option("--max-len", pack_max_len, "Only count cycles up to this length");
  pack->add_option("--bound-set", bound_set,
                   "Counting-bound vertex set: X, Y, or ids like 0-4,7");
  pack->add_option("--q", bound_q, "Minimum hits per cycle on the bound set");
  pack->add_option("--bound-mode", bound_mode, "certified | enumerative")
      ->check(CLI::IsMember({"certified", "enumerative"}));

  // longest-path
  InstanceFlags lp_flags;
  std::uint64_t lp_budget = 200'000'000;
  auto* lp = app.add_subcommand("longest-path", "Exact longest simple path");
  add_instance_options(lp, lp_flags);
  lp->add_flag("--json", as_json, "JSON output");
  lp->add_option("--budget", lp_budget, "Search node budget");

  // probe
  InstanceFlags probe_flags;
  auto* probe = app.add_subcommand(
      "probe", "Structural conditions of a minimal 3-cycle-packing counterexample");
  add_instance_options(probe, probe_flags);
  probe->add_flag("--json", as_json, "JSON output");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a statement on an instance");
  verify->require_subcommand(1);
  verify->add_option("--packing-budget", harness.packing_budget,
                     "Packing search node budget");
  verify->add_option("--path-budget", harness.path_budget,
                     "Longest-path search node budget");
  std::int64_t v_g = 4, v_k = 3, v_t = 0, v_c = 0;
  auto* v_thm2 = verify->add_subcommand(
      "theorem2", "Layered family against f(k,g) = ceil(gk/(g-1))");
  v_thm2->add_option("--g", v_g, "Girth")->required();
  v_thm2->add_option("--k", v_k, "Packing target")->required();
  v_thm2->add_option("--t", v_t, "Deficiency");
  v_thm2->add_option("--c", v_c, "Outdegree shift (even g)");
  v_thm2->add_flag("--json", as_json, "JSON output");
  auto* v_cor2 = verify->add_subcommand(
      "corollary2", "Girth-4 bipartite tournament with outdegree 2k-2");
  v_cor2->add_option("--k", v_k, "Packing target (>= 2)")->required();
  v_cor2->add_flag("--json", as_json, "JSON output");
  auto* v_conj3 = verify->add_subcommand(
      "conjecture3", "Longest path in the even layered family");
  v_conj3->add_option("--g", v_g, "Even girth")->required();
  v_conj3->add_option("--k", v_k, "Packing target")->required();
  v_conj3->add_flag("--json", as_json, "JSON output");
  InstanceFlags bt_flags;
  auto* v_bt = verify->add_subcommand(
      "bt", "Minimum outdegree 2k-1 against k disjoint cycles");
  add_instance_options(v_bt, bt_flags);
  v_bt->add_option("--bt-k", v_k, "Number of disjoint cycles")->required();
  v_bt->add_flag("--json", as_json, "JSON output");

  // search
  std::int64_t s_k = 3, s_m = 12, s_trials = 50;
  std::uint64_t s_seed = 1;
  std::string s_out;
  auto* search = app.add_subcommand(
      "search", "Seeded random sweep for disjoint-cycle refutation candidates");
  search->add_option("--k", s_k, "Number of disjoint cycles");
  search->add_option("--m", s_m, "Vertices per sample");
  search->add_option("--trials", s_trials, "Number of samples");
  search->add_option("--seed", s_seed, "Sweep seed");
  search->add_option("--out-dir", s_out, "Directory for refutation candidates");
  search->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const Instance inst = load_instance(gen_flags);
      if (gen_output.empty()) {
        cyclepack::write_edge_list(std::cout, inst.digraph);
      } else {
        cyclepack::write_edge_list_file(gen_output, inst.digraph);
      }
      if (!gen_dot.empty()) {
        std::ofstream(gen_dot) << cyclepack::to_dot(inst.digraph);
      }
      return kExitOk;
    }

    if (*analyze) {
      const Instance inst = load_instance(an_flags);
      const Digraph& d = inst.digraph;
      const auto cert = cyclepack::girth(d);
      json j{{"schema", cyclepack::kReportSchema},
             {"instance", inst.id},
             {"vertices", d.vertex_count()},
             {"arcs", d.arc_count()},
             {"min_outdegree", cyclepack::min_outdegree(d)},
             {"girth", cert.girth ? json(*cert.girth) : json(nullptr)},
             {"girth_witness", cycle_or_null(cert)},
             {"oriented", !cyclepack::has_digon(d)},
             {"bipartite", cyclepack::bipartition(d).has_value()},
             {"strong_connectivity", nullptr}};
      if (!skip_connectivity && d.vertex_count() >= 2) {
        j["strong_connectivity"] = cyclepack::strong_connectivity(d);
      }
      if (as_json) {
        emit(j);
      } else {
        for (const auto& [key, value] : j.items()) {
          std::cout << key << ": " << value.dump() << "\n";
        }
      }
      return kExitOk;
    }

    if (*pack) {
      const Instance inst = load_instance(pack_flags);
      cyclepack::PackingOptions po;
      po.budget = pack_budget;
      po.max_len = pack_max_len;
      const auto p = cyclepack::max_disjoint_cycles(inst.digraph, po);
      json j = cyclepack::packing_json(p);
      if (!bound_set.empty()) {
        const auto mode = bound_mode == "certified"
                              ? cyclepack::BoundMode::kCertified
                              : cyclepack::BoundMode::kEnumerative;
        const auto b = cyclepack::counting_bound(
            inst.digraph, parse_vertex_set(bound_set, inst), bound_q, mode);
        j["counting_bound"] = b;
        if (b < p.upper_bound) {
          j["upper"] = b;
          j["optimal"] = b == p.lower_bound;
        }
      }
      if (as_json) {
        emit(j);
      } else {
        std::cout << "lower " << j["lower"] << ", upper " << j["upper"]
                  << ", optimal " << j["optimal"] << "\n";
        for (const auto& c : j["cycles"]) std::cout << "  " << c.dump() << "\n";
      }
      return kExitOk;
    }

    if (*lp) {
      const Instance inst = load_instance(lp_flags);
      const auto cert = cyclepack::longest_path_exact(inst.digraph, lp_budget);
      const json j = cyclepack::path_json(cert);
      if (as_json) {
        emit(j);
      } else {
        std::cout << "length " << cert.length << (cert.exact ? " (exact)" : "")
                  << ", upper bound " << cert.upper_bound << "\n  "
                  << j["witness"].dump() << "\n";
      }
      return kExitOk;
    }

    if (*probe) {
      const Instance inst = load_instance(probe_flags);
      const auto report = cyclepack::counterexample_filter(inst.digraph);
      const json j = cyclepack::probe_json(report);
      if (as_json) {
        emit(j);
      } else {
        std::cout << (report.possible_minimal_counterexample
                          ? "passes every condition"
                          : "not a minimal counterexample")
                  << (report.advisory ? " (advisory: min outdegree < 5)" : "")
                  << "\n";
        for (const auto& f : report.failed_conditions) {
          std::cout << "  failed: " << f << "\n";
        }
      }
      return kExitOk;
    }

    if (*verify) {
      if (*v_thm2) {
        return report_exit(
            cyclepack::verify_theorem2_instance(v_g, v_k, v_t, v_c, harness),
            as_json);
      }
      if (*v_cor2) {
        return report_exit(cyclepack::verify_corollary2_instance(v_k, harness),
                           as_json);
      }
      if (*v_conj3) {
        return report_exit(
            cyclepack::verify_conjecture3_instance(v_g, v_k, harness), as_json);
      }
      const Instance inst = load_instance(bt_flags);
      return report_exit(cyclepack::verify_bt(inst.digraph, v_k, inst.id, harness),
                         as_json);
    }

    if (*search) {
      std::optional<std::filesystem::path> out_dir;
      if (!s_out.empty()) out_dir = s_out;
      const auto summary = cyclepack::random_search(s_k, s_m, s_trials, s_seed,
                                                    out_dir, harness);
      const json j = cyclepack::search_json(summary);
      if (as_json) {
        emit(j);
      } else {
        std::cout << "trials " << summary.trials << ": consistent "
                  << summary.consistent << ", inconclusive "
                  << summary.inconclusive << ", refutation candidates "
                  << summary.candidates << "\n";
      }
      return summary.candidates > 0 ? kExitCandidate : kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
