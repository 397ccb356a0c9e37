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

#include "cyclepack/packing.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace cyclepack {

namespace {

using Mask = std::vector<char>;

std::string key_of(const Mask& mask) { return {mask.begin(), mask.end()}; }

struct SubResult {
  std::size_t value = 0;
  std::vector<Cycle> cycles;
  bool exact = true;
};

class PackingSolver {
 public:
  PackingSolver(const Digraph& d, const PackingOptions& options)
      : d_(d), options_(options) {}

  Packing solve() {
    Mask all(d_.vertex_count(), 1);
    const std::size_t root_bound = bound(all);

    Packing out;
    SubResult greedy = greedy_packing(all);
    if (options_.stop_at && greedy.value >= *options_.stop_at) {
      out.cycles = std::move(greedy.cycles);
      out.lower_bound = out.cycles.size();
      out.upper_bound = root_bound;
      out.optimal = out.lower_bound == out.upper_bound;
      return finish(std::move(out));
    }

    SubResult best = solve_mask(all);
    if (greedy.value > best.value) {
      best.value = greedy.value;
      best.cycles = std::move(greedy.cycles);
    }
    out.cycles = std::move(best.cycles);
    out.lower_bound = out.cycles.size();
    out.optimal = best.exact && !aborted_;
    out.upper_bound = out.optimal ? out.lower_bound : root_bound;
    if (out.lower_bound == out.upper_bound) out.optimal = true;
    return finish(std::move(out));
  }

 private:
  Packing finish(Packing p) {
    p.expansions = expansions_;
    std::sort(p.cycles.begin(), p.cycles.end());
    Mask used(d_.vertex_count(), 0);
    for (const Cycle& c : p.cycles) {
      if (!c.is_valid_in(d_)) throw std::logic_error("packing holds a non-cycle");
      for (Vertex v : c.vertices()) {
        if (used[v]) throw std::logic_error("packing cycles overlap");
        used[v] = 1;
      }
    }
    if (p.lower_bound > p.upper_bound) {
      throw std::logic_error("packing lower bound exceeds upper bound");
    }
    return p;
  }

  std::vector<std::vector<Vertex>> cyclic_components(const Mask& mask) const {
    auto comps = strong_components(d_, mask);
    std::erase_if(comps, [](const auto& c) { return c.size() < 2; });
    return comps;
  }

  std::size_t component_bound(const std::vector<Vertex>& comp) {
    Mask mask(d_.vertex_count(), 0);
    for (Vertex v : comp) mask[v] = 1;
    const auto key = key_of(mask);
    if (auto it = bound_cache_.find(key); it != bound_cache_.end()) {
      return it->second;
    }
    std::size_t b = 0;
    if (const auto g = girth_within(d_, mask);
        g && (!options_.max_len || *g <= *options_.max_len)) {
      b = comp.size() / *g;
      // In a bipartite component every cycle alternates sides and has even
      // length >= g, so it spends g/2 vertices of each side.
      if (const auto colour = bipartition(d_.induced(comp))) {
        const auto ones = static_cast<std::size_t>(
            std::count(colour->begin(), colour->end(), 1));
        const std::size_t smaller = std::min(ones, comp.size() - ones);
        b = std::min(b, smaller / (*g / 2));
      }
    }
    if (bound_cache_.size() < kCacheLimit) bound_cache_.emplace(key, b);
    return b;
  }

  std::size_t bound(const Mask& mask) {
    std::size_t total = 0;
    for (const auto& comp : cyclic_components(mask)) {
      total += component_bound(comp);
    }
    return total;
  }

  SubResult solve_mask(const Mask& mask) {
    SubResult total;
    for (const auto& comp : cyclic_components(mask)) {
      SubResult r = solve_component(comp);
      total.value += r.value;
      total.exact = total.exact && r.exact;
      for (Cycle& c : r.cycles) total.cycles.push_back(std::move(c));
    }
    return total;
  }

  SubResult solve_component(const std::vector<Vertex>& comp) {
    Mask mask(d_.vertex_count(), 0);
    for (Vertex v : comp) mask[v] = 1;
    const auto key = key_of(mask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    if (aborted_ || ++expansions_ > options_.budget) {
      aborted_ = true;
      SubResult r = greedy_packing(mask);
      r.exact = false;
      return r;
    }

    const std::size_t ub = component_bound(comp);
    SubResult best;
    if (ub == 0) return best;

    const Vertex pivot = comp.front();
    std::vector<Cycle> through;
    for_each_chordless_cycle_through(d_, mask, pivot, options_.max_len,
                                     [&](const std::vector<Vertex>& c) {
                                       through.emplace_back(c);
                                       return true;
                                     });
    std::sort(through.begin(), through.end(), shorter_first);

    for (const Cycle& c : through) {
      Mask rest = mask;
      for (Vertex v : c.vertices()) rest[v] = 0;
      if (1 + bound(rest) <= best.value) continue;
      SubResult r = solve_mask(rest);
      best.exact = best.exact && r.exact;
      if (1 + r.value > best.value) {
        best.value = 1 + r.value;
        best.cycles = std::move(r.cycles);
        best.cycles.push_back(c);
      }
      if (best.value == ub || aborted_) break;
    }
    if (best.value < ub && !aborted_) {
      Mask rest = mask;
      rest[pivot] = 0;
      if (bound(rest) > best.value) {
        SubResult r = solve_mask(rest);
        best.exact = best.exact && r.exact;
        if (r.value > best.value) best = std::move(r);
      }
    }
    if (aborted_) best.exact = false;
    if (best.exact && memo_.size() < kCacheLimit) memo_.emplace(key, best);
    return best;
  }

  // Repeatedly removes a shortest cycle; a quick lower bound.
  SubResult greedy_packing(Mask mask) const {
    SubResult r;
    r.exact = false;
    while (true) {
      std::optional<Cycle> pick;
      for (const auto& comp : cyclic_components(mask)) {
        const Digraph sub = d_.induced(comp);
        const auto cert = girth(sub);
        if (cert.acyclic()) continue;
        if (options_.max_len && *cert.girth > *options_.max_len) continue;
        std::vector<Vertex> mapped;
        for (Vertex v : cert.witness) mapped.push_back(comp[v]);
        Cycle c(std::move(mapped));
        if (!pick || shorter_first(c, *pick)) pick = std::move(c);
      }
      if (!pick) break;
      for (Vertex v : pick->vertices()) mask[v] = 0;
      r.cycles.push_back(std::move(*pick));
      ++r.value;
    }
    return r;
  }

  static constexpr std::size_t kCacheLimit = 4'000'000;

  const Digraph& d_;
  PackingOptions options_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
  std::unordered_map<std::string, SubResult> memo_;
  std::unordered_map<std::string, std::size_t> bound_cache_;
};

}  // namespace

Packing max_disjoint_cycles(const Digraph& d, const PackingOptions& options) {
  return PackingSolver(d, options).solve();
}

std::size_t counting_bound(const Digraph& d, const std::vector<Vertex>& s,
                           std::size_t q, BoundMode mode) {
  if (q == 0) throw std::invalid_argument("q must be >= 1");
  std::vector<char> in_s(d.vertex_count(), 0);
  for (Vertex v : s) {
    if (v >= d.vertex_count()) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " of S is not in the digraph");
    }
    if (in_s[v]) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " appears twice in S");
    }
    in_s[v] = 1;
  }

  if (mode == BoundMode::kCertified) {
    for (const Arc& a : d.arcs()) {
      if (in_s[a.from] == in_s[a.to]) {
        throw PremiseUnverified(
            "arc " + std::to_string(a.from) + "->" + std::to_string(a.to) +
            " does not cross S, so cycles need not alternate");
      }
    }
    const auto cert = girth(d);
    if (!cert.acyclic() && *cert.girth < 2 * q) {
      throw PremiseUnverified("girth " + std::to_string(*cert.girth) +
                              " is below 2q = " + std::to_string(2 * q));
    }
    return s.size() / q;
  }

  constexpr std::size_t kEnumerationCap = 2'000'000;
  const auto all = enumerate_cycles(d, std::nullopt, kEnumerationCap);
  if (all.truncated) {
    throw PremiseUnverified("more than " + std::to_string(kEnumerationCap) +
                            " cycles; enumeration is not feasible");
  }
  for (const Cycle& c : all.cycles) {
    const auto hits = std::count_if(c.vertices().begin(), c.vertices().end(),
                                    [&](Vertex v) { return in_s[v] != 0; });
    if (static_cast<std::size_t>(hits) < q) {
      throw PremiseUnverified("a cycle of length " +
                              std::to_string(c.length()) + " meets S in only " +
                              std::to_string(hits) + " vertices");
    }
  }
  return s.size() / q;
}

ArcRemovalDelta packing_delta_under_arc_removal(const Digraph& d, Arc arc,
                                                std::uint64_t budget) {
  const Digraph reduced = d.without_arc(arc);
  PackingOptions options;
  options.budget = budget;
  ArcRemovalDelta out;
  out.with_arc = max_disjoint_cycles(d, options);
  out.without_arc = max_disjoint_cycles(reduced, options);
  out.exact = out.with_arc.optimal && out.without_arc.optimal;
  if (out.exact) {
    const auto a = out.with_arc.lower_bound;
    const auto b = out.without_arc.lower_bound;
    out.holds = a >= b && a - b <= 1;
  } else {
    out.holds = out.with_arc.lower_bound <= out.without_arc.upper_bound + 1;
  }
  return out;
}

}  // namespace cyclepack
