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

#include "cyclepack/probes.hpp"

#include <algorithm>

namespace cyclepack {

namespace {

bool sorted_lists_intersect(std::span<const Vertex> a,
                            std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::optional<Cycle> shortest_cycle_among(const Digraph& d,
                                          std::span<const Vertex> vertices) {
  const std::vector<Vertex> nbhd(vertices.begin(), vertices.end());
  const auto cert = girth(d.induced(nbhd));
  if (cert.acyclic()) return std::nullopt;
  std::vector<Vertex> mapped;
  for (Vertex v : cert.witness) mapped.push_back(nbhd[v]);
  return Cycle(std::move(mapped));
}

std::optional<Cycle> find_four_cycle(const Digraph& d) {
  for (Vertex a = 0; a < d.vertex_count(); ++a) {
    for (Vertex b : d.out_neighbors(a)) {
      if (b < a) continue;
      for (Vertex c : d.out_neighbors(b)) {
        if (c <= a) continue;
        for (Vertex e : d.out_neighbors(c)) {
          if (e <= a || e == b || e == c) continue;
          if (d.has_arc(e, a)) return Cycle({a, b, c, e});
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Arc> find_undominated_arc(const Digraph& d) {
  for (const Arc& a : d.arcs()) {
    if (!sorted_lists_intersect(d.in_neighbors(a.from),
                                d.in_neighbors(a.to))) {
      return a;
    }
  }
  return std::nullopt;
}

std::optional<Arc> find_digon(const Digraph& d) {
  for (const Arc& a : d.arcs()) {
    if (a.from < a.to && d.has_arc(a.to, a.from)) return a;
  }
  return std::nullopt;
}

std::optional<Cycle> find_triangle(const Digraph& d) {
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    for (Vertex v : d.out_neighbors(u)) {
      if (v < u) continue;
      for (Vertex w : d.out_neighbors(v)) {
        if (w > u && w != v && d.has_arc(w, u)) return Cycle({u, v, w});
      }
    }
  }
  return std::nullopt;
}

std::optional<Cycle> inneighborhood_induced_cycle(const Digraph& d, Vertex v) {
  return shortest_cycle_among(d, d.in_neighbors(v));
}

std::optional<Cycle> outneighborhood_cycle(const Digraph& d, Vertex v) {
  return shortest_cycle_among(d, d.out_neighbors(v));
}

AuxiliaryDigraph build_dprime(const Digraph& d) {
  AuxiliaryDigraph out;
  Digraph::Builder b(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    const auto in = d.in_neighbors(v);
    const std::vector<Vertex> nbhd(in.begin(), in.end());
    const Digraph sub = d.induced(nbhd);
    std::vector<char> on_chordless(nbhd.size(), 0);
    if (nbhd.size() <= kChordlessNeighborhoodLimit) {
      for (const Cycle& c : chordless_cycles(sub)) {
        for (Vertex u : c.vertices()) on_chordless[u] = 1;
      }
    } else {
      out.complete = false;
      const auto cert = girth(sub);
      for (Vertex u : cert.witness) on_chordless[u] = 1;
    }
    for (std::size_t i = 0; i < nbhd.size(); ++i) {
      if (on_chordless[i]) b.add_arc(nbhd[i], v);
    }
  }
  out.digraph = std::move(b).build();
  return out;
}

DegreeProfile degree_profile(const Digraph& d) {
  DegreeProfile p;
  if (d.vertex_count() == 0) return p;
  p.min_in = p.min_out = d.vertex_count();
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    p.min_in = std::min(p.min_in, d.in_degree(v));
    p.max_in = std::max(p.max_in, d.in_degree(v));
    p.min_out = std::min(p.min_out, d.out_degree(v));
    p.max_out = std::max(p.max_out, d.out_degree(v));
  }
  return p;
}

ProbeReport counterexample_filter(const Digraph& d) {
  ProbeReport r;
  r.min_outdegree = min_outdegree(d);
  r.advisory = r.min_outdegree < 5;
  auto fail = [&](const char* condition) {
    r.failed_conditions.emplace_back(condition);
  };

  r.digon = find_digon(d);
  if (r.digon) fail("no_digon");

  r.triangle = find_triangle(d);
  if (r.triangle) fail("no_triangle");

  r.undominated_arc = find_undominated_arc(d);
  if (r.undominated_arc) fail("every_arc_dominated");

  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (!inneighborhood_induced_cycle(d, v)) {
      r.inneighborhood_acyclic_vertex = v;
      fail("every_inneighborhood_cyclic");
      break;
    }
  }

  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (auto c = outneighborhood_cycle(d, v)) {
      r.outneighborhood_cycle_vertex.emplace(v, std::move(*c));
      fail("every_outneighborhood_acyclic");
      break;
    }
  }

  if (d.vertex_count() >= 2) r.strong_connectivity = strong_connectivity(d);
  if (!r.strong_connectivity || *r.strong_connectivity < 3) {
    fail("strong_connectivity_at_least_3");
  }

  const AuxiliaryDigraph aux = build_dprime(d);
  const Digraph& dp = aux.digraph;
  r.dprime_complete = aux.complete;
  r.dprime_profile = degree_profile(dp);
  if (!r.dprime_profile.regular(4)) fail("dprime_4_regular");

  r.dprime_4cycle = find_four_cycle(dp);
  if (r.dprime_4cycle) fail("dprime_no_4cycle");

  // The successor of u on its chordless cycle in N^-(v) is a common vertex of
  // N^+(u) and N^-_{D'}(v); this holds for any digraph.
  for (const Arc& a : dp.arcs()) {
    if (!sorted_lists_intersect(d.out_neighbors(a.from),
                                dp.in_neighbors(a.to))) {
      r.dprime_successor_property = false;
      r.dprime_successor_violation = a;
      break;
    }
  }

  r.possible_minimal_counterexample = r.failed_conditions.empty();
  return r;
}

bool witnesses_hold(const Digraph& d, const ProbeReport& r) {
  auto listed = [&](const std::string& name) {
    return std::find(r.failed_conditions.begin(), r.failed_conditions.end(),
                     name) != r.failed_conditions.end();
  };
  if (r.digon) {
    if (!d.has_arc(r.digon->from, r.digon->to) ||
        !d.has_arc(r.digon->to, r.digon->from) || !listed("no_digon")) {
      return false;
    }
  } else if (has_digon(d)) {
    return false;
  }
  if (r.triangle &&
      (r.triangle->length() != 3 || !r.triangle->is_valid_in(d))) {
    return false;
  }
  if (r.undominated_arc) {
    const Arc a = *r.undominated_arc;
    if (!d.has_arc(a.from, a.to)) return false;
    for (Vertex w = 0; w < d.vertex_count(); ++w) {
      if (d.has_arc(w, a.from) && d.has_arc(w, a.to)) return false;
    }
  }
  if (r.inneighborhood_acyclic_vertex) {
    const auto in = d.in_neighbors(*r.inneighborhood_acyclic_vertex);
    const std::vector<Vertex> nbhd(in.begin(), in.end());
    if (!girth(d.induced(nbhd)).acyclic()) return false;
  }
  if (r.outneighborhood_cycle_vertex) {
    const auto& [v, c] = *r.outneighborhood_cycle_vertex;
    if (!c.is_valid_in(d)) return false;
    for (Vertex u : c.vertices()) {
      if (!d.has_arc(v, u)) return false;
    }
  }
  const Digraph dp = build_dprime(d).digraph;
  for (const Arc& a : dp.arcs()) {
    if (!d.has_arc(a.from, a.to)) return false;
  }
  if (r.dprime_4cycle &&
      (r.dprime_4cycle->length() != 4 || !r.dprime_4cycle->is_valid_in(dp))) {
    return false;
  }
  return r.possible_minimal_counterexample == r.failed_conditions.empty();
}

}  // namespace cyclepack
