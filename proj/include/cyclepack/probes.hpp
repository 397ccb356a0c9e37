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

#ifndef CYCLEPACK_PROBES_HPP_
#define CYCLEPACK_PROBES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/digraph.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

// Structural predicates that any smallest digraph with minimum out-degree 5
// and no 3 disjoint cycles would have to satisfy. Each probe is total; only
// counterexample_filter interprets them.

// First arc uv (in arc order) with no w such that w->u and w->v.
std::optional<Arc> find_undominated_arc(const Digraph& d);

// First digon as (u, v) with u < v.
std::optional<Arc> find_digon(const Digraph& d);

// Lexicographically first directed triangle.
std::optional<Cycle> find_triangle(const Digraph& d);

// Shortest cycle of the subdigraph induced by the in-neighbours of v (a
// shortest cycle is chordless, hence induced), in original ids.
std::optional<Cycle> inneighborhood_induced_cycle(const Digraph& d, Vertex v);

// Shortest cycle of the subdigraph induced by the out-neighbours of v.
std::optional<Cycle> outneighborhood_cycle(const Digraph& d, Vertex v);

// In-neighbourhoods larger than this fall back to shortest-cycle detection.
inline constexpr std::size_t kChordlessNeighborhoodLimit = 12;

struct AuxiliaryDigraph {
  Digraph digraph;
  // false when some in-neighbourhood exceeded kChordlessNeighborhoodLimit and
  // only shortest cycles were used to decide membership.
  bool complete = true;
};

// Spanning subdigraph keeping uv iff u lies on a chordless cycle of the
// subdigraph induced by the in-neighbours of v.
AuxiliaryDigraph build_dprime(const Digraph& d);

struct DegreeProfile {
  std::size_t min_in = 0, max_in = 0, min_out = 0, max_out = 0;
  bool regular(std::size_t degree) const {
    return min_in == degree && max_in == degree && min_out == degree &&
           max_out == degree;
  }
};

DegreeProfile degree_profile(const Digraph& d);

struct ProbeReport {
  bool advisory = false;  // min out-degree < 5: outside the intended setting
  std::size_t min_outdegree = 0;

  std::optional<Arc> digon;
  std::optional<Cycle> triangle;
  std::optional<Arc> undominated_arc;
  std::optional<Vertex> inneighborhood_acyclic_vertex;
  std::optional<std::pair<Vertex, Cycle>> outneighborhood_cycle_vertex;
  std::optional<std::size_t> strong_connectivity;  // nullopt below 2 vertices
  DegreeProfile dprime_profile;
  bool dprime_complete = true;
  std::optional<Cycle> dprime_4cycle;
  // Every D' arc uv has an out-neighbour of u among the D' in-neighbours of v.
  bool dprime_successor_property = true;
  std::optional<Arc> dprime_successor_violation;

  std::vector<std::string> failed_conditions;
  // True iff every condition passed; the digraph then needs exact packing.
  bool possible_minimal_counterexample = false;
};

ProbeReport counterexample_filter(const Digraph& d);

// Re-checks every witness in `report` against d.
bool witnesses_hold(const Digraph& d, const ProbeReport& report);

}  // namespace cyclepack

#endif  // CYCLEPACK_PROBES_HPP_
