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

#ifndef CYCLEPACK_PATHS_HPP_
#define CYCLEPACK_PATHS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclepack/digraph.hpp"

namespace cyclepack {

struct PathCertificate {
  std::size_t length = 0;       // arcs on the witness
  std::vector<Vertex> witness;  // simple directed path
  bool exact = false;           // no longer simple path exists
  std::size_t upper_bound = 0;  // == length when exact
  std::uint64_t expansions = 0;
};

// Upper bound on simple path length (in arcs) from bipartite alternation:
// in a weak component with sides of sizes a <= b a path visits at most
// min(2a + 1, a + b) vertices. nullopt when the digraph is not bipartite.
std::optional<std::size_t> alternation_path_bound(const Digraph& d);

// The tighter of alternation_path_bound and vertex_count - 1.
std::size_t structural_path_bound(const Digraph& d);

// Exhaustive depth-first search over simple paths, start vertices ascending
// and successors ascending, pruned by the number of vertices still reachable
// through unvisited vertices. The first longest path found is the witness.
// `budget` counts search-tree nodes.
PathCertificate longest_path_exact(const Digraph& d,
                                   std::uint64_t budget = 200'000'000);

bool is_simple_path(const Digraph& d, const std::vector<Vertex>& path);

}  // namespace cyclepack

#endif  // CYCLEPACK_PATHS_HPP_
