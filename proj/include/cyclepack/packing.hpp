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

#ifndef CYCLEPACK_PACKING_HPP_
#define CYCLEPACK_PACKING_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclepack/digraph.hpp"

namespace cyclepack {

// Simple directed cycle, stored rotated so that the smallest vertex is first.
class Cycle {
 public:
  Cycle() = default;
  // Rotates `vertices` into canonical position; does not check arcs.
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }

  // True iff the cycle is simple and every consecutive pair (and the closing
  // pair) is an arc of d.
  bool is_valid_in(const Digraph& d) const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Orders by length, then lexicographically.
bool shorter_first(const Cycle& a, const Cycle& b);

struct CycleEnumeration {
  std::vector<Cycle> cycles;  // canonical, lexicographically sorted
  bool truncated = false;     // more than `cap` cycles exist
};

// All simple cycles of length <= max_len (unbounded when nullopt), up to
// `cap` of them. Unbounded enumeration uses Johnson's blocking scheme; the
// bounded variant prunes with exact distances back to the root.
CycleEnumeration enumerate_cycles(const Digraph& d,
                                  std::optional<std::size_t> max_len,
                                  std::size_t cap);

// Calls `visit` for each chordless (induced) cycle through `pivot` inside the
// subdigraph induced by `allowed`, in lexicographic order of the path that
// starts at the pivot. Stops when `visit` returns false.
void for_each_chordless_cycle_through(
    const Digraph& d, const std::vector<char>& allowed, Vertex pivot,
    std::optional<std::size_t> max_len,
    const std::function<bool(const std::vector<Vertex>&)>& visit);

// Every chordless cycle of d, canonical and sorted.
std::vector<Cycle> chordless_cycles(const Digraph& d);

struct Packing {
  std::vector<Cycle> cycles;
  std::size_t lower_bound = 0;  // == cycles.size()
  std::size_t upper_bound = 0;
  bool optimal = false;
  std::uint64_t expansions = 0;
};

struct PackingOptions {
  // Search-tree node expansions before the solver gives up.
  std::uint64_t budget = 20'000'000;
  // Only cycles of at most this length count.
  std::optional<std::size_t> max_len;
  // Return as soon as a packing of this size is known.
  std::optional<std::size_t> stop_at;
};

// Maximum vertex-disjoint cycle packing by branch and bound: strong
// components are solved independently, and inside a component the search
// branches on the smallest vertex, trying each chordless cycle through it
// (shortest first) and then its exclusion. Upper bounds combine
// floor(|C| / girth(C)) with the bipartite side-count bound per component.
Packing max_disjoint_cycles(const Digraph& d, const PackingOptions& options = {});

// Thrown when no mode can establish that every cycle meets S at least q
// times.
class PremiseUnverified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BoundMode { kCertified, kEnumerative };

// floor(|S| / q), valid because every cycle of d meets S in >= q vertices.
// Certified mode proves that by bipartite alternation across S plus
// girth >= 2q; enumerative mode checks every cycle.
std::size_t counting_bound(const Digraph& d, const std::vector<Vertex>& s,
                           std::size_t q, BoundMode mode);

struct ArcRemovalDelta {
  Packing with_arc;
  Packing without_arc;
  bool exact = false;  // both packings optimal
  // exact: p_with - p_without in {0, 1}; otherwise the bound-level check
  // lower(with) <= upper(without) + 1.
  bool holds = false;
};

ArcRemovalDelta packing_delta_under_arc_removal(const Digraph& d, Arc arc,
                                                std::uint64_t budget);

}  // namespace cyclepack

#endif  // CYCLEPACK_PACKING_HPP_
