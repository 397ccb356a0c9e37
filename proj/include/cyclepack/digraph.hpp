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

#ifndef CYCLEPACK_DIGRAPH_HPP_
#define CYCLEPACK_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cyclepack {

using Vertex = std::uint32_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Thrown when a digraph would violate simplicity (loop, parallel arc) or
// reference a vertex out of range.
class InvalidDigraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple digraph on vertices 0..vertex_count()-1. Loops and
// parallel arcs are rejected; 2-cycles are allowed. Out- and in-lists are
// sorted ascending.
class Digraph {
 public:
  class Builder;

  Digraph() = default;

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  // Arcs in lexicographic (from, to) order.
  std::span<const Arc> arcs() const { return arcs_; }

  bool has_arc(Vertex u, Vertex v) const;

  Digraph transpose() const;
  Digraph without_arc(Arc arc) const;

  // Subdigraph induced by `vertices` (sorted, distinct), relabelled to
  // 0..vertices.size()-1 preserving order.
  Digraph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Arc> arcs_;
};

// Collects arcs, then validates and seals them into a Digraph.
class Digraph::Builder {
 public:
  explicit Builder(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  Builder& add_arc(Vertex u, Vertex v);
  Builder& add_vertices(std::size_t count);
  std::size_t vertex_count() const { return vertex_count_; }

  // Throws InvalidDigraph on loops, duplicate arcs or out-of-range ids.
  Digraph build();

 private:
  std::size_t vertex_count_;
  std::vector<Arc> arcs_;
};

Digraph from_arcs(std::size_t vertex_count, std::span<const Arc> arcs);

// Minimum out-degree; 0 for the empty digraph.
std::size_t min_outdegree(const Digraph& d);

bool has_digon(const Digraph& d);

// A 2-colouring of the underlying undirected graph, or nullopt when it has an
// odd undirected cycle. Colour 0 is assigned to the smallest vertex of each
// weak component.
std::optional<std::vector<std::uint8_t>> bipartition(const Digraph& d);

// Girth with a witness cycle. The witness is the lexicographically smallest
// shortest cycle, rotated so that its smallest vertex comes first.
struct GirthCertificate {
  std::optional<std::size_t> girth;  // nullopt: acyclic
  std::vector<Vertex> witness;

  bool acyclic() const { return !girth.has_value(); }
};

GirthCertificate girth(const Digraph& d);

// Girth restricted to the subdigraph induced by vertices with allowed[v].
std::optional<std::size_t> girth_within(const Digraph& d,
                                        const std::vector<char>& allowed);

// Strongly connected components of the subdigraph induced by `allowed`
// (all vertices when empty). Each component is sorted; components are ordered
// by smallest vertex.
std::vector<std::vector<Vertex>> strong_components(
    const Digraph& d, const std::vector<char>& allowed = {});

// Vertex connectivity in the Menger sense: the minimum over ordered pairs
// (u, v) with no arc u->v of the maximum number of internally disjoint u-v
// paths; vertex_count()-1 when every ordered pair is an arc. Zero iff the
// digraph is not strongly connected. Requires vertex_count() >= 2.
std::size_t strong_connectivity(const Digraph& d);

// Maximum number of internally vertex-disjoint paths from s to t (s != t, no
// arc s->t), stopping early once `limit` paths are found.
std::size_t disjoint_path_count(const Digraph& d, Vertex s, Vertex t,
                                std::size_t limit);

}  // namespace cyclepack

#endif  // CYCLEPACK_DIGRAPH_HPP_
