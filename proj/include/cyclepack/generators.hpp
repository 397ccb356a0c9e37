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

#ifndef CYCLEPACK_GENERATORS_HPP_
#define CYCLEPACK_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "cyclepack/digraph.hpp"

namespace cyclepack {

// ceil(g * k / (g - 1)), the minimum out-degree threshold of the girth-g
// disjoint-cycle conjecture.
std::int64_t girth_outdegree_threshold(std::int64_t g, std::int64_t k);

enum class Family { kEvenGirth, kOddGirth };

// Parameters of the layered families. Vertex numbering is frozen:
// x_i = i for i in [0, n), and the j-th vertex of block Y_i is n + i*h + j.
struct ConstructionParams {
  Family family = Family::kEvenGirth;
  std::int64_t g = 4;  // target girth
  std::int64_t k = 1;  // packing target
  std::int64_t c = 0;  // outdegree shift (even family only)
  std::int64_t t = 0;  // deficiency, reporting only
  std::int64_t h = 0;  // derived: block size and out-degree
  std::int64_t n = 0;  // derived: size of the X layer

  // Throw std::invalid_argument on parity or range violations.
  static ConstructionParams even(std::int64_t g, std::int64_t k,
                                 std::int64_t c = 0, std::int64_t t = 0);
  static ConstructionParams odd(std::int64_t g, std::int64_t k,
                                std::int64_t t = 0);

  std::int64_t r() const { return (g - 1) / 2; }
  std::size_t vertex_count() const {
    return static_cast<std::size_t>(n * (h + 1));
  }
  Vertex x(std::int64_t i) const { return static_cast<Vertex>(i); }
  Vertex y(std::int64_t block, std::int64_t j) const {
    return static_cast<Vertex>(n + block * h + j);
  }
  std::vector<Vertex> x_layer() const;
  std::vector<Vertex> y_layer() const;
};

// x_i -> Y_i and Y_i -> {x_{i+1}, ..., x_{i+h}} (indices mod n), with
// h = ceil(gk/(g-1)) + c and n = (g/2 - 1)h + 1.
Digraph gen_even_girth(std::int64_t g, std::int64_t k, std::int64_t c = 0);
Digraph gen_layered(const ConstructionParams& params, bool with_chord);

enum class OddVariant { kWithChord, kWithoutChord };

// Same layering with n = rh + 1 for g = 2r + 1. kWithChord adds the single
// arc x_{rh} -> x_0.
Digraph gen_odd_girth(std::int64_t g, std::int64_t k, OddVariant variant);

// Bipartite tournament on X = X_1..X_{h+1} (|X_i| = h) and Y = y_1..y_{h+1}:
// X_i -> Y \ {y_i} and y_i -> X_i. X_i occupies ids (i-1)h .. ih-1 and y_i is
// h(h+1) + i - 1.
Digraph gen_bipartite_tournament(std::int64_t h);
std::vector<Vertex> bipartite_tournament_x_layer(std::int64_t h);
std::vector<Vertex> bipartite_tournament_y_layer(std::int64_t h);

// Circular digraph on p(g-1)+1 vertices with i -> i+1, ..., i+p.
Digraph gen_circular(std::int64_t p, std::int64_t g);

Digraph gen_complete_symmetric(std::int64_t m);

// Appends s source vertices, each with d out-arcs into distinct vertices of
// `base` chosen from `seed`. Requires 1 <= d <= base.vertex_count().
Digraph pad_sources(const Digraph& base, std::int64_t s, std::int64_t d,
                    std::uint64_t seed);

// Every vertex gets exactly `delta` distinct out-neighbours.
Digraph gen_random_min_outdegree(std::int64_t m, std::int64_t delta,
                                 std::uint64_t seed);

}  // namespace cyclepack

#endif  // CYCLEPACK_GENERATORS_HPP_
