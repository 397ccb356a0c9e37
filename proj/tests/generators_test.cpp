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

#include <gtest/gtest.h>

#include <set>

#include "cyclepack/digraph.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/io.hpp"
#include "cyclepack/packing.hpp"
#include "oracles.hpp"

namespace cyclepack {
namespace {

TEST(Threshold, CeilingOfGkOverGMinusOne) {
  EXPECT_EQ(girth_outdegree_threshold(4, 3), 4);
  EXPECT_EQ(girth_outdegree_threshold(4, 5), 7);
  EXPECT_EQ(girth_outdegree_threshold(3, 2), 3);
  EXPECT_EQ(girth_outdegree_threshold(6, 2), 3);
  EXPECT_EQ(girth_outdegree_threshold(2, 3), 6);
}

TEST(EvenGirth, SizesAndDegrees) {
  const auto p = ConstructionParams::even(4, 3);
  EXPECT_EQ(p.h, 4);
  EXPECT_EQ(p.n, 5);
  const Digraph d = gen_even_girth(4, 3);
  EXPECT_EQ(d.vertex_count(), 25u);
  EXPECT_EQ(d.arc_count(), static_cast<std::size_t>(p.n * p.h * (p.h + 1)));
  for (Vertex v = 0; v < d.vertex_count(); ++v) EXPECT_EQ(d.out_degree(v), 4u);
}

TEST(EvenGirth, ShiftedConstruction) {
  const auto p = ConstructionParams::even(4, 5, 1);
  EXPECT_EQ(p.h, 8);
  EXPECT_EQ(p.n, 9);
  EXPECT_EQ(min_outdegree(gen_even_girth(4, 5, 1)), 8u);
}

TEST(EvenGirth, GirthIsTargetWithLayerAlternatingWitness) {
  const auto p = ConstructionParams::even(4, 3);
  const Digraph d = gen_layered(p, false);
  const auto cert = girth(d);
  ASSERT_EQ(cert.girth, 4u);
  // The lexicographically smallest 4-cycle.
  EXPECT_EQ(cert.witness, (std::vector<Vertex>{0, 5, 1, 9}));
  // The cycle x_0, y in Y_0, x_h, y in Y_h also closes.
  EXPECT_TRUE(oracle::is_cycle_in(
      d, {p.x(0), p.y(0, 0), p.x(p.h), p.y(p.h, 0)}));
  for (std::int64_t g : {4, 6, 8}) {
    for (std::int64_t k : {1, 2, 3}) {
      EXPECT_EQ(girth(gen_even_girth(g, k)).girth, static_cast<std::size_t>(g))
          << "g=" << g << " k=" << k;
    }
  }
}

TEST(EvenGirth, RejectsBadParameters) {
  EXPECT_THROW(gen_even_girth(5, 3), std::invalid_argument);
  EXPECT_THROW(gen_even_girth(2, 3), std::invalid_argument);
  EXPECT_THROW(gen_even_girth(4, 0), std::invalid_argument);
  EXPECT_THROW(gen_even_girth(4, 3, -1), std::invalid_argument);
}

TEST(OddGirth, WithChord) {
  const auto p = ConstructionParams::odd(3, 2);
  EXPECT_EQ(p.h, 3);
  EXPECT_EQ(p.n, 4);
  const Digraph d = gen_odd_girth(3, 2, OddVariant::kWithChord);
  EXPECT_EQ(d.vertex_count(), 16u);
  const auto cert = girth(d);
  EXPECT_EQ(cert.girth, 3u);
  EXPECT_EQ(cert.witness, (std::vector<Vertex>{p.x(0), p.y(0, 0), p.x(3)}));
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    EXPECT_EQ(d.out_degree(v), v == p.x(3) ? 4u : 3u) << "vertex " << v;
  }
}

TEST(OddGirth, WithoutChordIsOneArcLess) {
  const Digraph with = gen_odd_girth(3, 2, OddVariant::kWithChord);
  const Digraph without = gen_odd_girth(3, 2, OddVariant::kWithoutChord);
  EXPECT_EQ(girth(without).girth, 4u);
  EXPECT_EQ(with.without_arc({3, 0}), without);
  for (std::int64_t g : {3, 5, 7}) {
    EXPECT_EQ(girth(gen_odd_girth(g, 2, OddVariant::kWithChord)).girth,
              static_cast<std::size_t>(g));
    EXPECT_EQ(girth(gen_odd_girth(g, 2, OddVariant::kWithoutChord)).girth,
              static_cast<std::size_t>(g + 1));
  }
  EXPECT_THROW(gen_odd_girth(4, 2, OddVariant::kWithChord), std::invalid_argument);
}

TEST(BipartiteTournament, SmallCases) {
  const Digraph d = gen_bipartite_tournament(2);
  EXPECT_EQ(d.vertex_count(), 9u);
  EXPECT_EQ(bipartite_tournament_x_layer(2).size(), 6u);
  EXPECT_EQ(bipartite_tournament_y_layer(2).size(), 3u);
  EXPECT_EQ(min_outdegree(d), 2u);
  EXPECT_EQ(girth(d).girth, 4u);
  const Digraph one = gen_bipartite_tournament(1);
  EXPECT_EQ(girth(one).girth, oracle::girth(one));
}

TEST(BipartiteTournament, EveryCrossPairJoinedOnce) {
  for (std::int64_t h = 1; h <= 4; ++h) {
    const Digraph d = gen_bipartite_tournament(h);
    const auto y_layer = bipartite_tournament_y_layer(h);
    const std::set<Vertex> ys(y_layer.begin(), y_layer.end());
    for (Vertex x : bipartite_tournament_x_layer(h)) {
      for (Vertex y : ys) {
        EXPECT_NE(d.has_arc(x, y), d.has_arc(y, x));
      }
    }
    for (const Arc& a : d.arcs()) EXPECT_NE(ys.count(a.from), ys.count(a.to));
    EXPECT_EQ(min_outdegree(d), static_cast<std::size_t>(h));
    if (h >= 2) {
      EXPECT_EQ(girth(d).girth, 4u);
    }
  }
}

TEST(Circular, Examples) {
  const Digraph d = gen_circular(2, 3);
  EXPECT_EQ(d.vertex_count(), 5u);
  EXPECT_EQ(girth(d).girth, 3u);
  const Digraph c5 = gen_circular(1, 5);
  EXPECT_EQ(c5.vertex_count(), 5u);
  EXPECT_EQ(c5.arc_count(), 5u);
  EXPECT_EQ(girth(c5).girth, 5u);
  // p = floor(gk/(g-1)) = 4 at g = 3, k = 3 gives n = 9 = gk, which holds the
  // three disjoint triangles {0,3,6}, {1,4,7}, {2,5,8}.
  const Digraph c43 = gen_circular(4, 3);
  EXPECT_EQ(max_disjoint_cycles(c43).lower_bound, 3u);
  EXPECT_EQ(oracle::max_packing(c43), 3u);
  EXPECT_TRUE(oracle::is_cycle_in(c43, {0, 3, 6}));
}

// With p = ceil(gk/(g-1)) - 1 and p(g-1) + 1 < gk there is no room for k
// disjoint cycles of length >= g.
TEST(Circular, BelowThresholdHasFewerThanKDisjointCycles) {
  for (std::int64_t g = 2; g <= 6; ++g) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      const std::int64_t p = girth_outdegree_threshold(g, k) - 1;
      if (p < 1 || p * (g - 1) + 1 >= g * k) continue;
      const Digraph d = gen_circular(p, g);
      const Packing pk = max_disjoint_cycles(d);
      EXPECT_TRUE(pk.optimal);
      EXPECT_LT(pk.lower_bound, static_cast<std::size_t>(k)) << g << "," << k;
      if (d.vertex_count() <= 14) {
        EXPECT_EQ(pk.lower_bound, oracle::max_packing(d)) << g << "," << k;
      }
    }
  }
}

TEST(Circular, GirthSweepAgainstOracle) {
  for (std::int64_t p = 1; p <= 5; ++p) {
    for (std::int64_t g = 2; g <= 7; ++g) {
      const Digraph d = gen_circular(p, g);
      EXPECT_EQ(d.vertex_count(), static_cast<std::size_t>(p * (g - 1) + 1));
      EXPECT_EQ(min_outdegree(d), static_cast<std::size_t>(p));
      EXPECT_EQ(girth(d).girth, static_cast<std::size_t>(g)) << p << "," << g;
      if (d.vertex_count() <= 12) {
        EXPECT_EQ(oracle::girth(d), static_cast<std::size_t>(g)) << p << "," << g;
      }
    }
  }
}

TEST(CompleteSymmetric, Examples) {
  const Digraph k6 = gen_complete_symmetric(6);
  EXPECT_EQ(k6.arc_count(), 30u);
  EXPECT_EQ(min_outdegree(k6), 5u);
  EXPECT_EQ(max_disjoint_cycles(gen_complete_symmetric(5)).lower_bound, 2u);
  const Digraph k1 = gen_complete_symmetric(1);
  EXPECT_EQ(k1.vertex_count(), 1u);
  EXPECT_TRUE(girth(k1).acyclic());
}

TEST(PadSources, PreservesGirthAndPacking) {
  const Digraph base = gen_even_girth(4, 3);
  const Digraph padded = pad_sources(base, 3, 4, 11);
  EXPECT_EQ(padded.vertex_count(), 28u);
  for (Vertex v = 25; v < 28; ++v) {
    EXPECT_EQ(padded.out_degree(v), 4u);
    EXPECT_EQ(padded.in_degree(v), 0u);
  }
  EXPECT_EQ(girth(padded).girth, 4u);
  EXPECT_EQ(max_disjoint_cycles(padded).lower_bound,
            max_disjoint_cycles(base).lower_bound);
  EXPECT_EQ(padded, pad_sources(base, 3, 4, 11));
}

TEST(PadSources, DigonKeepsGirthTwo) {
  const Digraph digon = Digraph::Builder(2).add_arc(0, 1).add_arc(1, 0).build();
  EXPECT_EQ(girth(pad_sources(digon, 1, 1, 0)).girth, 2u);
  EXPECT_THROW(pad_sources(digon, 1, 3, 0), std::invalid_argument);
}

TEST(PadSources, SmallCasesMatchOracles) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Digraph base = oracle::random_digraph(6, 0.35, seed);
    const Digraph padded = pad_sources(base, 2, 3, seed);
    EXPECT_EQ(oracle::girth(padded), oracle::girth(base));
    EXPECT_EQ(oracle::max_packing(padded), oracle::max_packing(base));
  }
}

TEST(RandomMinOutdegree, DegreeAndDeterminism) {
  const Digraph d = gen_random_min_outdegree(12, 5, 1);
  EXPECT_EQ(min_outdegree(d), 5u);
  EXPECT_EQ(to_edge_list(d), to_edge_list(gen_random_min_outdegree(12, 5, 1)));
  EXPECT_NE(to_edge_list(d), to_edge_list(gen_random_min_outdegree(12, 5, 2)));
  for (std::uint64_t seed : {0u, 5u, 99u}) {
    EXPECT_EQ(gen_random_min_outdegree(6, 5, seed), gen_complete_symmetric(6));
  }
  EXPECT_THROW(gen_random_min_outdegree(5, 5, 1), std::invalid_argument);
}

}  // namespace
}  // namespace cyclepack
