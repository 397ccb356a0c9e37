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

#include <vector>

#include "cyclepack/digraph.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/io.hpp"
#include "cyclepack/random.hpp"
#include "oracles.hpp"

namespace cyclepack {
namespace {

Digraph directed_cycle(std::size_t n) {
  Digraph::Builder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_arc(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

TEST(Builder, RejectsLoopsParallelArcsAndBadIds) {
  EXPECT_THROW(Digraph::Builder(2).add_arc(1, 1).build(), InvalidDigraph);
  EXPECT_THROW(Digraph::Builder(2).add_arc(0, 1).add_arc(0, 1).build(),
               InvalidDigraph);
  EXPECT_THROW(Digraph::Builder(2).add_arc(0, 2).build(), InvalidDigraph);
}

TEST(Builder, SortsAdjacency) {
  const Digraph d = Digraph::Builder(4).add_arc(0, 3).add_arc(0, 1).add_arc(2, 1).build();
  EXPECT_EQ(std::vector<Vertex>(d.out_neighbors(0).begin(), d.out_neighbors(0).end()),
            (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(std::vector<Vertex>(d.in_neighbors(1).begin(), d.in_neighbors(1).end()),
            (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(d.arc_count(), 3u);
  EXPECT_TRUE(d.has_arc(0, 3));
  EXPECT_FALSE(d.has_arc(3, 0));
}

TEST(Digraph, TransposeIsAnInvolution) {
  const Digraph d = oracle::random_digraph(8, 0.3, 5);
  EXPECT_EQ(d.transpose().transpose(), d);
  for (const Arc& a : d.arcs()) EXPECT_TRUE(d.transpose().has_arc(a.to, a.from));
}

TEST(Digraph, WithoutArc) {
  const Digraph d = directed_cycle(3);
  const Digraph e = d.without_arc({2, 0});
  EXPECT_EQ(e.arc_count(), 2u);
  EXPECT_FALSE(e.has_arc(2, 0));
  EXPECT_THROW(d.without_arc({0, 2}), InvalidDigraph);
}

TEST(Digraph, InducedRelabelsInOrder) {
  const Digraph k4 = gen_complete_symmetric(4);
  const std::vector<Vertex> keep{1, 3};
  const Digraph sub = k4.induced(keep);
  EXPECT_EQ(sub.vertex_count(), 2u);
  EXPECT_TRUE(sub.has_arc(0, 1));
  EXPECT_TRUE(sub.has_arc(1, 0));
}

TEST(MinOutdegree, Examples) {
  EXPECT_EQ(min_outdegree(gen_complete_symmetric(6)), 5u);
  EXPECT_EQ(min_outdegree(directed_cycle(3)), 1u);
  EXPECT_EQ(min_outdegree(gen_even_girth(4, 3)), 4u);
  EXPECT_EQ(min_outdegree(Digraph{}), 0u);
}

TEST(Girth, Examples) {
  const Digraph digon = Digraph::Builder(3).add_arc(0, 1).add_arc(1, 0).add_arc(1, 2).build();
  EXPECT_EQ(girth(digon).girth, 2u);
  EXPECT_EQ(girth(digon).witness, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(girth(gen_even_girth(6, 5)).girth, 6u);
  EXPECT_TRUE(girth(Digraph{}).acyclic());
  EXPECT_TRUE(girth(Digraph::Builder(3).add_arc(0, 1).add_arc(1, 2).build()).acyclic());
  EXPECT_TRUE(girth(Digraph::Builder(3).build()).witness.empty());
}

TEST(Girth, MatchesOracleAndIsTransposeInvariant) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Digraph d = oracle::random_digraph(2 + seed % 8, 0.12 + 0.04 * (seed % 6), seed);
    const auto cert = girth(d);
    EXPECT_EQ(cert.girth, oracle::girth(d)) << "seed " << seed;
    EXPECT_EQ(cert.girth, girth(d.transpose()).girth) << "seed " << seed;
    if (cert.girth) {
      EXPECT_EQ(cert.witness.size(), *cert.girth);
      EXPECT_TRUE(oracle::is_cycle_in(d, cert.witness));
      // Lexicographically smallest shortest cycle.
      for (const auto& c : oracle::all_cycles(d)) {
        if (c.size() == *cert.girth) {
          EXPECT_LE(cert.witness, c);
        }
      }
    }
    EXPECT_EQ(cert.girth == 2u, has_digon(d)) << "seed " << seed;
  }
}

TEST(Bipartition, DetectsOddCycles) {
  EXPECT_FALSE(bipartition(directed_cycle(3)).has_value());
  const auto sides = bipartition(directed_cycle(4));
  ASSERT_TRUE(sides.has_value());
  EXPECT_NE((*sides)[0], (*sides)[1]);
  EXPECT_TRUE(bipartition(gen_even_girth(4, 3)).has_value());
}

TEST(StrongComponents, OrderedBySmallestVertex) {
  const Digraph d = Digraph::Builder(5)
                        .add_arc(3, 4)
                        .add_arc(4, 3)
                        .add_arc(0, 3)
                        .add_arc(1, 2)
                        .add_arc(2, 1)
                        .build();
  const auto comps = strong_components(d);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{3, 4}));
}

TEST(StrongConnectivity, Examples) {
  EXPECT_EQ(strong_connectivity(gen_complete_symmetric(6)), 5u);
  EXPECT_EQ(strong_connectivity(directed_cycle(7)), 1u);
  const Digraph two = Digraph::Builder(6)
                          .add_arc(0, 1).add_arc(1, 2).add_arc(2, 0)
                          .add_arc(3, 4).add_arc(4, 5).add_arc(5, 3)
                          .build();
  EXPECT_EQ(strong_connectivity(two), 0u);
  EXPECT_THROW(strong_connectivity(Digraph::Builder(1).build()),
               std::invalid_argument);
}

TEST(StrongConnectivity, CompleteSymmetricIsNMinusOne) {
  for (std::int64_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(strong_connectivity(gen_complete_symmetric(n)),
              static_cast<std::size_t>(n - 1));
  }
}

TEST(StrongConnectivity, MatchesVertexDeletionOracle) {
  // kappa = smallest deletion set leaving a non-strong digraph (or n-1).
  auto brute = [](const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::size_t best = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const std::size_t removed = std::popcount(mask);
      if (removed >= best || n - removed < 2) continue;
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < n; ++v) {
        if (!(mask & (1u << v))) keep.push_back(v);
      }
      if (strong_components(d.induced(keep)).size() > 1) best = removed;
    }
    return best;
  };
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = oracle::random_digraph(3 + seed % 5, 0.5 + 0.05 * (seed % 8), seed);
    EXPECT_EQ(strong_connectivity(d), brute(d)) << "seed " << seed;
  }
}

TEST(EdgeList, RoundTrip) {
  const Digraph d = gen_even_girth(4, 2);
  const std::string text = to_edge_list(d);
  EXPECT_EQ(text.substr(0, text.find('\n')), "16 48");
  EXPECT_EQ(parse_edge_list(text), d);
  EXPECT_EQ(to_edge_list(parse_edge_list(text)), text);
}

TEST(EdgeList, TolerantOfBlankLinesAndUnsortedArcs) {
  const Digraph d = parse_edge_list("3 2\n\n2 0\n0 1\n\n");
  EXPECT_EQ(to_edge_list(d), "3 2\n0 1\n2 0\n");
}

TEST(EdgeList, ParseErrors) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2 9\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n-1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1 7\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("x 1\n0 1\n"), ParseError);
  EXPECT_THROW(read_edge_list_file("/nonexistent/cyclepack.edges"), ParseError);
}

TEST(Dot, Format) {
  const Digraph d = Digraph::Builder(2).add_arc(1, 0).build();
  EXPECT_EQ(to_dot(d), "digraph D {\n  0;\n  1;\n  1 -> 0;\n}\n");
}

TEST(Random, SeedsAreReproducibleAndSpread) {
  static_assert(derive_seed(1, 0) == derive_seed(1, 0));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  SeededRng a(9), b(9);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
  }
}

}  // namespace
}  // namespace cyclepack
