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

#include "cyclepack/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclepack/random.hpp"

namespace cyclepack {

namespace {

// Generated instances are meant for exact analysis; anything past this is a
// parameter mistake rather than a workload.
constexpr std::int64_t kMaxVertices = 5'000'000;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void check_size(std::int64_t vertices) {
  require(vertices <= kMaxVertices,
          "instance too large: " + std::to_string(vertices) + " vertices");
}

// First `count` entries of a seeded partial Fisher-Yates shuffle of `pool`.
std::vector<Vertex> sample_without_replacement(std::vector<Vertex> pool,
                                               std::size_t count,
                                               SeededRng& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace

std::int64_t girth_outdegree_threshold(std::int64_t g, std::int64_t k) {
  require(g >= 2, "girth must be at least 2");
  return (g * k + (g - 2)) / (g - 1);
}

ConstructionParams ConstructionParams::even(std::int64_t g, std::int64_t k,
                                            std::int64_t c, std::int64_t t) {
  require(g >= 4 && g % 2 == 0, "even family needs even g >= 4, got g = " +
                                    std::to_string(g));
  require(k >= 1, "k must be >= 1");
  require(c >= 0, "c must be >= 0");
  require(t >= 0, "t must be >= 0");
  ConstructionParams p;
  p.family = Family::kEvenGirth;
  p.g = g;
  p.k = k;
  p.c = c;
  p.t = t;
  p.h = girth_outdegree_threshold(g, k) + c;
  p.n = (g / 2 - 1) * p.h + 1;
  check_size(p.n * (p.h + 1));
  return p;
}

ConstructionParams ConstructionParams::odd(std::int64_t g, std::int64_t k,
                                           std::int64_t t) {
  require(g >= 3 && g % 2 == 1, "odd family needs odd g >= 3, got g = " +
                                    std::to_string(g));
  require(k >= 1, "k must be >= 1");
  require(t >= 0, "t must be >= 0");
  ConstructionParams p;
  p.family = Family::kOddGirth;
  p.g = g;
  p.k = k;
  p.t = t;
  p.h = girth_outdegree_threshold(g, k);
  p.n = p.r() * p.h + 1;
  check_size(p.n * (p.h + 1));
  return p;
}

std::vector<Vertex> ConstructionParams::x_layer() const {
  std::vector<Vertex> xs(static_cast<std::size_t>(n));
  std::iota(xs.begin(), xs.end(), Vertex{0});
  return xs;
}

std::vector<Vertex> ConstructionParams::y_layer() const {
  std::vector<Vertex> ys(static_cast<std::size_t>(n * h));
  std::iota(ys.begin(), ys.end(), static_cast<Vertex>(n));
  return ys;
}

Digraph gen_layered(const ConstructionParams& p, bool with_chord) {
  Digraph::Builder b(p.vertex_count());
  for (std::int64_t i = 0; i < p.n; ++i) {
    for (std::int64_t j = 0; j < p.h; ++j) {
      b.add_arc(p.x(i), p.y(i, j));
      for (std::int64_t s = 1; s <= p.h; ++s) {
        b.add_arc(p.y(i, j), p.x((i + s) % p.n));
      }
    }
  }
  if (with_chord) b.add_arc(p.x(p.r() * p.h), p.x(0));
  return std::move(b).build();
}

Digraph gen_even_girth(std::int64_t g, std::int64_t k, std::int64_t c) {
  return gen_layered(ConstructionParams::even(g, k, c), false);
}

Digraph gen_odd_girth(std::int64_t g, std::int64_t k, OddVariant variant) {
  return gen_layered(ConstructionParams::odd(g, k),
                     variant == OddVariant::kWithChord);
}

Digraph gen_bipartite_tournament(std::int64_t h) {
  require(h >= 1, "h must be >= 1");
  check_size(h * (h + 1) + h + 1);
  const auto y = [h](std::int64_t i) {
    return static_cast<Vertex>(h * (h + 1) + i - 1);
  };
  Digraph::Builder b(static_cast<std::size_t>(h * (h + 1) + h + 1));
  for (std::int64_t i = 1; i <= h + 1; ++i) {
    for (std::int64_t a = 0; a < h; ++a) {
      const auto x = static_cast<Vertex>((i - 1) * h + a);
      for (std::int64_t j = 1; j <= h + 1; ++j) {
        if (j != i) b.add_arc(x, y(j));
      }
      b.add_arc(y(i), x);
    }
  }
  return std::move(b).build();
}

std::vector<Vertex> bipartite_tournament_x_layer(std::int64_t h) {
  std::vector<Vertex> xs(static_cast<std::size_t>(h * (h + 1)));
  std::iota(xs.begin(), xs.end(), Vertex{0});
  return xs;
}

std::vector<Vertex> bipartite_tournament_y_layer(std::int64_t h) {
  std::vector<Vertex> ys(static_cast<std::size_t>(h + 1));
  std::iota(ys.begin(), ys.end(), static_cast<Vertex>(h * (h + 1)));
  return ys;
}

Digraph gen_circular(std::int64_t p, std::int64_t g) {
  require(p >= 1, "p must be >= 1");
  require(g >= 2, "g must be >= 2");
  const std::int64_t n = p * (g - 1) + 1;
  check_size(n);
  Digraph::Builder b(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t s = 1; s <= p; ++s) {
      b.add_arc(static_cast<Vertex>(i), static_cast<Vertex>((i + s) % n));
    }
  }
  return std::move(b).build();
}

Digraph gen_complete_symmetric(std::int64_t m) {
  require(m >= 1, "m must be >= 1");
  check_size(m);
  Digraph::Builder b(static_cast<std::size_t>(m));
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = 0; v < m; ++v) {
      if (u != v) b.add_arc(u, v);
    }
  }
  return std::move(b).build();
}

Digraph pad_sources(const Digraph& base, std::int64_t s, std::int64_t d,
                    std::uint64_t seed) {
  require(s >= 1, "number of padded sources must be >= 1");
  require(d >= 1, "padded out-degree must be >= 1");
  require(static_cast<std::size_t>(d) <= base.vertex_count(),
          "padded out-degree " + std::to_string(d) +
              " exceeds vertex count " + std::to_string(base.vertex_count()));
  const std::size_t n = base.vertex_count();
  Digraph::Builder b(n + static_cast<std::size_t>(s));
  for (const Arc& a : base.arcs()) b.add_arc(a.from, a.to);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  SeededRng rng(seed);
  for (std::int64_t i = 0; i < s; ++i) {
    const auto source = static_cast<Vertex>(n + i);
    for (Vertex v :
         sample_without_replacement(pool, static_cast<std::size_t>(d), rng)) {
      b.add_arc(source, v);
    }
  }
  return std::move(b).build();
}

Digraph gen_random_min_outdegree(std::int64_t m, std::int64_t delta,
                                 std::uint64_t seed) {
  require(m >= 1, "m must be >= 1");
  require(delta >= 0 && delta < m,
          "delta must satisfy 0 <= delta < m (delta = " +
              std::to_string(delta) + ", m = " + std::to_string(m) + ")");
  check_size(m);
  SeededRng rng(seed);
  Digraph::Builder b(static_cast<std::size_t>(m));
  std::vector<Vertex> others;
  for (Vertex u = 0; u < m; ++u) {
    others.clear();
    for (Vertex v = 0; v < m; ++v) {
      if (v != u) others.push_back(v);
    }
    for (Vertex v : sample_without_replacement(
             others, static_cast<std::size_t>(delta), rng)) {
      b.add_arc(u, v);
    }
  }
  return std::move(b).build();
}

}  // namespace cyclepack
