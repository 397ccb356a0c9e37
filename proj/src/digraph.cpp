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

#include "cyclepack/digraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace cyclepack {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

bool is_allowed(const std::vector<char>& allowed, Vertex v) {
  return allowed.empty() || allowed[v] != 0;
}

// Distances to `target` along arcs, restricted to vertices >= floor that are
// allowed.
std::vector<std::size_t> distances_to(const Digraph& d, Vertex target,
                                      Vertex floor,
                                      const std::vector<char>& allowed) {
  std::vector<std::size_t> dist(d.vertex_count(), kUnreached);
  std::deque<Vertex> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : d.in_neighbors(v)) {
      if (u < floor || !is_allowed(allowed, u) || dist[u] != kUnreached) {
        continue;
      }
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

// Length of the shortest cycle whose smallest vertex is s.
std::size_t shortest_cycle_from(const Digraph& d, Vertex s,
                                const std::vector<std::size_t>& dist) {
  std::size_t best = kUnreached;
  for (Vertex w : d.out_neighbors(s)) {
    if (w > s && dist[w] != kUnreached) best = std::min(best, dist[w] + 1);
  }
  return best;
}

std::optional<std::pair<Vertex, std::size_t>> girth_and_root(
    const Digraph& d, const std::vector<char>& allowed) {
  std::size_t best = kUnreached;
  Vertex root = 0;
  for (Vertex s = 0; s < d.vertex_count(); ++s) {
    if (!is_allowed(allowed, s)) continue;
    const auto dist = distances_to(d, s, s, allowed);
    const std::size_t len = shortest_cycle_from(d, s, dist);
    if (len < best) {
      best = len;
      root = s;
      if (best == 2) break;
    }
  }
  if (best == kUnreached) return std::nullopt;
  return std::pair{root, best};
}

}  // namespace

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u >= out_.size()) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

Digraph Digraph::transpose() const {
  Digraph t;
  t.out_ = in_;
  t.in_ = out_;
  t.arcs_.reserve(arcs_.size());
  for (Vertex u = 0; u < t.out_.size(); ++u) {
    for (Vertex v : t.out_[u]) t.arcs_.push_back({u, v});
  }
  return t;
}

Digraph Digraph::without_arc(Arc arc) const {
  if (!has_arc(arc.from, arc.to)) {
    throw InvalidDigraph("arc " + std::to_string(arc.from) + "->" +
                         std::to_string(arc.to) + " is not present");
  }
  Digraph r = *this;
  auto erase = [](std::vector<Vertex>& list, Vertex x) {
    list.erase(std::lower_bound(list.begin(), list.end(), x));
  };
  erase(r.out_[arc.from], arc.to);
  erase(r.in_[arc.to], arc.from);
  r.arcs_.erase(std::lower_bound(r.arcs_.begin(), r.arcs_.end(), arc));
  return r;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> local(vertex_count(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  Builder b(vertices.size());
  for (Vertex u : vertices) {
    for (Vertex v : out_[u]) {
      if (local[v] != std::numeric_limits<Vertex>::max()) {
        b.add_arc(local[u], local[v]);
      }
    }
  }
  return std::move(b).build();
}

Digraph::Builder& Digraph::Builder::add_arc(Vertex u, Vertex v) {
  arcs_.push_back({u, v});
  return *this;
}

Digraph::Builder& Digraph::Builder::add_vertices(std::size_t count) {
  vertex_count_ += count;
  return *this;
}

Digraph Digraph::Builder::build() {
  std::sort(arcs_.begin(), arcs_.end());
  Digraph d;
  d.out_.resize(vertex_count_);
  d.in_.resize(vertex_count_);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc a = arcs_[i];
    if (a.from >= vertex_count_ || a.to >= vertex_count_) {
      throw InvalidDigraph("arc " + std::to_string(a.from) + "->" +
                           std::to_string(a.to) + " references a vertex >= " +
                           std::to_string(vertex_count_));
    }
    if (a.from == a.to) {
      throw InvalidDigraph("self-loop at vertex " + std::to_string(a.from));
    }
    if (i > 0 && arcs_[i - 1] == a) {
      throw InvalidDigraph("parallel arc " + std::to_string(a.from) + "->" +
                           std::to_string(a.to));
    }
    d.out_[a.from].push_back(a.to);
    d.in_[a.to].push_back(a.from);
  }
  // arcs_ is sorted by (from, to) so out-lists are sorted; in-lists are
  // filled in increasing `from` order and are sorted as well.
  d.arcs_ = arcs_;
  return d;
}

Digraph from_arcs(std::size_t vertex_count, std::span<const Arc> arcs) {
  Digraph::Builder b(vertex_count);
  for (const Arc& a : arcs) b.add_arc(a.from, a.to);
  return std::move(b).build();
}

std::size_t min_outdegree(const Digraph& d) {
  if (d.vertex_count() == 0) return 0;
  std::size_t best = d.out_degree(0);
  for (Vertex v = 1; v < d.vertex_count(); ++v) {
    best = std::min(best, d.out_degree(v));
  }
  return best;
}

bool has_digon(const Digraph& d) {
  for (const Arc& a : d.arcs()) {
    if (a.from < a.to && d.has_arc(a.to, a.from)) return true;
  }
  return false;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Digraph& d) {
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> colour(d.vertex_count(), kNone);
  for (Vertex root = 0; root < d.vertex_count(); ++root) {
    if (colour[root] != kNone) continue;
    colour[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      auto visit = [&](Vertex w) {
        if (colour[w] == kNone) {
          colour[w] = static_cast<std::uint8_t>(1 - colour[v]);
          queue.push_back(w);
          return true;
        }
        return colour[w] != colour[v];
      };
      for (Vertex w : d.out_neighbors(v)) {
        if (!visit(w)) return std::nullopt;
      }
      for (Vertex w : d.in_neighbors(v)) {
        if (!visit(w)) return std::nullopt;
      }
    }
  }
  return colour;
}

GirthCertificate girth(const Digraph& d) {
  GirthCertificate cert;
  const auto found = girth_and_root(d, {});
  if (!found) return cert;
  const auto [s, len] = *found;
  cert.girth = len;

  // A closed walk of minimum length is a simple cycle, so greedily taking the
  // smallest successor that is still exactly the right distance from s yields
  // the lexicographically smallest shortest cycle through s.
  const auto dist = distances_to(d, s, s, {});
  cert.witness.push_back(s);
  Vertex cur = s;
  for (std::size_t remaining = len - 1; remaining > 0; --remaining) {
    for (Vertex w : d.out_neighbors(cur)) {
      if (w > s && dist[w] == remaining) {
        cur = w;
        break;
      }
    }
    cert.witness.push_back(cur);
  }
  return cert;
}

std::optional<std::size_t> girth_within(const Digraph& d,
                                        const std::vector<char>& allowed) {
  const auto found = girth_and_root(d, allowed);
  if (!found) return std::nullopt;
  return found->second;
}

std::vector<std::vector<Vertex>> strong_components(
    const Digraph& d, const std::vector<char>& allowed) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> index(n, kUnreached), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> calls;

  for (Vertex root = 0; root < n; ++root) {
    if (!is_allowed(allowed, root) || index[root] != kUnreached) continue;
    calls.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!calls.empty()) {
      Frame& f = calls.back();
      const auto out = d.out_neighbors(f.v);
      if (f.next < out.size()) {
        const Vertex w = out[f.next++];
        if (!is_allowed(allowed, w)) continue;
        if (index[w] == kUnreached) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      calls.pop_back();
      if (!calls.empty()) {
        low[calls.back().v] = std::min(low[calls.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::size_t disjoint_path_count(const Digraph& d, Vertex s, Vertex t,
                                std::size_t limit) {
  // Vertex-split unit-capacity network: v_in = 2v, v_out = 2v + 1.
  struct Edge {
    std::size_t to;
    int cap;
  };
  const std::size_t n = d.vertex_count();
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> adj(2 * n);
  auto add = [&](std::size_t u, std::size_t v) {
    adj[u].push_back(edges.size());
    edges.push_back({v, 1});
    adj[v].push_back(edges.size());
    edges.push_back({u, 0});
  };
  for (Vertex v = 0; v < n; ++v) {
    if (v != s && v != t) add(2 * v, 2 * v + 1);
  }
  for (const Arc& a : d.arcs()) add(2 * a.from + 1, 2 * a.to);

  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  std::vector<std::size_t> parent_edge(2 * n);
  while (flow < limit) {
    std::fill(parent_edge.begin(), parent_edge.end(), kUnreached);
    std::deque<std::size_t> queue{source};
    bool reached = false;
    while (!queue.empty() && !reached) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t e : adj[u]) {
        const std::size_t v = edges[e].to;
        if (edges[e].cap == 0 || v == source || parent_edge[v] != kUnreached) {
          continue;
        }
        parent_edge[v] = e;
        if (v == sink) {
          reached = true;
          break;
        }
        queue.push_back(v);
      }
    }
    if (!reached) break;
    for (std::size_t v = sink; v != source;) {
      const std::size_t e = parent_edge[v];
      edges[e].cap -= 1;
      edges[e ^ 1].cap += 1;
      v = edges[e ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

std::size_t strong_connectivity(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n < 2) {
    throw std::invalid_argument(
        "strong connectivity needs at least 2 vertices");
  }
  if (strong_components(d).size() > 1) return 0;
  std::size_t best = n - 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || d.has_arc(u, v)) continue;
      best = std::min(best, disjoint_path_count(d, u, v, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

}  // namespace cyclepack
