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

#include <algorithm>
#include <deque>
#include <limits>

#include "cyclepack/packing.hpp"

namespace cyclepack {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> distances_back_to(const Digraph& d, Vertex root,
                                           const std::vector<char>& allowed) {
  std::vector<std::size_t> dist(d.vertex_count(), kUnreached);
  dist[root] = 0;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : d.in_neighbors(v)) {
      if (allowed[u] && dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

// Vertices >= root sharing root's strong component in the subdigraph induced
// by vertices >= root.
std::vector<char> root_component(const Digraph& d, Vertex root) {
  std::vector<char> upper(d.vertex_count(), 0);
  for (Vertex v = root; v < d.vertex_count(); ++v) upper[v] = 1;
  std::vector<char> mask(d.vertex_count(), 0);
  for (const auto& comp : strong_components(d, upper)) {
    if (comp.front() == root) {
      for (Vertex v : comp) mask[v] = 1;
      break;
    }
  }
  return mask;
}

class CycleCollector {
 public:
  CycleCollector(std::size_t cap, CycleEnumeration& out) : cap_(cap), out_(out) {}

  // Returns false once the cap is exceeded.
  bool emit(const std::vector<Vertex>& path) {
    if (out_.cycles.size() == cap_) {
      out_.truncated = true;
      return false;
    }
    out_.cycles.emplace_back(path);
    return true;
  }

 private:
  std::size_t cap_;
  CycleEnumeration& out_;
};

// Johnson's circuit search rooted at the smallest vertex of the component.
class JohnsonSearch {
 public:
  JohnsonSearch(const Digraph& d, const std::vector<char>& allowed,
                Vertex root, CycleCollector& collector)
      : d_(d),
        allowed_(allowed),
        root_(root),
        collector_(collector),
        blocked_(d.vertex_count(), 0),
        blocked_by_(d.vertex_count()) {}

  bool run() {
    circuit(root_);
    return !stopped_;
  }

 private:
  bool circuit(Vertex v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = 1;
    for (Vertex w : d_.out_neighbors(v)) {
      if (stopped_) break;
      if (!allowed_[w]) continue;
      if (w == root_) {
        found = true;
        if (!collector_.emit(path_)) stopped_ = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (Vertex w : d_.out_neighbors(v)) {
        if (!allowed_[w]) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) {
          list.push_back(v);
        }
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(Vertex v) {
    std::vector<Vertex> work{v};
    while (!work.empty()) {
      const Vertex u = work.back();
      work.pop_back();
      if (!blocked_[u]) continue;
      blocked_[u] = 0;
      for (Vertex w : blocked_by_[u]) work.push_back(w);
      blocked_by_[u].clear();
    }
  }

  const Digraph& d_;
  const std::vector<char>& allowed_;
  Vertex root_;
  CycleCollector& collector_;
  std::vector<char> blocked_;
  std::vector<std::vector<Vertex>> blocked_by_;
  std::vector<Vertex> path_;
  bool stopped_ = false;
};

// Depth-first search over simple paths from root, pruned by the exact
// distance back to root.
class BoundedSearch {
 public:
  BoundedSearch(const Digraph& d, const std::vector<char>& allowed,
                Vertex root, std::size_t max_len, CycleCollector& collector)
      : d_(d),
        allowed_(allowed),
        root_(root),
        max_len_(max_len),
        collector_(collector),
        dist_(distances_back_to(d, root, allowed)),
        on_path_(d.vertex_count(), 0) {}

  bool run() {
    path_.push_back(root_);
    on_path_[root_] = 1;
    return extend(root_);
  }

 private:
  bool extend(Vertex v) {
    for (Vertex w : d_.out_neighbors(v)) {
      if (!allowed_[w]) continue;
      if (w == root_) {
        if (!collector_.emit(path_)) return false;
        continue;
      }
      if (on_path_[w] || dist_[w] == kUnreached ||
          path_.size() + dist_[w] > max_len_) {
        continue;
      }
      path_.push_back(w);
      on_path_[w] = 1;
      const bool go_on = extend(w);
      on_path_[w] = 0;
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Digraph& d_;
  const std::vector<char>& allowed_;
  Vertex root_;
  std::size_t max_len_;
  CycleCollector& collector_;
  std::vector<std::size_t> dist_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

class ChordlessSearch {
 public:
  ChordlessSearch(const Digraph& d, const std::vector<char>& allowed,
                  Vertex pivot, std::optional<std::size_t> max_len,
                  const std::function<bool(const std::vector<Vertex>&)>& visit)
      : d_(d),
        allowed_(allowed),
        pivot_(pivot),
        max_len_(max_len.value_or(kUnreached)),
        visit_(visit),
        dist_(distances_back_to(d, pivot, allowed)),
        on_path_(d.vertex_count(), 0) {}

  void run() {
    if (!allowed_[pivot_]) return;
    path_.push_back(pivot_);
    on_path_[pivot_] = 1;
    extend();
  }

 private:
  // The path p = v0, v1, ..., vj is itself chordless and no vertex other
  // than p has an arc back to p.
  bool admissible(Vertex w) const {
    const std::size_t j = path_.size() - 1;
    if (j >= 1 && d_.has_arc(pivot_, w)) return false;
    for (std::size_t i = 1; i <= j; ++i) {
      if (d_.has_arc(w, path_[i])) return false;
    }
    for (std::size_t i = 1; i + 1 <= j; ++i) {
      if (d_.has_arc(path_[i], w)) return false;
    }
    return true;
  }

  bool extend() {
    const Vertex v = path_.back();
    for (Vertex w : d_.out_neighbors(v)) {
      if (!allowed_[w] || w == pivot_ || on_path_[w]) continue;
      if (dist_[w] == kUnreached || path_.size() + dist_[w] > max_len_) {
        continue;
      }
      if (!admissible(w)) continue;
      path_.push_back(w);
      bool go_on;
      if (d_.has_arc(w, pivot_)) {
        // Any longer cycle would have w -> pivot as a chord.
        go_on = visit_(path_);
      } else {
        on_path_[w] = 1;
        go_on = extend();
        on_path_[w] = 0;
      }
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Digraph& d_;
  const std::vector<char>& allowed_;
  Vertex pivot_;
  std::size_t max_len_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
  std::vector<std::size_t> dist_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (!vertices_.empty()) {
    std::rotate(vertices_.begin(),
                std::min_element(vertices_.begin(), vertices_.end()),
                vertices_.end());
  }
}

bool Cycle::is_valid_in(const Digraph& d) const {
  if (vertices_.size() < 2) return false;
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  if (sorted.back() >= d.vertex_count()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!d.has_arc(vertices_[i], vertices_[(i + 1) % vertices_.size()])) {
      return false;
    }
  }
  return true;
}

bool shorter_first(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

CycleEnumeration enumerate_cycles(const Digraph& d,
                                  std::optional<std::size_t> max_len,
                                  std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("cycle cap must be >= 1");
  CycleEnumeration out;
  CycleCollector collector(cap, out);
  for (Vertex root = 0; root < d.vertex_count(); ++root) {
    const auto mask = root_component(d, root);
    if (std::count(mask.begin(), mask.end(), 1) < 2) continue;
    const bool go_on =
        max_len ? BoundedSearch(d, mask, root, *max_len, collector).run()
                : JohnsonSearch(d, mask, root, collector).run();
    if (!go_on) break;
  }
  return out;
}

void for_each_chordless_cycle_through(
    const Digraph& d, const std::vector<char>& allowed, Vertex pivot,
    std::optional<std::size_t> max_len,
    const std::function<bool(const std::vector<Vertex>&)>& visit) {
  ChordlessSearch(d, allowed, pivot, max_len, visit).run();
}

std::vector<Cycle> chordless_cycles(const Digraph& d) {
  std::vector<Cycle> out;
  for (Vertex root = 0; root < d.vertex_count(); ++root) {
    const auto mask = root_component(d, root);
    for_each_chordless_cycle_through(d, mask, root, std::nullopt,
                                     [&](const std::vector<Vertex>& c) {
                                       out.emplace_back(c);
                                       return true;
                                     });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclepack
