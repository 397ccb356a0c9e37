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

#include "cyclepack/paths.hpp"

#include <algorithm>
#include <deque>

namespace cyclepack {

namespace {

class LongestPathSearch {
 public:
  LongestPathSearch(const Digraph& d, std::uint64_t budget)
      : d_(d),
        budget_(budget),
        ceiling_(structural_path_bound(d)),
        visited_(d.vertex_count(), 0),
        seen_(d.vertex_count(), 0) {}

  PathCertificate run() {
    PathCertificate out;
    if (d_.vertex_count() == 0) {
      out.exact = true;
      return out;
    }
    for (Vertex s = 0; s < d_.vertex_count() && !done(); ++s) {
      path_.assign(1, s);
      visited_[s] = 1;
      if (best_.empty()) best_ = path_;
      extend();
      visited_[s] = 0;
    }
    out.witness = best_;
    out.length = best_.size() - 1;
    out.exact = !aborted_ || out.length == ceiling_;
    out.upper_bound = out.exact ? out.length : ceiling_;
    out.expansions = expansions_;
    return out;
  }

 private:
  bool done() const { return aborted_ || best_.size() - 1 == ceiling_; }

  // Vertices reachable from v through unvisited vertices, v excluded.
  std::size_t reachable_from(Vertex v) {
    ++stamp_;
    std::size_t count = 0;
    stack_.assign(1, v);
    while (!stack_.empty()) {
      const Vertex u = stack_.back();
      stack_.pop_back();
      for (Vertex w : d_.out_neighbors(u)) {
        if (visited_[w] || seen_[w] == stamp_) continue;
        seen_[w] = stamp_;
        ++count;
        stack_.push_back(w);
      }
    }
    return count;
  }

  void extend() {
    if (path_.size() > best_.size()) best_ = path_;
    if (done()) return;
    if (++expansions_ > budget_) {
      aborted_ = true;
      return;
    }
    const Vertex v = path_.back();
    if (path_.size() + reachable_from(v) <= best_.size()) return;
    for (Vertex w : d_.out_neighbors(v)) {
      if (visited_[w]) continue;
      path_.push_back(w);
      visited_[w] = 1;
      extend();
      visited_[w] = 0;
      path_.pop_back();
      if (done()) return;
    }
  }

  const Digraph& d_;
  std::uint64_t budget_;
  std::size_t ceiling_;
  std::vector<char> visited_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  std::vector<Vertex> stack_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::optional<std::size_t> alternation_path_bound(const Digraph& d) {
  const auto colour = bipartition(d);
  if (!colour) return std::nullopt;
  // Count sides per weak component.
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::size_t best = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] != n) continue;
    std::size_t side[2] = {0, 0};
    std::deque<Vertex> queue{root};
    comp[root] = root;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      ++side[(*colour)[v]];
      auto visit = [&](Vertex w) {
        if (comp[w] == n) {
          comp[w] = root;
          queue.push_back(w);
        }
      };
      for (Vertex w : d.out_neighbors(v)) visit(w);
      for (Vertex w : d.in_neighbors(v)) visit(w);
    }
    const std::size_t a = std::min(side[0], side[1]);
    const std::size_t b = std::max(side[0], side[1]);
    best = std::max(best, std::min(2 * a + 1, a + b) - 1);
  }
  return best;
}

std::size_t structural_path_bound(const Digraph& d) {
  if (d.vertex_count() == 0) return 0;
  std::size_t bound = d.vertex_count() - 1;
  if (const auto alt = alternation_path_bound(d)) bound = std::min(bound, *alt);
  return bound;
}

PathCertificate longest_path_exact(const Digraph& d, std::uint64_t budget) {
  return LongestPathSearch(d, budget).run();
}

bool is_simple_path(const Digraph& d, const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  std::vector<char> seen(d.vertex_count(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= d.vertex_count() || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0 && !d.has_arc(path[i - 1], path[i])) return false;
  }
  return true;
}

}  // namespace cyclepack
