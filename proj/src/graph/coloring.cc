// Copyright 2026 The graphfb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphfb/coloring.h"

#include <algorithm>
#include <deque>
#include <numeric>

namespace graphfb {

std::vector<VertexId> Bipartition::low() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < sides_.size(); ++v) {
    if (sides_[v] == Side::kLow) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<VertexId> Bipartition::high() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < sides_.size(); ++v) {
    if (sides_[v] == Side::kHigh) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool Bipartition::Separates(const Graph& g) const {
  if (g.num_vertices() != sides_.size()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return sides_[e.u] != sides_[e.v];
  });
}

Coloring GreedyColoring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) > g.degree(b);
  });

  Coloring c;
  c.colors.assign(n, 0);
  std::vector<int> seen_at(n + 2, -1);
  for (VertexId v : order) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const int col = c.colors[nb.vertex];
      if (col > 0) seen_at[col] = v;
    }
    int col = 1;
    while (seen_at[col] == v) ++col;
    c.colors[v] = col;
    c.num_colors = std::max(c.num_colors, col);
  }
  return c;
}

bool IsProperColoring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.num_vertices()) return false;
  std::vector<bool> used(static_cast<std::size_t>(std::max(c.num_colors, 0)) + 1,
                         false);
  for (int col : c.colors) {
    if (col < 1 || col > c.num_colors) return false;
    used[col] = true;
  }
  if (std::find(used.begin() + 1, used.end(), false) != used.end()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return c.colors[e.u] != c.colors[e.v];
  });
}

std::optional<Bipartition> IsBipartite(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::deque<VertexId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push_back(static_cast<VertexId>(s));
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (color[nb.vertex] < 0) {
          color[nb.vertex] = 1 - color[v];
          queue.push_back(nb.vertex);
        } else if (color[nb.vertex] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Side> sides(n);
  for (std::size_t v = 0; v < n; ++v) sides[v] = color[v] == 0 ? Side::kLow : Side::kHigh;
  return Bipartition(std::move(sides));
}

}  // namespace graphfb
