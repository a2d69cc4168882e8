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

#include "graphfb/graph.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace graphfb {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n_ ||
        static_cast<std::size_t>(e.v) >= n_) {
      throw PreconditionError("edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") has a vertex id outside [0, " +
                              std::to_string(n_) + ")");
    }
    if (e.u == e.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw PreconditionError("edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") has non-positive weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw PreconditionError("duplicate edge (" + std::to_string(edges_[i].u) +
                              ", " + std::to_string(edges_[i].v) + ")");
    }
  }

  std::vector<std::size_t> count(n_, 0);
  for (const Edge& e : edges_) {
    ++count[e.u];
    ++count[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + count[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, e.weight, i};
    adjacency_[fill[e.v]++] = {e.u, e.weight, i};
  }
  degree_.assign(n_, 0.0);
  for (std::size_t v = 0; v < n_; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) {
      return a.vertex < b.vertex;
    });
    for (auto it = first; it != last; ++it) degree_[v] += it->weight;
  }
}

std::optional<std::size_t> Graph::edge_index(VertexId a, VertexId b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ ||
      static_cast<std::size_t>(b) >= n_) {
    return std::nullopt;
  }
  const auto nb = neighbors(a);
  auto it = std::lower_bound(
      nb.begin(), nb.end(), b,
      [](const Neighbor& x, VertexId id) { return x.vertex < id; });
  if (it == nb.end() || it->vertex != b) return std::nullopt;
  return it->edge;
}

double Graph::weight(VertexId a, VertexId b) const {
  const auto idx = edge_index(a, b);
  return idx ? edges_[*idx].weight : 0.0;
}

Graph SubgraphRestricted(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    const auto idx = g.edge_index(e.u, e.v);
    if (!idx) {
      throw PreconditionError("edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") is not in the host graph");
    }
    kept.push_back(g.edges()[*idx]);
  }
  return Graph(g.num_vertices(), std::move(kept));
}

std::vector<int> ConnectedComponents(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (comp[nb.vertex] < 0) {
          comp[nb.vertex] = next;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<int> HopDistances(const Graph& g, VertexId source, int max_hops) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (dist[v] == max_hops) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (dist[nb.vertex] < 0) {
        dist[nb.vertex] = dist[v] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  return dist;
}

}  // namespace graphfb
