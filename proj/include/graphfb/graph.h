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

#ifndef GRAPHFB_GRAPH_H_
#define GRAPHFB_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graphfb/common.h"

namespace graphfb {

// Undirected weighted edge, stored canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId vertex;
  double weight;
  std::size_t edge;  // index into Graph::edges()
};

// Immutable weighted undirected simple graph. Vertex ids are 0..N-1; edges
// are kept sorted by (u, v) and mirrored into a sorted adjacency list.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, duplicate edges, non-positive or
  // non-finite weights, and out-of-range ids. Edge orientation is normalized.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree_count(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  // Sum of incident edge weights.
  double degree(VertexId v) const { return degree_[v]; }

  // Adjacency entry A(a, b); 0 when a and b are not adjacent.
  double weight(VertexId a, VertexId b) const;
  std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const {
    return edge_index(a, b).has_value();
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degree_;
};

// Same vertex set as `g`, keeping only `edges`. Weights are taken from `g`;
// throws PreconditionError if any edge is not in g.
Graph SubgraphRestricted(const Graph& g, std::span<const Edge> edges);

// Connected component index per vertex, numbered in order of smallest vertex.
std::vector<int> ConnectedComponents(const Graph& g);

// Unweighted hop distances from `source`, truncated at `max_hops`
// (vertices further away get -1).
std::vector<int> HopDistances(const Graph& g, VertexId source, int max_hops);

}  // namespace graphfb

#endif  // GRAPHFB_GRAPH_H_
