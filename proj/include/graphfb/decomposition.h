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

#ifndef GRAPHFB_DECOMPOSITION_H_
#define GRAPHFB_DECOMPOSITION_H_

#include <string>
#include <vector>

#include "graphfb/coloring.h"
#include "graphfb/graph.h"

namespace graphfb {

// One "dimension" of a separable filterbank: a bipartition of the whole
// vertex set and the edges filtered at this stage (all crossing it).
struct DecompositionStage {
  Bipartition partition;
  std::vector<Edge> edges;
};

// Ordered, edge-disjoint bipartite subgraphs B_1..B_K covering all edges.
struct BipartiteDecomposition {
  std::size_t num_vertices = 0;
  std::vector<DecompositionStage> stages;

  std::size_t dimension() const { return stages.size(); }
};

// Harary-style decomposition from a proper k-coloring into ceil(log2 k)
// stages. At every stage, each surviving part with local colors 1..k_p sends
// colors <= floor(k_p/2) to L and the rest to H; parts holding a single color
// (no remaining edges) go entirely to L. E_i takes every unassigned edge
// between L_i and H_i, and each part's colors are rank-compressed before the
// next stage. Throws PreconditionError for an improper coloring.
BipartiteDecomposition HararyDecompose(const Graph& g, const Coloring& coloring);

struct DecompositionCheck {
  bool covers_vertices = true;     // each partition spans V
  bool stage_bipartite = true;     // every E_i edge joins L_i and H_i
  bool edge_disjoint = true;       // E_i pairwise disjoint
  bool covers_edges = true;        // union of E_i is E, nothing foreign
  bool cross_edges_exhausted = true;  // no L_i-H_i edge left after stage i
  std::string message;

  bool ok() const {
    return covers_vertices && stage_bipartite && edge_disjoint && covers_edges &&
           cross_edges_exhausted;
  }
};

DecompositionCheck CheckDecomposition(const Graph& g,
                                      const BipartiteDecomposition& d);

// Per-vertex channel label over {L,H}^K, e.g. "LH" for L_1 and H_2.
std::string ChannelLabelOf(const BipartiteDecomposition& d, VertexId v);

// All 2^K labels in lexicographic order with L before H ("" when K = 0).
std::vector<std::string> AllChannelLabels(std::size_t dimension);

}  // namespace graphfb

#endif  // GRAPHFB_DECOMPOSITION_H_
