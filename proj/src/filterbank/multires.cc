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

#include "graphfb/multires.h"

#include <algorithm>
#include <string>

#include "graphfb/coloring.h"

namespace graphfb {

MultiresLevel DownsampledGraph(const Graph& g, std::span<const VertexId> keep, int hop) {
  if (keep.empty()) throw PreconditionError("downsampling needs a non-empty keep set");
  if (hop < 2) throw PreconditionError("reconnection hop count must be at least 2");
  std::vector<VertexId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<VertexId> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || static_cast<std::size_t>(ids[i]) >= g.num_vertices()) {
      throw PreconditionError("keep-set vertex out of range");
    }
    local[ids[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const std::vector<int> dist = HopDistances(g, ids[i], hop);
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const int d = dist[ids[j]];
      if (d >= 1 && d <= hop) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1.0});
      }
    }
  }
  return MultiresLevel{Graph(ids.size(), std::move(edges)), std::move(ids)};
}

Pyramid AnalyzePyramid(const Graph& g, std::span<const double> signal,
                       const KernelSet& kernels, const PyramidOptions& options) {
  if (signal.size() != g.num_vertices()) {
    throw PreconditionError("signal length does not match the graph");
  }
  Pyramid pyramid;
  std::vector<VertexId> all(g.num_vertices());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
  MultiresLevel current{g, all};
  Signal s(signal.begin(), signal.end());
  for (std::size_t l = 0; l < options.levels; ++l) {
    BipartiteDecomposition d = HararyDecompose(current.graph, GreedyColoring(current.graph));
    const SeparableFilterbank bank(current.graph, d, kernels, options.mode,
                                   options.dense_limit);
    SubbandTree tree = bank.Analyze(s);
    const SubbandChannel& low = *tree.Find(std::string(d.dimension(), 'L'));
    const bool last = l + 1 == options.levels || low.vertices.size() < 2 ||
                      current.graph.num_edges() == 0;
    if (last) {
      pyramid.levels.push_back({std::move(current), std::move(d), std::move(tree)});
      break;
    }
    MultiresLevel next = DownsampledGraph(current.graph, low.vertices, options.hop);
    s = low.coefficients;
    pyramid.levels.push_back({std::move(current), std::move(d), std::move(tree)});
    current = std::move(next);
  }
  return pyramid;
}

Signal SynthesizePyramid(const Pyramid& pyramid, const KernelSet& kernels,
                         const PyramidOptions& options) {
  Signal coarse;
  for (auto it = pyramid.levels.rbegin(); it != pyramid.levels.rend(); ++it) {
    const SeparableFilterbank bank(it->level.graph, it->decomposition, kernels, options.mode,
                                   options.dense_limit);
    SubbandTree tree = it->tree;
    if (it != pyramid.levels.rbegin()) {
      SubbandChannel& low = *tree.Find(std::string(it->decomposition.dimension(), 'L'));
      if (coarse.size() != low.vertices.size()) {
        throw PreconditionError("pyramid levels do not fit together");
      }
      low.coefficients = coarse;
    }
    coarse = bank.Synthesize(tree);
  }
  return coarse;
}

}  // namespace graphfb
