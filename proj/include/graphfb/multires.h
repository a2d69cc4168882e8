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

#ifndef GRAPHFB_MULTIRES_H_
#define GRAPHFB_MULTIRES_H_

#include <span>
#include <vector>

#include "graphfb/common.h"
#include "graphfb/decomposition.h"
#include "graphfb/graph.h"
#include "graphfb/kernel.h"
#include "graphfb/separable.h"

namespace graphfb {

// A coarser graph on a subset of the vertices of a finer one.
struct MultiresLevel {
  Graph graph;
  std::vector<VertexId> original_ids;  // vertex i of graph is original_ids[i]
};

inline constexpr int kDefaultReconnectionHops = 2;

// Kept vertices (sorted, deduplicated) joined by unit-weight edges whenever
// their geodesic distance in g is between 1 and hop. Throws
// PreconditionError when keep is empty or hop < 2.
MultiresLevel DownsampledGraph(const Graph& g, std::span<const VertexId> keep,
                               int hop = kDefaultReconnectionHops);

struct PyramidOptions {
  std::size_t levels = 2;
  int hop = kDefaultReconnectionHops;
  FilterMode mode = FilterMode::kExact;
  std::size_t dense_limit = kDefaultDenseLimit;
};

// One analysis level: the graph it runs on (ids relative to the previous,
// finer level), its decomposition and its subbands. Below the coarsest
// level, the all-L channel is the next level's input and synthesis replaces
// it with that level's reconstruction.
struct PyramidLevel {
  MultiresLevel level;
  BipartiteDecomposition decomposition;
  SubbandTree tree;
};

struct Pyramid {
  std::vector<PyramidLevel> levels;
};

// Multiresolution analysis: at each level, greedy-colors the current graph,
// runs the Harary decomposition and the separable filterbank, then moves the
// all-L channel to the graph downsampled on its vertices. Stops early when
// that channel has fewer than two vertices or the graph has no edges.
// kernels must suit options.mode (polynomial kernels in polynomial mode).
Pyramid AnalyzePyramid(const Graph& g, std::span<const double> signal,
                       const KernelSet& kernels, const PyramidOptions& options);
// Inverse of AnalyzePyramid.
Signal SynthesizePyramid(const Pyramid& pyramid, const KernelSet& kernels,
                         const PyramidOptions& options);

}  // namespace graphfb

#endif  // GRAPHFB_MULTIRES_H_
