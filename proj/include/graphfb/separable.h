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

#ifndef GRAPHFB_SEPARABLE_H_
#define GRAPHFB_SEPARABLE_H_

#include <span>
#include <string>
#include <vector>

#include "graphfb/common.h"
#include "graphfb/decomposition.h"
#include "graphfb/dense_matrix.h"
#include "graphfb/graph.h"
#include "graphfb/kernel.h"
#include "graphfb/two_channel.h"

namespace graphfb {

// Coefficients of one channel, stored at the vertices whose sign pattern
// across the stages equals the channel label.
struct SubbandChannel {
  std::string label;
  std::vector<VertexId> vertices;  // ascending
  Signal coefficients;             // coefficients[i] sits at vertices[i]
};

// Output of a K-stage separable analysis: all 2^K channels in label order
// (L before H), unpopulated channels kept with zero length.
struct SubbandTree {
  std::size_t dimension = 0;
  std::size_t num_vertices = 0;
  std::vector<SubbandChannel> channels;

  // Null when no channel has that label.
  const SubbandChannel* Find(std::string_view label) const;
  SubbandChannel* Find(std::string_view label);
  std::size_t total_coefficients() const;
  std::size_t non_empty_channels() const;
  // True when the channel vertex sets are disjoint and cover 0..N-1.
  bool PartitionsVertices() const;
  // Length-N vector holding each coefficient at its vertex.
  Signal Flatten() const;
};

// Channel of each vertex and the empty tree layout for a decomposition.
SubbandTree EmptyTree(const BipartiteDecomposition& d);
// Scatters a full-length coefficient vector into the channel layout.
SubbandTree TreeFromFull(const BipartiteDecomposition& d, std::span<const double> full);

struct ChannelEnergy {
  std::string label;
  std::size_t size = 0;
  double energy = 0.0;        // ||contribution||^2
  Signal contribution;        // synthesis with every other channel zeroed
};

struct EnergyReport {
  std::vector<ChannelEnergy> channels;
  Signal reconstruction;      // synthesis of the full tree
  double sum_residual = 0.0;  // max |sum of contributions - reconstruction|
  double total_energy() const;
};

// Cascade of two-channel banks, one per decomposition stage. Stage i filters
// on the subgraph of E_i (and its own normalized Laplacian) and runs on the
// full-length output of stage i - 1; since E_i never joins vertices that an
// earlier stage separated, this is the per-branch cascade. The overall
// analysis is T_a = T_aK ... T_a1 and synthesis is its gain-normalized
// transpose.
class SeparableFilterbank {
 public:
  // Same kernels at every stage.
  SeparableFilterbank(const Graph& g, BipartiteDecomposition decomposition,
                      const KernelSet& kernels, FilterMode mode,
                      std::size_t dense_limit = kDefaultDenseLimit);
  // One kernel set per stage.
  SeparableFilterbank(const Graph& g, BipartiteDecomposition decomposition,
                      std::span<const KernelSet> stage_kernels, FilterMode mode,
                      std::size_t dense_limit = kDefaultDenseLimit);

  const BipartiteDecomposition& decomposition() const { return decomposition_; }
  std::size_t dimension() const { return decomposition_.dimension(); }
  const TwoChannelBank& stage(std::size_t i) const { return stages_[i]; }
  std::size_t num_vertices() const { return decomposition_.num_vertices; }

  Signal AnalyzeFull(std::span<const double> signal) const;
  Signal SynthesizeFull(std::span<const double> coefficients) const;
  SubbandTree Analyze(std::span<const double> signal) const;
  // Throws PreconditionError when the tree does not match the decomposition.
  Signal Synthesize(const SubbandTree& tree) const;

  // Synthesize channel by channel.
  EnergyReport ChannelEnergies(const SubbandTree& tree) const;

  // Dense T_a of the whole cascade.
  DenseMatrix AnalysisOperator() const;
  // prod_i (I + s_i J_i)/2 T_{a,i} over stages K..1, with s_i = +1 when
  // label[i] == 'H' and -1 for 'L'. Away from vertices left isolated by a
  // stage this is prod_i (I + s_i J_i)/2 H_{s_i, i} (H1 for H, H0 for L).
  DenseMatrix ChannelOperator(std::string_view label) const;

 private:
  BipartiteDecomposition decomposition_;
  std::vector<TwoChannelBank> stages_;
};

// max over stages i >= 2, earlier stages l < i and j in {0, 1} of
// ||H_{i,j} J_l - J_l H_{i,j}||_F, with H_{i,j} built on the subgraph of E_i.
// Works on any decomposition, including ones that violate the Harary rule.
double CommutationResidual(const Graph& g, const BipartiteDecomposition& d,
                           const KernelSet& kernels, FilterMode mode,
                           std::size_t dense_limit = kDefaultDenseLimit);

// Predicted relative round-trip error of the cascade from the per-stage
// kernel residuals on a grid: with eps_i = (distortion_i + aliasing_i) / c^2,
// returns prod_i (1 + eps_i) - 1. Zero for exact graph-QMF kernels.
double PredictedErrorBudget(std::span<const KernelSet> stage_kernels,
                            std::span<const double> grid);

}  // namespace graphfb

#endif  // GRAPHFB_SEPARABLE_H_
