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

#include "graphfb/separable.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "graphfb/chebyshev.h"

namespace graphfb {
namespace {

std::vector<KernelSet> Repeat(const KernelSet& k, std::size_t times) {
  return std::vector<KernelSet>(times, k);
}

std::size_t LabelIndex(std::string_view label) {
  std::size_t code = 0;
  for (char c : label) code = 2 * code + (c == 'H' ? 1 : 0);
  return code;
}

}  // namespace

const SubbandChannel* SubbandTree::Find(std::string_view label) const {
  for (const SubbandChannel& c : channels) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

SubbandChannel* SubbandTree::Find(std::string_view label) {
  return const_cast<SubbandChannel*>(std::as_const(*this).Find(label));
}

std::size_t SubbandTree::total_coefficients() const {
  std::size_t total = 0;
  for (const SubbandChannel& c : channels) total += c.coefficients.size();
  return total;
}

std::size_t SubbandTree::non_empty_channels() const {
  return static_cast<std::size_t>(std::count_if(
      channels.begin(), channels.end(),
      [](const SubbandChannel& c) { return !c.vertices.empty(); }));
}

bool SubbandTree::PartitionsVertices() const {
  std::vector<int> seen(num_vertices, 0);
  for (const SubbandChannel& c : channels) {
    if (c.vertices.size() != c.coefficients.size()) return false;
    for (VertexId v : c.vertices) {
      if (v < 0 || static_cast<std::size_t>(v) >= num_vertices || seen[v]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

Signal SubbandTree::Flatten() const {
  Signal full(num_vertices, 0.0);
  for (const SubbandChannel& c : channels) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) full[c.vertices[i]] = c.coefficients[i];
  }
  return full;
}

SubbandTree EmptyTree(const BipartiteDecomposition& d) {
  SubbandTree tree;
  tree.dimension = d.dimension();
  tree.num_vertices = d.num_vertices;
  for (std::string& label : AllChannelLabels(d.dimension())) {
    tree.channels.push_back({std::move(label), {}, {}});
  }
  for (std::size_t v = 0; v < d.num_vertices; ++v) {
    const std::string label = ChannelLabelOf(d, static_cast<VertexId>(v));
    tree.channels[LabelIndex(label)].vertices.push_back(static_cast<VertexId>(v));
  }
  return tree;
}

SubbandTree TreeFromFull(const BipartiteDecomposition& d, std::span<const double> full) {
  if (full.size() != d.num_vertices) {
    throw PreconditionError("coefficient vector does not match the decomposition");
  }
  SubbandTree tree = EmptyTree(d);
  for (SubbandChannel& c : tree.channels) {
    for (VertexId v : c.vertices) c.coefficients.push_back(full[v]);
  }
  return tree;
}

double EnergyReport::total_energy() const {
  double total = 0.0;
  for (const ChannelEnergy& c : channels) total += c.energy;
  return total;
}

SeparableFilterbank::SeparableFilterbank(const Graph& g,
                                         BipartiteDecomposition decomposition,
                                         const KernelSet& kernels, FilterMode mode,
                                         std::size_t dense_limit)
    : SeparableFilterbank(g, decomposition,
                          Repeat(kernels, decomposition.dimension()), mode,
                          dense_limit) {}

SeparableFilterbank::SeparableFilterbank(const Graph& g,
                                         BipartiteDecomposition decomposition,
                                         std::span<const KernelSet> stage_kernels,
                                         FilterMode mode, std::size_t dense_limit)
    : decomposition_(std::move(decomposition)) {
  const DecompositionCheck check = CheckDecomposition(g, decomposition_);
  if (!check.ok()) throw PreconditionError("invalid decomposition: " + check.message);
  if (stage_kernels.size() != decomposition_.dimension()) {
    throw PreconditionError("need one kernel set per decomposition stage");
  }
  stages_.reserve(decomposition_.dimension());
  for (std::size_t i = 0; i < decomposition_.dimension(); ++i) {
    const DecompositionStage& s = decomposition_.stages[i];
    stages_.emplace_back(SubgraphRestricted(g, s.edges), s.partition, stage_kernels[i], mode,
                         dense_limit);
  }
}

Signal SeparableFilterbank::AnalyzeFull(std::span<const double> signal) const {
  if (signal.size() != num_vertices()) {
    throw PreconditionError("signal length does not match the graph");
  }
  Signal y(signal.begin(), signal.end());
  for (const TwoChannelBank& bank : stages_) y = bank.AnalyzeFull(y);
  return y;
}

Signal SeparableFilterbank::SynthesizeFull(std::span<const double> coefficients) const {
  if (coefficients.size() != num_vertices()) {
    throw PreconditionError("coefficient vector does not match the graph");
  }
  Signal f(coefficients.begin(), coefficients.end());
  for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) f = it->SynthesizeFull(f);
  return f;
}

SubbandTree SeparableFilterbank::Analyze(std::span<const double> signal) const {
  return TreeFromFull(decomposition_, AnalyzeFull(signal));
}

Signal SeparableFilterbank::Synthesize(const SubbandTree& tree) const {
  const SubbandTree layout = EmptyTree(decomposition_);
  if (tree.dimension != layout.dimension || tree.num_vertices != layout.num_vertices ||
      tree.channels.size() != layout.channels.size()) {
    throw PreconditionError("subband tree does not match the decomposition");
  }
  for (std::size_t i = 0; i < layout.channels.size(); ++i) {
    const SubbandChannel& want = layout.channels[i];
    const SubbandChannel* got = tree.Find(want.label);
    if (got == nullptr || got->vertices != want.vertices ||
        got->coefficients.size() != want.vertices.size()) {
      throw PreconditionError("subband channel '" + want.label +
                              "' does not match the decomposition");
    }
  }
  return SynthesizeFull(tree.Flatten());
}

EnergyReport SeparableFilterbank::ChannelEnergies(const SubbandTree& tree) const {
  EnergyReport report;
  report.reconstruction = Synthesize(tree);
  Signal sum(num_vertices(), 0.0);
  for (const SubbandChannel& c : tree.channels) {
    SubbandTree only = tree;
    for (SubbandChannel& other : only.channels) {
      if (other.label != c.label) std::fill(other.coefficients.begin(), other.coefficients.end(), 0.0);
    }
    ChannelEnergy e{c.label, c.vertices.size(), 0.0, Synthesize(only)};
    for (std::size_t v = 0; v < sum.size(); ++v) {
      e.energy += e.contribution[v] * e.contribution[v];
      sum[v] += e.contribution[v];
    }
    report.channels.push_back(std::move(e));
  }
  for (std::size_t v = 0; v < sum.size(); ++v) {
    report.sum_residual =
        std::max(report.sum_residual, std::abs(sum[v] - report.reconstruction[v]));
  }
  return report;
}

DenseMatrix SeparableFilterbank::AnalysisOperator() const {
  DenseMatrix t = DenseMatrix::Identity(num_vertices());
  for (const TwoChannelBank& bank : stages_) t = Multiply(bank.AnalysisOperator(), t);
  return t;
}

DenseMatrix SeparableFilterbank::ChannelOperator(std::string_view label) const {
  if (label.size() != dimension()) {
    throw PreconditionError("channel label length must equal the dimension");
  }
  DenseMatrix t = DenseMatrix::Identity(num_vertices());
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    DenseMatrix stage = stages_[i].AnalysisOperator();
    const bool want_high = label[i] == 'H';
    for (std::size_t v = 0; v < num_vertices(); ++v) {
      if (stages_[i].partition().is_high(static_cast<VertexId>(v)) != want_high) {
        for (double& x : stage.row(v)) x = 0.0;
      }
    }
    t = Multiply(stage, t);
  }
  return t;
}

double CommutationResidual(const Graph& g, const BipartiteDecomposition& d,
                           const KernelSet& kernels, FilterMode mode,
                           std::size_t dense_limit) {
  double worst = 0.0;
  for (std::size_t i = 1; i < d.dimension(); ++i) {
    const Graph sub = SubgraphRestricted(g, d.stages[i].edges);
    // Stage filters depend only on the stage subgraph, not on its partition.
    std::optional<Spectrum> spectrum;
    if (mode == FilterMode::kExact) {
      spectrum = Eigendecompose(sub, SpectrumOptions{.dense_limit = dense_limit});
    }
    for (const SpectralKernel* k : {&kernels.h0, &kernels.h1}) {
      DenseMatrix h;
      if (mode == FilterMode::kExact) {
        h = ExactFilterMatrix(*spectrum, *k);
      } else if (k->polynomial() != nullptr) {
        h = PolynomialFilterMatrix(sub, *k->polynomial());
      } else {
        throw PreconditionError("polynomial mode needs polynomial kernels");
      }
      for (std::size_t l = 0; l < i; ++l) {
        const Bipartition& p = d.stages[l].partition;
        DenseMatrix diff(h.rows(), h.cols());
        for (std::size_t r = 0; r < h.rows(); ++r) {
          for (std::size_t c = 0; c < h.cols(); ++c) {
            // (H J - J H)(r, c) = H(r, c) (beta_c - beta_r).
            diff(r, c) = h(r, c) * (p.beta(static_cast<VertexId>(c)) -
                                    p.beta(static_cast<VertexId>(r)));
          }
        }
        worst = std::max(worst, FrobeniusNorm(diff));
      }
    }
  }
  return worst;
}

double PredictedErrorBudget(std::span<const KernelSet> stage_kernels,
                            std::span<const double> grid) {
  double product = 1.0;
  for (const KernelSet& k : stage_kernels) {
    const PrReport r = VerifyPrConditions(k, grid);
    product *= 1.0 + (r.distortion + r.aliasing) / (k.gain * k.gain);
  }
  return product - 1.0;
}

}  // namespace graphfb
