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

#ifndef GRAPHFB_TWO_CHANNEL_H_
#define GRAPHFB_TWO_CHANNEL_H_

#include <memory>
#include <span>
#include <vector>

#include "graphfb/coloring.h"
#include "graphfb/common.h"
#include "graphfb/dense_matrix.h"
#include "graphfb/graph.h"
#include "graphfb/kernel.h"
#include "graphfb/sparse_matrix.h"
#include "graphfb/spectrum.h"

namespace graphfb {

// kExact evaluates kernels on the eigendecomposition of the host's
// normalized Laplacian; kPolynomial runs the Chebyshev recurrence and needs
// every kernel of the set to be a polynomial kernel.
enum class FilterMode { kExact, kPolynomial };

struct TwoChannelCoefficients {
  Signal low;   // (H0 f)(v) for v in L, ascending vertex id
  Signal high;  // (H1 f)(v) for v in H, ascending vertex id
};

// Critically sampled two-channel filterbank on a bipartite graph.
//
// Analysis keeps H0 f on L and H1 f on H; synthesis returns
//   (2 / c^2) (G0 yL + G1 yH)
// with the subbands upsampled by zero filling, which is the identity for
// graph-QMF kernels in exact mode. Vertices with no incident edge carry no
// spectral folding; they are passed through as f(v) / sqrt(2) and restored
// with a factor sqrt(2), which keeps sqrt(2) T_a orthogonal.
class TwoChannelBank {
 public:
  TwoChannelBank(Graph graph, Bipartition partition, KernelSet kernels,
                 FilterMode mode, std::size_t dense_limit = kDefaultDenseLimit);

  const Graph& graph() const { return graph_; }
  const Bipartition& partition() const { return partition_; }
  const KernelSet& kernels() const { return kernels_; }
  FilterMode mode() const { return mode_; }
  // 2 / c^2.
  double synthesis_gain() const { return synthesis_gain_; }
  // Null in polynomial mode.
  const Spectrum* spectrum() const { return spectrum_.get(); }

  // Full-length form: y(v) = (H0 f)(v) on L and (H1 f)(v) on H, i.e. T_a f.
  Signal AnalyzeFull(std::span<const double> signal) const;
  Signal SynthesizeFull(std::span<const double> coefficients) const;

  TwoChannelCoefficients Analyze(std::span<const double> signal) const;
  Signal Synthesize(std::span<const double> low, std::span<const double> high) const;

  // Applies one kernel as a graph filter in this bank's mode.
  Signal Filter(const SpectralKernel& kernel, std::span<const double> signal) const;
  // Dense matrix of Filter().
  DenseMatrix FilterMatrix(const SpectralKernel& kernel) const;
  // T_a = 1/2 (H0 + H1) + 1/2 J (H1 - H0), J = diag(beta_H), with the
  // isolated-vertex rows replaced by e_v^t / sqrt(2).
  DenseMatrix AnalysisOperator() const;

 private:
  Graph graph_;
  Bipartition partition_;
  KernelSet kernels_;
  FilterMode mode_;
  double synthesis_gain_;
  std::vector<VertexId> isolated_;
  std::shared_ptr<const Spectrum> spectrum_;
  CsrMatrix shifted_;
};

// Residuals of the filterbank conditions, each a max over the sample set.
struct PrReport {
  double aliasing = 0.0;      // |g0(l) h0(2-l) - g1(l) h1(2-l)|
  double distortion = 0.0;    // |g0 h0 + g1 h1 - c^2|
  double orthogonality_cross = 0.0;  // |h0(l) h0(2-l) - h1(l) h1(2-l)|
  double orthogonality_power = 0.0;  // |h0^2 + h1^2 - c^2|
  double max() const;
};
PrReport VerifyPrConditions(const KernelSet& kernels, std::span<const double> lambdas);
// Samples at the grouped eigenvalues of a spectrum.
PrReport VerifyPrConditions(const KernelSet& kernels, const Spectrum& spectrum);

// ||(sqrt(2) T)^t (sqrt(2) T) - I||_F.
double OrthonormalityResidual(const DenseMatrix& analysis_operator);

}  // namespace graphfb

#endif  // GRAPHFB_TWO_CHANNEL_H_
