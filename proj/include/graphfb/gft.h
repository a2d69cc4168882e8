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

#ifndef GRAPHFB_GFT_H_
#define GRAPHFB_GFT_H_

#include <span>
#include <vector>

#include "graphfb/coloring.h"
#include "graphfb/common.h"
#include "graphfb/graph.h"
#include "graphfb/spectrum.h"

namespace graphfb {

// Spectral coefficients: entry i is <u_i, f>.
Signal Gft(std::span<const double> signal, const Spectrum& spectrum);
// Linear combination of eigenvectors with the given coefficients.
Signal Igft(std::span<const double> coefficients, const Spectrum& spectrum);

// Sign vector beta over {-1, +1}; the keep set is {n : beta(n) = +1}. As an
// operator J = diag(beta), which squares to the identity.
class DownsamplingMap {
 public:
  explicit DownsamplingMap(std::vector<int> beta);
  static DownsamplingMap FromKeepSet(std::size_t num_vertices,
                                     std::span<const VertexId> keep);
  // beta_H: +1 on H, -1 on L.
  static DownsamplingMap HighOf(const Bipartition& partition);
  // beta_L = -beta_H.
  static DownsamplingMap LowOf(const Bipartition& partition);

  std::size_t size() const { return beta_.size(); }
  int beta(VertexId v) const { return beta_[v]; }
  bool keeps(VertexId v) const { return beta_[v] > 0; }
  std::span<const int> betas() const { return beta_; }
  DownsamplingMap Complement() const;

  // J f.
  Signal ApplyJ(std::span<const double> signal) const;
  // J M (row scaling) and M J (column scaling) for dense operators.
  DenseMatrix LeftApplyJ(const DenseMatrix& m) const;
  DenseMatrix RightApplyJ(const DenseMatrix& m) const;

 private:
  std::vector<int> beta_;
};

// f_du(n) = (1 + beta(n)) f(n) / 2.
Signal DuOperator(std::span<const double> signal, const DownsamplingMap& map);

struct DuSpectral {
  Signal original;  // <u_l, f>
  Signal deformed;  // <J u_l, f>
  // (original + deformed) / 2, the spectrum of the DU output.
  Signal Combined() const;
};
DuSpectral DuSpectralDecomposition(std::span<const double> signal,
                                   const DownsamplingMap& map,
                                   const Spectrum& spectrum);

struct FoldingReport {
  double max_residual = 0.0;
  std::size_t worst_index = 0;
};
// Max over eigenvectors u (eigenvalue lambda) of
// ||L (J u) - (2 - lambda) J u||_2 with J = diag(beta_H). Throws
// PreconditionError when g is not bipartite or the partition does not
// separate its edges.
FoldingReport VerifySpectralFolding(const Graph& g, const Bipartition& partition,
                                    const Spectrum& spectrum);

// True when the sorted eigenvalues match the sorted values of 2 - lambda
// element-wise within tol.
bool SpectrumSymmetricAboutOne(const Spectrum& spectrum, double tol);

// Max Frobenius residual of P_a P_b - delta(a, b) P_a over all group pairs.
// Forms explicit projectors, so intended for small graphs.
double ProjectorAlgebraResidual(const Spectrum& spectrum);

}  // namespace graphfb

#endif  // GRAPHFB_GFT_H_
