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

#include "graphfb/gft.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphfb/laplacian.h"

namespace graphfb {
namespace {

void CheckLength(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw PreconditionError(std::string(what) + " has length " + std::to_string(got) +
                            ", expected " + std::to_string(want));
  }
}

}  // namespace

Signal Gft(std::span<const double> signal, const Spectrum& spectrum) {
  CheckLength(signal.size(), spectrum.size(), "signal");
  return TransposeMatVec(spectrum.eigenvectors(), signal);
}

Signal Igft(std::span<const double> coefficients, const Spectrum& spectrum) {
  CheckLength(coefficients.size(), spectrum.size(), "coefficient vector");
  return MatVec(spectrum.eigenvectors(), coefficients);
}

DownsamplingMap::DownsamplingMap(std::vector<int> beta) : beta_(std::move(beta)) {
  for (int b : beta_) {
    if (b != 1 && b != -1) throw PreconditionError("beta entries must be +1 or -1");
  }
}

DownsamplingMap DownsamplingMap::FromKeepSet(std::size_t num_vertices,
                                             std::span<const VertexId> keep) {
  std::vector<int> beta(num_vertices, -1);
  for (VertexId v : keep) {
    if (v < 0 || static_cast<std::size_t>(v) >= num_vertices) {
      throw PreconditionError("keep-set vertex out of range");
    }
    beta[v] = 1;
  }
  return DownsamplingMap(std::move(beta));
}

DownsamplingMap DownsamplingMap::HighOf(const Bipartition& partition) {
  std::vector<int> beta(partition.num_vertices());
  for (std::size_t v = 0; v < beta.size(); ++v) {
    beta[v] = partition.beta(static_cast<VertexId>(v));
  }
  return DownsamplingMap(std::move(beta));
}

DownsamplingMap DownsamplingMap::LowOf(const Bipartition& partition) {
  return HighOf(partition).Complement();
}

DownsamplingMap DownsamplingMap::Complement() const {
  std::vector<int> beta(beta_);
  for (int& b : beta) b = -b;
  return DownsamplingMap(std::move(beta));
}

Signal DownsamplingMap::ApplyJ(std::span<const double> signal) const {
  CheckLength(signal.size(), size(), "signal");
  Signal out(signal.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = beta_[i] * signal[i];
  return out;
}

DenseMatrix DownsamplingMap::LeftApplyJ(const DenseMatrix& m) const {
  CheckLength(m.rows(), size(), "operator");
  DenseMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (beta_[i] < 0) {
      for (double& x : out.row(i)) x = -x;
    }
  }
  return out;
}

DenseMatrix DownsamplingMap::RightApplyJ(const DenseMatrix& m) const {
  CheckLength(m.cols(), size(), "operator");
  DenseMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (beta_[j] < 0) out(i, j) = -out(i, j);
    }
  }
  return out;
}

Signal DuOperator(std::span<const double> signal, const DownsamplingMap& map) {
  CheckLength(signal.size(), map.size(), "signal");
  Signal out(signal.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = map.keeps(static_cast<VertexId>(i)) ? signal[i] : 0.0;
  }
  return out;
}

Signal DuSpectral::Combined() const {
  Signal out(original.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (original[i] + deformed[i]);
  return out;
}

DuSpectral DuSpectralDecomposition(std::span<const double> signal,
                                   const DownsamplingMap& map,
                                   const Spectrum& spectrum) {
  CheckLength(signal.size(), spectrum.size(), "signal");
  CheckLength(map.size(), spectrum.size(), "downsampling map");
  DuSpectral out;
  out.original = Gft(signal, spectrum);
  // <J u_l, f> = <u_l, J f>.
  out.deformed = Gft(map.ApplyJ(signal), spectrum);
  return out;
}

FoldingReport VerifySpectralFolding(const Graph& g, const Bipartition& partition,
                                    const Spectrum& spectrum) {
  if (!IsBipartite(g).has_value()) {
    throw PreconditionError("spectral folding requires a bipartite graph");
  }
  CheckLength(partition.num_vertices(), g.num_vertices(), "bipartition");
  CheckLength(spectrum.size(), g.num_vertices(), "spectrum");
  if (!partition.Separates(g)) {
    throw PreconditionError("bipartition does not separate the graph's edges");
  }
  const CsrMatrix lap = NormalizedLaplacian(g);
  const DownsamplingMap j = DownsamplingMap::HighOf(partition);
  const std::size_t n = g.num_vertices();
  FoldingReport report;
  Signal y(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Signal ju = j.ApplyJ(spectrum.eigenvector(k));
    lap.Multiply(ju, y);
    const double target = 2.0 - spectrum.eigenvalues()[k];
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - target * ju[i];
      sq += r * r;
    }
    const double residual = std::sqrt(sq);
    if (residual > report.max_residual) {
      report.max_residual = residual;
      report.worst_index = k;
    }
  }
  return report;
}

bool SpectrumSymmetricAboutOne(const Spectrum& spectrum, double tol) {
  const auto values = spectrum.eigenvalues();
  const std::size_t n = values.size();
  // Sorted 2 - lambda is the reversed list mapped through 2 - x.
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(values[i] - (2.0 - values[n - 1 - i])) > tol) return false;
  }
  return true;
}

double ProjectorAlgebraResidual(const Spectrum& spectrum) {
  const std::size_t groups = spectrum.groups().size();
  std::vector<DenseMatrix> projectors;
  projectors.reserve(groups);
  for (std::size_t a = 0; a < groups; ++a) projectors.push_back(spectrum.Projector(a));
  double worst = 0.0;
  for (std::size_t a = 0; a < groups; ++a) {
    for (std::size_t b = 0; b < groups; ++b) {
      DenseMatrix prod = Multiply(projectors[a], projectors[b]);
      if (a == b) prod -= projectors[a];
      worst = std::max(worst, FrobeniusNorm(prod));
    }
  }
  return worst;
}

}  // namespace graphfb
