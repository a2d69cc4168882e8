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

#include "graphfb/two_channel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "graphfb/chebyshev.h"
#include "graphfb/laplacian.h"

namespace graphfb {
namespace {

const PolynomialKernel& RequirePolynomial(const SpectralKernel& k) {
  if (k.polynomial() == nullptr) {
    throw PreconditionError("polynomial mode needs polynomial kernels, got '" + k.name() +
                            "'");
  }
  return *k.polynomial();
}

void CheckLength(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw PreconditionError(std::string(what) + " has length " + std::to_string(got) +
                            ", expected " + std::to_string(want));
  }
}

}  // namespace

TwoChannelBank::TwoChannelBank(Graph graph, Bipartition partition, KernelSet kernels,
                               FilterMode mode, std::size_t dense_limit)
    : graph_(std::move(graph)),
      partition_(std::move(partition)),
      kernels_(std::move(kernels)),
      mode_(mode),
      synthesis_gain_(2.0 / (kernels_.gain * kernels_.gain)) {
  CheckLength(partition_.num_vertices(), graph_.num_vertices(), "bipartition");
  if (!partition_.Separates(graph_)) {
    throw PreconditionError("two-channel host graph is not bipartite under the partition");
  }
  for (std::size_t v = 0; v < graph_.num_vertices(); ++v) {
    if (graph_.degree_count(static_cast<VertexId>(v)) == 0) {
      isolated_.push_back(static_cast<VertexId>(v));
    }
  }
  if (mode_ == FilterMode::kExact) {
    spectrum_ = std::make_shared<const Spectrum>(
        Eigendecompose(graph_, SpectrumOptions{.dense_limit = dense_limit}));
  } else {
    RequirePolynomial(kernels_.h0);
    RequirePolynomial(kernels_.h1);
    RequirePolynomial(kernels_.g0);
    RequirePolynomial(kernels_.g1);
    shifted_ = ShiftedLaplacian(graph_);
  }
}

Signal TwoChannelBank::Filter(const SpectralKernel& kernel,
                              std::span<const double> signal) const {
  CheckLength(signal.size(), graph_.num_vertices(), "signal");
  if (mode_ == FilterMode::kExact) return ApplyExactFilter(*spectrum_, kernel, signal);
  return ApplyPolynomialFilter(shifted_, RequirePolynomial(kernel), signal);
}

DenseMatrix TwoChannelBank::FilterMatrix(const SpectralKernel& kernel) const {
  if (mode_ == FilterMode::kExact) return ExactFilterMatrix(*spectrum_, kernel);
  return PolynomialFilterMatrix(graph_, RequirePolynomial(kernel));
}

Signal TwoChannelBank::AnalyzeFull(std::span<const double> signal) const {
  const Signal low = Filter(kernels_.h0, signal);
  const Signal high = Filter(kernels_.h1, signal);
  Signal y(signal.size());
  for (std::size_t v = 0; v < y.size(); ++v) {
    y[v] = partition_.is_high(static_cast<VertexId>(v)) ? high[v] : low[v];
  }
  for (VertexId v : isolated_) y[v] = signal[v] / std::numbers::sqrt2;
  return y;
}

Signal TwoChannelBank::SynthesizeFull(std::span<const double> coefficients) const {
  CheckLength(coefficients.size(), graph_.num_vertices(), "coefficient vector");
  const std::size_t n = coefficients.size();
  Signal up_low(n, 0.0);
  Signal up_high(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    (partition_.is_high(static_cast<VertexId>(v)) ? up_high : up_low)[v] = coefficients[v];
  }
  for (VertexId v : isolated_) up_low[v] = up_high[v] = 0.0;
  const Signal a = Filter(kernels_.g0, up_low);
  const Signal b = Filter(kernels_.g1, up_high);
  Signal out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = synthesis_gain_ * (a[v] + b[v]);
  for (VertexId v : isolated_) out[v] = std::numbers::sqrt2 * coefficients[v];
  return out;
}

TwoChannelCoefficients TwoChannelBank::Analyze(std::span<const double> signal) const {
  const Signal y = AnalyzeFull(signal);
  TwoChannelCoefficients out;
  for (std::size_t v = 0; v < y.size(); ++v) {
    (partition_.is_high(static_cast<VertexId>(v)) ? out.high : out.low).push_back(y[v]);
  }
  return out;
}

Signal TwoChannelBank::Synthesize(std::span<const double> low,
                                  std::span<const double> high) const {
  const std::size_t n = graph_.num_vertices();
  std::size_t num_high = 0;
  for (std::size_t v = 0; v < n; ++v) num_high += partition_.is_high(static_cast<VertexId>(v));
  CheckLength(low.size(), n - num_high, "lowpass subband");
  CheckLength(high.size(), num_high, "highpass subband");
  Signal y(n);
  std::size_t li = 0;
  std::size_t hi = 0;
  for (std::size_t v = 0; v < n; ++v) {
    y[v] = partition_.is_high(static_cast<VertexId>(v)) ? high[hi++] : low[li++];
  }
  return SynthesizeFull(y);
}

DenseMatrix TwoChannelBank::AnalysisOperator() const {
  const DenseMatrix h0 = FilterMatrix(kernels_.h0);
  const DenseMatrix h1 = FilterMatrix(kernels_.h1);
  const std::size_t n = graph_.num_vertices();
  DenseMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double b = partition_.beta(static_cast<VertexId>(i));
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = 0.5 * (h0(i, j) + h1(i, j)) + 0.5 * b * (h1(i, j) - h0(i, j));
    }
  }
  for (VertexId v : isolated_) {
    for (double& x : t.row(v)) x = 0.0;
    t(v, v) = 1.0 / std::numbers::sqrt2;
  }
  return t;
}

double PrReport::max() const {
  return std::max({aliasing, distortion, orthogonality_cross, orthogonality_power});
}

PrReport VerifyPrConditions(const KernelSet& k, std::span<const double> lambdas) {
  const double c2 = k.gain * k.gain;
  PrReport r;
  for (double l : lambdas) {
    const double m = 2.0 - l;
    const double h0 = k.h0(l), h1 = k.h1(l), g0 = k.g0(l), g1 = k.g1(l);
    const double h0m = k.h0(m), h1m = k.h1(m);
    r.aliasing = std::max(r.aliasing, std::abs(g0 * h0m - g1 * h1m));
    r.distortion = std::max(r.distortion, std::abs(g0 * h0 + g1 * h1 - c2));
    r.orthogonality_cross = std::max(r.orthogonality_cross, std::abs(h0 * h0m - h1 * h1m));
    r.orthogonality_power = std::max(r.orthogonality_power, std::abs(h0 * h0 + h1 * h1 - c2));
  }
  return r;
}

PrReport VerifyPrConditions(const KernelSet& kernels, const Spectrum& spectrum) {
  std::vector<double> lambdas;
  for (const EigenspaceGroup& g : spectrum.groups()) lambdas.push_back(g.value);
  return VerifyPrConditions(kernels, lambdas);
}

double OrthonormalityResidual(const DenseMatrix& t) {
  DenseMatrix gram = Multiply(t.Transposed(), t);
  gram *= 2.0;
  gram -= DenseMatrix::Identity(t.cols());
  return FrobeniusNorm(gram);
}

}  // namespace graphfb
