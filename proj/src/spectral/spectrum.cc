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

#include "graphfb/spectrum.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "graphfb/eigensolver.h"
#include "graphfb/graph_io.h"
#include "graphfb/laplacian.h"

namespace graphfb {
namespace {

constexpr double kSignTolerance = 1e-10;

void NormalizeSigns(DenseMatrix& vectors) {
  const std::size_t n = vectors.rows();
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = vectors(i, j);
      if (std::abs(x) > kSignTolerance) {
        if (x < 0) {
          for (std::size_t k = 0; k < n; ++k) vectors(k, j) = -vectors(k, j);
        }
        break;
      }
    }
  }
}

void CheckLimit(std::size_t n, const SpectrumOptions& options) {
  if (n > options.dense_limit) {
    throw PreconditionError("dense eigendecomposition of " + std::to_string(n) +
                            " vertices exceeds the limit of " +
                            std::to_string(options.dense_limit));
  }
}

}  // namespace

Spectrum::Spectrum(std::vector<double> eigenvalues, DenseMatrix eigenvectors,
                   double group_tolerance)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
  if (vectors_.rows() != values_.size() || vectors_.cols() != values_.size()) {
    throw PreconditionError("eigenvector matrix does not match eigenvalue count");
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] < values_[i - 1]) {
      throw PreconditionError("eigenvalues must be nondecreasing");
    }
  }
  group_index_.resize(values_.size());
  std::size_t first = 0;
  for (std::size_t i = 1; i <= values_.size(); ++i) {
    const bool split =
        i == values_.size() ||
        values_[i] - values_[i - 1] >
            group_tolerance * std::max(1.0, std::abs(values_[i]));
    if (!split) continue;
    const double sum =
        std::accumulate(values_.begin() + static_cast<std::ptrdiff_t>(first),
                        values_.begin() + static_cast<std::ptrdiff_t>(i), 0.0);
    for (std::size_t k = first; k < i; ++k) group_index_[k] = groups_.size();
    groups_.push_back({sum / static_cast<double>(i - first), first, i - first});
    first = i;
  }
}

DenseMatrix Spectrum::Projector(std::size_t group) const {
  const EigenspaceGroup& g = groups_.at(group);
  const std::size_t n = size();
  DenseMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = g.first; k < g.first + g.count; ++k) {
        acc += vectors_(i, k) * vectors_(j, k);
      }
      p(i, j) = acc;
    }
  }
  return p;
}

Spectrum Eigendecompose(const Graph& g, const SpectrumOptions& options) {
  const std::size_t n = g.num_vertices();
  CheckLimit(n, options);
  const DenseMatrix lap = NormalizedLaplacianDense(g);
  const std::vector<int> comp = ConnectedComponents(g);
  const int num_comp = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(num_comp));
  for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);

  std::vector<double> values;
  values.reserve(n);
  DenseMatrix vectors(n, n);
  std::size_t column = 0;
  for (const auto& vs : members) {
    const std::size_t m = vs.size();
    DenseMatrix sub(m, m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) sub(a, b) = lap(vs[a], vs[b]);
    }
    const SymmetricEigenResult r = SymmetricEigen(sub);
    for (std::size_t j = 0; j < m; ++j) {
      values.push_back(r.values[j]);
      for (std::size_t a = 0; a < m; ++a) vectors(vs[a], column) = r.vectors(a, j);
      ++column;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> sorted(n);
  DenseMatrix sorted_vectors(n, n);
  for (std::size_t j = 0; j < n; ++j) sorted[j] = values[order[j]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sorted_vectors(i, j) = vectors(i, order[j]);
  }
  NormalizeSigns(sorted_vectors);
  return Spectrum(std::move(sorted), std::move(sorted_vectors), options.group_tolerance);
}

Spectrum EigendecomposeMatrix(const DenseMatrix& symmetric,
                              const SpectrumOptions& options) {
  CheckLimit(symmetric.rows(), options);
  SymmetricEigenResult r = SymmetricEigen(symmetric);
  NormalizeSigns(r.vectors);
  return Spectrum(std::move(r.values), std::move(r.vectors), options.group_tolerance);
}

void WriteSpectrum(std::ostream& out, const Spectrum& spectrum) {
  UseRoundTripPrecision(out);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    out << i << ' ' << spectrum.eigenvalues()[i] << '\n';
  }
}

}  // namespace graphfb
