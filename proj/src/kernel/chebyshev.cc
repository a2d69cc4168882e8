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

#include "graphfb/chebyshev.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "graphfb/gft.h"
#include "graphfb/laplacian.h"

namespace graphfb {

PolynomialKernel ChebyshevFit(const SpectralKernel& kernel, std::size_t degree,
                              std::size_t quadrature_points) {
  if (degree < 1) throw PreconditionError("Chebyshev degree must be at least 1");
  if (quadrature_points < degree + 1) {
    throw PreconditionError("need at least degree + 1 quadrature points");
  }
  const double m = static_cast<double>(quadrature_points);
  std::vector<double> samples(quadrature_points);
  std::vector<double> theta(quadrature_points);
  for (std::size_t k = 0; k < quadrature_points; ++k) {
    theta[k] = std::numbers::pi * (static_cast<double>(k) + 0.5) / m;
    samples[k] = kernel(1.0 + std::cos(theta[k]));
  }
  std::vector<double> c(degree + 1);
  for (std::size_t j = 0; j <= degree; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < quadrature_points; ++k) {
      acc += samples[k] * std::cos(static_cast<double>(j) * theta[k]);
    }
    c[j] = 2.0 * acc / m;
  }
  return PolynomialKernel(std::move(c));
}

KernelSet PolynomialQmf(const SpectralKernel& h0, std::size_t degree,
                        std::size_t quadrature_points) {
  KernelSet set = QmfCompanions(SpectralKernel::Polynomial(
      ChebyshevFit(h0, degree, quadrature_points), h0.gain()));
  set.gain = h0.gain();
  return set;
}

Signal ApplyPolynomialFilter(const Graph& g, const PolynomialKernel& p,
                             std::span<const double> signal, Execution execution) {
  if (signal.size() != g.num_vertices()) {
    throw PreconditionError("signal length does not match the graph");
  }
  return ApplyPolynomialFilter(ShiftedLaplacian(g), p, signal, execution);
}

Signal ApplyPolynomialFilter(const CsrMatrix& shifted, const PolynomialKernel& p,
                             std::span<const double> signal, Execution execution) {
  const std::size_t n = shifted.size();
  if (signal.size() != n) {
    throw PreconditionError("signal length does not match the operator");
  }
  const auto c = p.coefficients();
  auto multiply = [&](std::span<const double> x, std::span<double> y) {
    if (execution == Execution::kSerial) {
      shifted.MultiplySerial(x, y);
    } else {
      shifted.Multiply(x, y);
    }
  };
  Signal out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * c[0] * signal[i];
  if (p.degree() == 0) return out;

  Signal prev(signal.begin(), signal.end());
  Signal cur(n);
  Signal next(n);
  multiply(prev, cur);
  for (std::size_t i = 0; i < n; ++i) out[i] += c[1] * cur[i];
  for (std::size_t j = 2; j <= p.degree(); ++j) {
    multiply(cur, next);
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 2.0 * next[i] - prev[i];
      out[i] += c[j] * next[i];
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return out;
}

Signal ApplyExactFilter(const Spectrum& spectrum, const SpectralKernel& kernel,
                        std::span<const double> signal) {
  Signal coeffs = Gft(signal, spectrum);
  std::vector<double> response(spectrum.groups().size());
  for (std::size_t a = 0; a < response.size(); ++a) {
    response[a] = kernel(spectrum.groups()[a].value);
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= response[spectrum.group_of(i)];
  return Igft(coeffs, spectrum);
}

DenseMatrix ExactFilterMatrix(const Spectrum& spectrum, const SpectralKernel& kernel) {
  const std::size_t n = spectrum.size();
  const DenseMatrix& u = spectrum.eigenvectors();
  DenseMatrix scaled = u;
  for (std::size_t j = 0; j < n; ++j) {
    const double k = kernel(spectrum.grouped_value(j));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= k;
  }
  return Multiply(scaled, u.Transposed());
}

DenseMatrix PolynomialFilterMatrix(const Graph& g, const PolynomialKernel& p) {
  const std::size_t n = g.num_vertices();
  const CsrMatrix shifted = ShiftedLaplacian(g);
  DenseMatrix out(n, n);
  Signal e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const Signal col = ApplyPolynomialFilter(shifted, p, e);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = col[i];
    e[j] = 0.0;
  }
  return out;
}

std::vector<double> UniformGrid(std::size_t points, double lo, double hi) {
  if (points < 2) throw PreconditionError("a grid needs at least two points");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

double MaxGridError(const SpectralKernel& a, const SpectralKernel& b,
                    std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(a(x) - b(x)));
  return worst;
}

}  // namespace graphfb
