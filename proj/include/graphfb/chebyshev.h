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

#ifndef GRAPHFB_CHEBYSHEV_H_
#define GRAPHFB_CHEBYSHEV_H_

#include <span>
#include <vector>

#include "graphfb/common.h"
#include "graphfb/dense_matrix.h"
#include "graphfb/graph.h"
#include "graphfb/kernel.h"
#include "graphfb/sparse_matrix.h"
#include "graphfb/spectrum.h"

namespace graphfb {

inline constexpr std::size_t kDefaultQuadraturePoints = 1000;

// Degree-m truncated Chebyshev series of kernel over [0, 2] via cosine-node
// quadrature with the given number of nodes:
//   c_j = (2 / M) sum_k kernel(1 + cos t_k) cos(j t_k), t_k = pi (k - 1/2) / M.
PolynomialKernel ChebyshevFit(const SpectralKernel& kernel, std::size_t degree,
                              std::size_t quadrature_points = kDefaultQuadraturePoints);

// Fits h0 and builds the QMF set from the fitted polynomial (h1, g1 use the
// sign-flipped coefficients). The set's gain is that of the analytic h0.
KernelSet PolynomialQmf(const SpectralKernel& h0, std::size_t degree,
                        std::size_t quadrature_points = kDefaultQuadraturePoints);

// p(L) f by the three-term recurrence on the shifted operator L - I. No
// eigendecomposition and no dense powers: output entries at vertices more
// than degree hops from supp(f) are exactly zero.
Signal ApplyPolynomialFilter(const Graph& g, const PolynomialKernel& p,
                             std::span<const double> signal,
                             Execution execution = Execution::kParallel);
// Same with a precomputed ShiftedLaplacian(g).
Signal ApplyPolynomialFilter(const CsrMatrix& shifted, const PolynomialKernel& p,
                             std::span<const double> signal,
                             Execution execution = Execution::kParallel);

// sum_lambda kernel(lambda) P_lambda f, evaluating the kernel once per
// eigenspace group.
Signal ApplyExactFilter(const Spectrum& spectrum, const SpectralKernel& kernel,
                        std::span<const double> signal);

// Dense operator U diag(kernel(lambda)) U^t.
DenseMatrix ExactFilterMatrix(const Spectrum& spectrum, const SpectralKernel& kernel);
// Dense operator p(L), assembled column by column from the recurrence.
DenseMatrix PolynomialFilterMatrix(const Graph& g, const PolynomialKernel& p);

// points >= 2 samples of [lo, hi] including both endpoints.
std::vector<double> UniformGrid(std::size_t points, double lo = 0.0, double hi = 2.0);

// max over the grid of |a(lambda) - b(lambda)|.
double MaxGridError(const SpectralKernel& a, const SpectralKernel& b,
                    std::span<const double> grid);

}  // namespace graphfb

#endif  // GRAPHFB_CHEBYSHEV_H_
