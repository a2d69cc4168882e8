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

#include "graphfb/laplacian.h"

#include <cmath>
#include <vector>

namespace graphfb {
namespace {

std::vector<double> InverseSqrtDegrees(const Graph& g) {
  std::vector<double> out(g.num_vertices(), 0.0);
  for (std::size_t v = 0; v < out.size(); ++v) {
    const double d = g.degree(static_cast<VertexId>(v));
    if (d > 0.0) out[v] = 1.0 / std::sqrt(d);
  }
  return out;
}

// `diagonal(v, isolated)` gives the diagonal entry; zero entries are skipped.
template <typename Diagonal>
CsrMatrix Assemble(const Graph& g, Diagonal diagonal) {
  const std::size_t n = g.num_vertices();
  const auto inv = InverseSqrtDegrees(g);
  std::vector<std::size_t> row_ptr(n + 1, 0);
  std::vector<VertexId> cols;
  std::vector<double> vals;
  cols.reserve(2 * g.num_edges() + n);
  vals.reserve(2 * g.num_edges() + n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    const double diag = diagonal(g.degree(v) == 0.0);
    bool placed = diag == 0.0;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!placed && nb.vertex > v) {
        cols.push_back(v);
        vals.push_back(diag);
        placed = true;
      }
      cols.push_back(nb.vertex);
      vals.push_back(-nb.weight * inv[i] * inv[nb.vertex]);
    }
    if (!placed) {
      cols.push_back(v);
      vals.push_back(diag);
    }
    row_ptr[i + 1] = cols.size();
  }
  return CsrMatrix(n, std::move(row_ptr), std::move(cols), std::move(vals));
}

}  // namespace

CsrMatrix NormalizedLaplacian(const Graph& g) {
  return Assemble(g, [](bool isolated) { return isolated ? 0.0 : 1.0; });
}

DenseMatrix NormalizedLaplacianDense(const Graph& g) {
  return NormalizedLaplacian(g).ToDense();
}

CsrMatrix ShiftedLaplacian(const Graph& g) {
  return Assemble(g, [](bool isolated) { return isolated ? -1.0 : 0.0; });
}

}  // namespace graphfb
