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

#ifndef GRAPHFB_SRC_PARALLEL_EIGEN_INTERNAL_H_
#define GRAPHFB_SRC_PARALLEL_EIGEN_INTERNAL_H_

#include <algorithm>
#include <numeric>
#include <vector>

#include "graphfb/eigensolver.h"

namespace graphfb::internal {

inline constexpr int kMaxQlIterations = 60;

// Reorders eigenpairs by ascending eigenvalue (stable for ties).
inline SymmetricEigenResult SortEigenpairs(std::vector<double> d,
                                           const DenseMatrix& v) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  SymmetricEigenResult out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) out.values[j] = d[order[j]];
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = v.row(i);
    auto dst = out.vectors.row(i);
    for (std::size_t j = 0; j < n; ++j) dst[j] = src[order[j]];
  }
  return out;
}

}  // namespace graphfb::internal

#endif  // GRAPHFB_SRC_PARALLEL_EIGEN_INTERNAL_H_
