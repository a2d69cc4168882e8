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

#ifndef GRAPHFB_LAPLACIAN_H_
#define GRAPHFB_LAPLACIAN_H_

#include "graphfb/dense_matrix.h"
#include "graphfb/graph.h"
#include "graphfb/sparse_matrix.h"

namespace graphfb {

// Normalized Laplacian I - D^{-1/2} A D^{-1/2}. A zero-degree vertex gets a
// zero D^{-1/2} entry, so its row and column of the result are zero.
CsrMatrix NormalizedLaplacian(const Graph& g);
DenseMatrix NormalizedLaplacianDense(const Graph& g);

// The Laplacian shifted onto [-1, 1]: L - I, i.e. -D^{-1/2} A D^{-1/2} with
// -1 on the diagonal of zero-degree vertices. Same sparsity as A (plus those
// diagonal entries); used by the Chebyshev recurrence.
CsrMatrix ShiftedLaplacian(const Graph& g);

}  // namespace graphfb

#endif  // GRAPHFB_LAPLACIAN_H_
