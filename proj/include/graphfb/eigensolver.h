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

#ifndef GRAPHFB_EIGENSOLVER_H_
#define GRAPHFB_EIGENSOLVER_H_

#include <vector>

#include "graphfb/dense_matrix.h"

namespace graphfb {

// Eigenpairs of a real symmetric matrix. values are ascending and column j of
// vectors is the unit eigenvector for values[j].
struct SymmetricEigenResult {
  std::vector<double> values;
  DenseMatrix vectors;
};

// Householder tridiagonalization followed by the implicit-shift QL iteration.
// The reflector updates and each QL sweep's rotations are applied row-wise in
// parallel. Only the lower triangle of `a` is read.
SymmetricEigenResult SymmetricEigen(const DenseMatrix& a);

// Serial EISPACK tred2/tql2 path, kept as the reference for SymmetricEigen.
SymmetricEigenResult SymmetricEigenReference(const DenseMatrix& a);

}  // namespace graphfb

#endif  // GRAPHFB_EIGENSOLVER_H_
