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

#include "graphfb/sparse_matrix.h"

#include <utility>

namespace graphfb {

CsrMatrix::CsrMatrix(std::size_t n, std::vector<std::size_t> row_ptr,
                     std::vector<VertexId> cols, std::vector<double> values)
    : n_(n),
      row_ptr_(std::move(row_ptr)),
      cols_(std::move(cols)),
      values_(std::move(values)) {
  if (row_ptr_.size() != n_ + 1 || cols_.size() != values_.size() ||
      row_ptr_.back() != values_.size()) {
    throw PreconditionError("inconsistent CSR arrays");
  }
}

void CsrMatrix::Multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != n_ || y.size() != n_) {
    throw PreconditionError("CSR product size mismatch");
  }
  const auto n = static_cast<std::ptrdiff_t>(n_);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      acc += values_[p] * x[static_cast<std::size_t>(cols_[p])];
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
}

void CsrMatrix::MultiplySerial(std::span<const double> x,
                               std::span<double> y) const {
  if (x.size() != n_ || y.size() != n_) {
    throw PreconditionError("CSR product size mismatch");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      acc += values_[p] * x[static_cast<std::size_t>(cols_[p])];
    }
    y[i] = acc;
  }
}

DenseMatrix CsrMatrix::ToDense() const {
  DenseMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      m(i, static_cast<std::size_t>(cols_[p])) += values_[p];
    }
  }
  return m;
}

}  // namespace graphfb
