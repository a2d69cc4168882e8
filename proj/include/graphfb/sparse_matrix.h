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

#ifndef GRAPHFB_SPARSE_MATRIX_H_
#define GRAPHFB_SPARSE_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

#include "graphfb/common.h"
#include "graphfb/dense_matrix.h"

namespace graphfb {

// Square compressed-sparse-row matrix. Only stored entries are ever touched
// by the products, so structural zeros stay exactly zero.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  CsrMatrix(std::size_t n, std::vector<std::size_t> row_ptr,
            std::vector<VertexId> cols, std::vector<double> values);

  std::size_t size() const { return n_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const std::size_t> row_ptr() const { return row_ptr_; }
  std::span<const VertexId> cols() const { return cols_; }
  std::span<const double> values() const { return values_; }

  // y = M x, rows distributed across OpenMP threads.
  void Multiply(std::span<const double> x, std::span<double> y) const;
  // Single-threaded reference for Multiply.
  void MultiplySerial(std::span<const double> x, std::span<double> y) const;

  DenseMatrix ToDense() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<VertexId> cols_;
  std::vector<double> values_;
};

}  // namespace graphfb

#endif  // GRAPHFB_SPARSE_MATRIX_H_
