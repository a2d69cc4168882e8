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

#ifndef GRAPHFB_DENSE_MATRIX_H_
#define GRAPHFB_DENSE_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

#include "graphfb/common.h"

namespace graphfb {

// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix Identity(std::size_t n);
  // Diagonal matrix with the given entries.
  static DenseMatrix Diagonal(std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<double> column(std::size_t j) const;

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  DenseMatrix Transposed() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(double s, DenseMatrix a);

// C = A * B. Rows of C are computed in parallel.
DenseMatrix Multiply(const DenseMatrix& a, const DenseMatrix& b);
// Single-threaded i-k-j reference for Multiply.
DenseMatrix MultiplySerial(const DenseMatrix& a, const DenseMatrix& b);

// y = A x and y = A^t x.
Signal MatVec(const DenseMatrix& a, std::span<const double> x);
Signal TransposeMatVec(const DenseMatrix& a, std::span<const double> x);

double FrobeniusNorm(const DenseMatrix& a);
double MaxAbsDifference(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace graphfb

#endif  // GRAPHFB_DENSE_MATRIX_H_
