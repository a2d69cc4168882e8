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

#ifndef GRAPHFB_SPECTRUM_H_
#define GRAPHFB_SPECTRUM_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphfb/common.h"
#include "graphfb/dense_matrix.h"
#include "graphfb/graph.h"

namespace graphfb {

// Consecutive eigenvalues [first, first + count) treated as one eigenspace.
struct EigenspaceGroup {
  double value;  // mean of the member eigenvalues
  std::size_t first;
  std::size_t count;
};

struct SpectrumOptions {
  std::size_t dense_limit = kDefaultDenseLimit;
  // Neighbors closer than tol * max(1, |lambda|) share an eigenspace.
  double group_tolerance = 1e-8;
};

// Eigendecomposition of a normalized Laplacian: ascending eigenvalues, an
// orthonormal eigenvector basis (column i of eigenvectors() is u_i) and the
// multiplicity grouping used to form eigenspace projectors.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<double> eigenvalues, DenseMatrix eigenvectors,
           double group_tolerance = 1e-8);

  std::size_t size() const { return values_.size(); }
  std::span<const double> eigenvalues() const { return values_; }
  const DenseMatrix& eigenvectors() const { return vectors_; }
  std::vector<double> eigenvector(std::size_t i) const { return vectors_.column(i); }

  std::span<const EigenspaceGroup> groups() const { return groups_; }
  std::size_t group_of(std::size_t i) const { return group_index_[i]; }
  // Eigenvalue of u_i snapped to its group's representative.
  double grouped_value(std::size_t i) const { return groups_[group_index_[i]].value; }

  // P = sum of u_i u_i^t over the group's members.
  DenseMatrix Projector(std::size_t group) const;

 private:
  std::vector<double> values_;
  DenseMatrix vectors_;
  std::vector<EigenspaceGroup> groups_;
  std::vector<std::size_t> group_index_;
};

// Spectrum of the normalized Laplacian of g. Each connected component is
// solved separately; eigenvectors are sign-normalized so their first entry
// above 1e-10 in magnitude is positive. Throws PreconditionError when
// N > options.dense_limit.
Spectrum Eigendecompose(const Graph& g, const SpectrumOptions& options = {});

// Spectrum of an arbitrary symmetric matrix (same conventions).
Spectrum EigendecomposeMatrix(const DenseMatrix& symmetric,
                              const SpectrumOptions& options = {});

// "index eigenvalue" table, one line per eigenvalue.
void WriteSpectrum(std::ostream& out, const Spectrum& spectrum);

}  // namespace graphfb

#endif  // GRAPHFB_SPECTRUM_H_
