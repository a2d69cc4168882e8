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

#include "graphfb/eigensolver.h"

#include <omp.h>

#include <cmath>

#include "eigen_internal.h"

namespace graphfb {
namespace {

// Row-oriented Householder reduction of the symmetric matrix held in `a`
// (full storage). On return d/e hold the tridiagonal (e[i] couples i-1 and i)
// and `q` the accumulated orthogonal factor with a = q T q^t.
void Tridiagonalize(DenseMatrix& a, std::vector<double>& d,
                    std::vector<double>& e, DenseMatrix& q) {
  const std::size_t n = a.rows();
  std::vector<double> reflector_norm(n, 0.0);
  std::vector<double> p(n), w(n);

  for (std::size_t i = n - 1; i >= 1; --i) {
    auto ri = a.row(i);
    if (i == 1) {
      e[1] = ri[0];
      break;
    }
    double scale = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(ri[k]);
    if (scale == 0.0) {
      e[i] = 0.0;
      continue;
    }
    double sigma = 0.0;
    for (std::size_t k = 0; k < i; ++k) {
      ri[k] /= scale;
      sigma += ri[k] * ri[k];
    }
    const double f = ri[i - 1];
    const double g = f > 0 ? -std::sqrt(sigma) : std::sqrt(sigma);
    e[i] = scale * g;
    const double h = sigma - f * g;
    ri[i - 1] = f - g;
    reflector_norm[i] = h;
    const double* u = ri.data();

    const auto rows = static_cast<std::ptrdiff_t>(i);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < rows; ++j) {
      const double* rj = a.row(static_cast<std::size_t>(j)).data();
      double acc = 0.0;
      for (std::size_t k = 0; k < i; ++k) acc += rj[k] * u[k];
      p[static_cast<std::size_t>(j)] = acc / h;
    }
    double up = 0.0;
    for (std::size_t k = 0; k < i; ++k) up += u[k] * p[k];
    const double half = up / (2.0 * h);
    for (std::size_t k = 0; k < i; ++k) p[k] -= half * u[k];

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < rows; ++j) {
      double* rj = a.row(static_cast<std::size_t>(j)).data();
      const double uj = u[j];
      const double pj = p[static_cast<std::size_t>(j)];
      for (std::size_t k = 0; k < i; ++k) rj[k] -= uj * p[k] + pj * u[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  e[0] = 0.0;

  q = DenseMatrix::Identity(n);
  for (std::size_t i = 2; i < n; ++i) {
    const double h = reflector_norm[i];
    if (h == 0.0) continue;
    const double* u = a.row(i).data();
    std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i), 0.0);
    const auto rows = static_cast<std::ptrdiff_t>(i);
#pragma omp parallel
    {
      std::vector<double> local(i, 0.0);
#pragma omp for schedule(static) nowait
      for (std::ptrdiff_t k = 0; k < rows; ++k) {
        const double uk = u[k];
        if (uk == 0.0) continue;
        const double* qk = q.row(static_cast<std::size_t>(k)).data();
        for (std::size_t j = 0; j < i; ++j) local[j] += uk * qk[j];
      }
#pragma omp critical
      for (std::size_t j = 0; j < i; ++j) w[j] += local[j];
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < rows; ++k) {
      double* qk = q.row(static_cast<std::size_t>(k)).data();
      const double scale = u[k] / h;
      for (std::size_t j = 0; j < i; ++j) qk[j] -= scale * w[j];
    }
  }
}

// Implicit-shift QL on the tridiagonal (d, e). `vt` holds the eigenvector
// basis transposed (row i is the i-th basis vector). The rotations of one
// sweep are recorded first and then applied to column blocks of vt
// independently; within a block every rotation is a contiguous row update.
void QlIterate(DenseMatrix& vt, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  constexpr int kBlock = 64;
  const int num_blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> cs(n), ss(n);
  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m == l) {
      d[l] += f;
      e[l] = 0.0;
      continue;
    }
    int iter = 0;
    do {
      if (++iter > internal::kMaxQlIterations) {
        throw Error("QL iteration did not converge");
      }
      double g = d[l];
      double p = (d[l + 1] - g) / (2.0 * e[l]);
      double r = std::hypot(p, 1.0);
      if (p < 0) r = -r;
      d[l] = e[l] / (p + r);
      d[l + 1] = e[l] * (p + r);
      const double dl1 = d[l + 1];
      double h = g - d[l];
      for (int i = l + 2; i < n; ++i) d[i] -= h;
      f += h;

      p = d[m];
      double c = 1.0;
      double c2 = c;
      double c3 = c;
      const double el1 = e[l + 1];
      double s = 0.0;
      double s2 = 0.0;
      for (int i = m - 1; i >= l; --i) {
        c3 = c2;
        c2 = c;
        s2 = s;
        g = c * e[i];
        h = c * p;
        r = std::hypot(p, e[i]);
        e[i + 1] = s * r;
        s = e[i] / r;
        c = p / r;
        p = c * d[i] - s * g;
        d[i + 1] = h + s * (c * g + s * d[i]);
        cs[i] = c;
        ss[i] = s;
      }
      p = -s * s2 * c3 * el1 * e[l] / dl1;
      e[l] = s * p;
      d[l] = c * p;

#pragma omp parallel for schedule(static)
      for (int b = 0; b < num_blocks; ++b) {
        const int k0 = b * kBlock;
        const int k1 = std::min(n, k0 + kBlock);
        for (int i = m - 1; i >= l; --i) {
          double* lo = vt.row(static_cast<std::size_t>(i)).data();
          double* hi = vt.row(static_cast<std::size_t>(i + 1)).data();
          const double ci = cs[i];
          const double si = ss[i];
          for (int k = k0; k < k1; ++k) {
            const double hk = hi[k];
            hi[k] = si * lo[k] + ci * hk;
            lo[k] = ci * lo[k] - si * hk;
          }
        }
      }
    } while (std::abs(e[l]) > eps * tst1);
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

SymmetricEigenResult SymmetricEigen(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  if (n == 1) {
    SymmetricEigenResult out;
    out.values = {a(0, 0)};
    out.vectors = DenseMatrix::Identity(1);
    return out;
  }
  DenseMatrix work(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) work(i, j) = work(j, i) = a(i, j);
  }
  std::vector<double> d(n), e(n, 0.0);
  DenseMatrix q;
  Tridiagonalize(work, d, e, q);
  DenseMatrix vt = q.Transposed();
  QlIterate(vt, d, e);
  return internal::SortEigenpairs(std::move(d), vt.Transposed());
}

}  // namespace graphfb
