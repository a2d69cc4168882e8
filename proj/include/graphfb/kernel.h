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

#ifndef GRAPHFB_KERNEL_H_
#define GRAPHFB_KERNEL_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace graphfb {

// Truncated Chebyshev series on [0, 2]:
//   k(lambda) = c_0 / 2 + sum_{j >= 1} c_j T_j(lambda - 1).
class PolynomialKernel {
 public:
  explicit PolynomialKernel(std::vector<double> coefficients);

  std::size_t degree() const { return coefficients_.size() - 1; }
  std::span<const double> coefficients() const { return coefficients_; }

  // Clenshaw evaluation.
  double Evaluate(double lambda) const;
  // Coefficients scaled by (-1)^j, i.e. lambda -> 2 - lambda. Evaluation of
  // the mirror at lambda is bit-identical to this kernel at 2 - lambda.
  PolynomialKernel Mirrored() const;

 private:
  std::vector<double> coefficients_;
};

enum class KernelKind { kIdeal, kMeyer, kMirrored, kPolynomial, kCustom };

// A real function on the spectral interval [0, 2]. Value type; copies share
// the immutable implementation.
class SpectralKernel {
 public:
  // Default tolerance of the ideal kernel's transition point: eigenvalues
  // within this distance of 1 are treated as 1.
  static constexpr double kFoldTolerance = 1e-8;

  // c for lambda < 1, c / sqrt(2) at lambda = 1, 0 above.
  static SpectralKernel Ideal(double gain = 1.0, double fold_tolerance = kFoldTolerance);
  // c * sqrt(nu(2 - 1.5 lambda)).
  static SpectralKernel Meyer(double gain = 1.0);
  static SpectralKernel Polynomial(PolynomialKernel polynomial, double gain = 1.0);
  static SpectralKernel Custom(std::function<double(double)> fn, std::string name,
                               double gain = 1.0);
  static SpectralKernel Constant(double value);

  double operator()(double lambda) const { return Evaluate(lambda); }
  double Evaluate(double lambda) const;

  // lambda -> 2 - lambda. Polynomial kernels stay polynomial (coefficient
  // sign flip); mirroring twice returns the base kernel.
  SpectralKernel Mirrored() const;

  KernelKind kind() const;
  double gain() const;
  const std::string& name() const;
  // Non-null only for KernelKind::kPolynomial.
  const PolynomialKernel* polynomial() const;

 private:
  struct Impl;
  explicit SpectralKernel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Rising cubic: 0 for x <= 0, 3x^2 - 2x^3 on (0, 1), 1 for x >= 1.
double MeyerNu(double x);

// Analysis kernels (h0, h1), synthesis kernels (g0, g1) and the gain c of
// the power-complementarity target h0^2 + h1^2 = c^2.
struct KernelSet {
  SpectralKernel h0;
  SpectralKernel h1;
  SpectralKernel g0;
  SpectralKernel g1;
  double gain = 1.0;
};

// h1 = mirror(h0), g0 = h0, g1 = h1.
KernelSet QmfCompanions(const SpectralKernel& h0);

}  // namespace graphfb

#endif  // GRAPHFB_KERNEL_H_
