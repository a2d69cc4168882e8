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

#include "graphfb/kernel.h"

#include <cmath>

#include "graphfb/common.h"

namespace graphfb {

PolynomialKernel::PolynomialKernel(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw PreconditionError("a polynomial kernel needs at least one coefficient");
  }
}

double PolynomialKernel::Evaluate(double lambda) const {
  const double x = lambda - 1.0;
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = coefficients_.size() - 1; k >= 1; --k) {
    const double b0 = coefficients_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return 0.5 * coefficients_[0] + x * b1 - b2;
}

PolynomialKernel PolynomialKernel::Mirrored() const {
  std::vector<double> c(coefficients_);
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return PolynomialKernel(std::move(c));
}

double MeyerNu(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * (3.0 - 2.0 * x);
}

struct SpectralKernel::Impl {
  KernelKind kind;
  double gain;
  std::string name;
  double fold_tolerance = 0.0;
  std::shared_ptr<const Impl> base;                 // kMirrored
  std::shared_ptr<const PolynomialKernel> poly;     // kPolynomial
  std::function<double(double)> fn;                 // kCustom
};

SpectralKernel SpectralKernel::Ideal(double gain, double fold_tolerance) {
  if (gain == 0.0) throw PreconditionError("kernel gain must be nonzero");
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::kIdeal;
  impl->gain = gain;
  impl->name = "ideal";
  impl->fold_tolerance = fold_tolerance;
  return SpectralKernel(std::move(impl));
}

SpectralKernel SpectralKernel::Meyer(double gain) {
  if (gain == 0.0) throw PreconditionError("kernel gain must be nonzero");
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::kMeyer;
  impl->gain = gain;
  impl->name = "meyer";
  return SpectralKernel(std::move(impl));
}

SpectralKernel SpectralKernel::Polynomial(PolynomialKernel polynomial, double gain) {
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::kPolynomial;
  impl->gain = gain;
  impl->name = "polynomial";
  impl->poly = std::make_shared<const PolynomialKernel>(std::move(polynomial));
  return SpectralKernel(std::move(impl));
}

SpectralKernel SpectralKernel::Custom(std::function<double(double)> fn, std::string name,
                                      double gain) {
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::kCustom;
  impl->gain = gain;
  impl->name = std::move(name);
  impl->fn = std::move(fn);
  return SpectralKernel(std::move(impl));
}

SpectralKernel SpectralKernel::Constant(double value) {
  return Custom([value](double) { return value; }, "constant", value);
}

double SpectralKernel::Evaluate(double lambda) const {
  const Impl& k = *impl_;
  switch (k.kind) {
    case KernelKind::kIdeal:
      if (std::abs(lambda - 1.0) <= k.fold_tolerance) return k.gain / std::sqrt(2.0);
      return lambda < 1.0 ? k.gain : 0.0;
    case KernelKind::kMeyer:
      return k.gain * std::sqrt(MeyerNu(2.0 - 1.5 * lambda));
    case KernelKind::kMirrored:
      return SpectralKernel(k.base).Evaluate(2.0 - lambda);
    case KernelKind::kPolynomial:
      return k.poly->Evaluate(lambda);
    case KernelKind::kCustom:
      return k.fn(lambda);
  }
  return 0.0;
}

SpectralKernel SpectralKernel::Mirrored() const {
  if (impl_->kind == KernelKind::kMirrored) return SpectralKernel(impl_->base);
  if (impl_->kind == KernelKind::kPolynomial) {
    SpectralKernel out = Polynomial(impl_->poly->Mirrored(), impl_->gain);
    auto impl = std::make_shared<Impl>(*out.impl_);
    const std::string suffix = "-mirrored";
    impl->name = impl_->name.ends_with(suffix)
                     ? impl_->name.substr(0, impl_->name.size() - suffix.size())
                     : impl_->name + suffix;
    return SpectralKernel(std::move(impl));
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::kMirrored;
  impl->gain = impl_->gain;
  impl->name = impl_->name + "-mirrored";
  impl->base = impl_;
  return SpectralKernel(std::move(impl));
}

KernelKind SpectralKernel::kind() const { return impl_->kind; }
double SpectralKernel::gain() const { return impl_->gain; }
const std::string& SpectralKernel::name() const { return impl_->name; }
const PolynomialKernel* SpectralKernel::polynomial() const { return impl_->poly.get(); }

KernelSet QmfCompanions(const SpectralKernel& h0) {
  const SpectralKernel h1 = h0.Mirrored();
  return KernelSet{h0, h1, h0, h1, h0.gain()};
}

}  // namespace graphfb
