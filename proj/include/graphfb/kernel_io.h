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

#ifndef GRAPHFB_KERNEL_IO_H_
#define GRAPHFB_KERNEL_IO_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "graphfb/kernel.h"

namespace graphfb {

// Polynomial kernel file:
//   degree m
//   c_0
//   ...
//   c_m        (17 significant digits)
PolynomialKernel ReadPolynomialKernel(std::istream& in);
PolynomialKernel LoadPolynomialKernel(const std::filesystem::path& path);
void WritePolynomialKernel(std::ostream& out, const PolynomialKernel& p);
void SavePolynomialKernel(const std::filesystem::path& path, const PolynomialKernel& p);

struct ResponseColumn {
  std::string name;
  SpectralKernel kernel;
};

// "# lambda <name>..." header, then one "lambda value..." row per grid point.
void WriteResponseTable(std::ostream& out, std::span<const double> grid,
                        std::span<const ResponseColumn> columns);

}  // namespace graphfb

#endif  // GRAPHFB_KERNEL_IO_H_
