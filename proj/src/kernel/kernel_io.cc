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

#include "graphfb/kernel_io.h"

#include <ostream>

#include "graphfb/graph_io.h"
#include "io/text_io.h"

namespace graphfb {

PolynomialKernel ReadPolynomialKernel(std::istream& in) {
  internal::LineReader reader(in);
  std::istringstream fields;
  if (!reader.Next(fields)) throw ParseError("empty kernel file");
  std::string keyword;
  long long degree = -1;
  if (!(fields >> keyword) || keyword != "degree" || !(fields >> degree) || degree < 0) {
    reader.Fail("expected 'degree m'");
  }
  internal::ExpectEnd(fields, reader);
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  while (reader.Next(fields)) {
    double x = 0.0;
    if (!(fields >> x)) reader.Fail("expected a coefficient");
    internal::ExpectEnd(fields, reader);
    c.push_back(x);
  }
  if (c.size() != static_cast<std::size_t>(degree) + 1) {
    throw ParseError("degree " + std::to_string(degree) + " needs " +
                     std::to_string(degree + 1) + " coefficients, found " +
                     std::to_string(c.size()));
  }
  return PolynomialKernel(std::move(c));
}

PolynomialKernel LoadPolynomialKernel(const std::filesystem::path& path) {
  std::ifstream in = internal::OpenForRead(path);
  return ReadPolynomialKernel(in);
}

void WritePolynomialKernel(std::ostream& out, const PolynomialKernel& p) {
  UseRoundTripPrecision(out);
  out << "degree " << p.degree() << '\n';
  for (double c : p.coefficients()) out << c << '\n';
}

void SavePolynomialKernel(const std::filesystem::path& path, const PolynomialKernel& p) {
  std::ofstream out = internal::OpenForWrite(path);
  WritePolynomialKernel(out, p);
}

void WriteResponseTable(std::ostream& out, std::span<const double> grid,
                        std::span<const ResponseColumn> columns) {
  UseRoundTripPrecision(out);
  out << "# lambda";
  for (const ResponseColumn& c : columns) out << ' ' << c.name;
  out << '\n';
  for (double x : grid) {
    out << x;
    for (const ResponseColumn& c : columns) out << ' ' << c.kernel(x);
    out << '\n';
  }
}

}  // namespace graphfb
