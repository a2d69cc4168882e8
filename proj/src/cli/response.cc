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

#include "graphfb/response.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "graphfb/chebyshev.h"
#include "graphfb/coloring.h"
#include "graphfb/graph_io.h"
#include "graphfb/spectrum.h"

namespace graphfb {
namespace {

std::vector<double> FrequencyGrid(std::size_t size) {
  std::vector<double> w(size);
  for (std::size_t k = 0; k < size; ++k) {
    w[k] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(size);
  }
  return w;
}

}  // namespace

DftResponse LatticeDft(std::span<const double> image, std::size_t width, std::size_t height,
                       std::size_t center_col, std::size_t center_row) {
  if (image.size() != width * height) {
    throw PreconditionError("image size does not match the lattice");
  }
  DftResponse out;
  out.width = width;
  out.height = height;
  out.omega1 = FrequencyGrid(width);
  out.omega2 = FrequencyGrid(height);
  // Transform along columns (omega1) for every row, then along rows.
  std::vector<std::complex<double>> partial(height * width);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t k1 = 0; k1 < width; ++k1) {
      std::complex<double> acc = 0.0;
      for (std::size_t c = 0; c < width; ++c) {
        const double x = image[r * width + c];
        if (x == 0.0) continue;
        const double phase = -out.omega1[k1] * (static_cast<double>(c) -
                                                static_cast<double>(center_col));
        acc += x * std::polar(1.0, phase);
      }
      partial[r * width + k1] = acc;
    }
  }
  out.magnitude.assign(width * height, 0.0);
  for (std::size_t k2 = 0; k2 < height; ++k2) {
    for (std::size_t k1 = 0; k1 < width; ++k1) {
      std::complex<double> acc = 0.0;
      for (std::size_t r = 0; r < height; ++r) {
        const double phase = -out.omega2[k2] * (static_cast<double>(r) -
                                                static_cast<double>(center_row));
        acc += partial[r * width + k1] * std::polar(1.0, phase);
      }
      out.magnitude[k2 * width + k1] = std::abs(acc);
    }
  }
  return out;
}

ImageResponse ComputeImageResponse(const ImageResponseRequest& req) {
  const Graph g = ImageGraph(req.width, req.height, req.connectivity);
  if (!IsBipartite(g).has_value()) {
    throw PreconditionError("image-dft needs a bipartite image graph, '" +
                            std::string(ConnectivityName(req.connectivity)) + "' is not");
  }
  if (req.mode == FilterMode::kPolynomial) {
    const std::size_t need = 2 * req.degree + 3;
    if (req.width < need || req.height < need) {
      throw PreconditionError("lattice must be at least " + std::to_string(need) +
                              " per side for an order-" + std::to_string(req.degree) +
                              " filter");
    }
  }
  ImageResponse out;
  out.center_col = req.width / 2;
  out.center_row = req.height / 2;
  Signal impulse(g.num_vertices(), 0.0);
  impulse[out.center_row * req.width + out.center_col] = 1.0;
  if (req.mode == FilterMode::kExact) {
    const Spectrum spectrum =
        Eigendecompose(g, SpectrumOptions{.dense_limit = req.dense_limit});
    out.impulse_response = ApplyExactFilter(spectrum, req.kernel, impulse);
  } else {
    const PolynomialKernel p = req.kernel.polynomial() != nullptr
                                   ? *req.kernel.polynomial()
                                   : ChebyshevFit(req.kernel, req.degree);
    out.impulse_response = ApplyPolynomialFilter(g, p, impulse);
  }
  out.dft = LatticeDft(out.impulse_response, req.width, req.height, out.center_col,
                       out.center_row);
  return out;
}

void WriteDftTable(std::ostream& out, const DftResponse& dft) {
  UseRoundTripPrecision(out);
  out << "# omega1 omega2 magnitude\n";
  for (std::size_t k2 = 0; k2 < dft.height; ++k2) {
    for (std::size_t k1 = 0; k1 < dft.width; ++k1) {
      out << dft.omega1[k1] << ' ' << dft.omega2[k2] << ' ' << dft.at(k1, k2) << '\n';
    }
  }
}

namespace {

template <typename Measure>
BandStats Stats(const DftResponse& dft, double pass, double stop, Measure measure) {
  BandStats s;
  s.passband_min = std::numeric_limits<double>::infinity();
  for (std::size_t k2 = 0; k2 < dft.height; ++k2) {
    for (std::size_t k1 = 0; k1 < dft.width; ++k1) {
      const double m = measure(dft.omega1[k1], dft.omega2[k2]);
      const double v = dft.at(k1, k2);
      if (m <= pass) {
        s.passband_min = std::min(s.passband_min, v);
        ++s.passband_samples;
      }
      if (m >= stop) {
        s.stopband_max = std::max(s.stopband_max, v);
        ++s.stopband_samples;
      }
    }
  }
  return s;
}

}  // namespace

BandStats DiamondBandStats(const DftResponse& dft, double pass, double stop) {
  return Stats(dft, pass, stop,
               [](double w1, double w2) { return std::abs(w1) + std::abs(w2); });
}

BandStats AxisBandStats(const DftResponse& dft, int axis, double pass, double stop) {
  return Stats(dft, pass, stop, [axis](double w1, double w2) {
    return std::abs(axis == 1 ? w1 : w2);
  });
}

double VariationAlongAxis(const DftResponse& dft, int axis) {
  double worst = 0.0;
  const std::size_t outer = axis == 1 ? dft.height : dft.width;
  const std::size_t inner = axis == 1 ? dft.width : dft.height;
  for (std::size_t o = 0; o < outer; ++o) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < inner; ++i) {
      const double v = axis == 1 ? dft.at(i, o) : dft.at(o, i);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

}  // namespace graphfb
