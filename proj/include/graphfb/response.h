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

#ifndef GRAPHFB_RESPONSE_H_
#define GRAPHFB_RESPONSE_H_

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "graphfb/common.h"
#include "graphfb/kernel.h"
#include "graphfb/lattice.h"
#include "graphfb/two_channel.h"

namespace graphfb {

// Magnitude of the 2D DFT of a lattice impulse response, sampled at
// omega = -pi + 2 pi k / size along each axis. omega1 runs along columns
// (horizontal frequency), omega2 along rows.
struct DftResponse {
  std::size_t width = 0;   // samples of omega1
  std::size_t height = 0;  // samples of omega2
  std::vector<double> omega1;
  std::vector<double> omega2;
  std::vector<double> magnitude;  // row-major: magnitude[k2 * width + k1]
  double at(std::size_t k1, std::size_t k2) const { return magnitude[k2 * width + k1]; }
};

// Direct separable 2D DFT of a width x height lattice signal (row-major),
// centered on (center_col, center_row).
DftResponse LatticeDft(std::span<const double> image, std::size_t width, std::size_t height,
                       std::size_t center_col, std::size_t center_row);

struct ImageResponseRequest {
  std::size_t width = 64;
  std::size_t height = 64;
  Connectivity connectivity = Connectivity::kRect;
  SpectralKernel kernel = SpectralKernel::Ideal();
  FilterMode mode = FilterMode::kExact;
  std::size_t degree = 6;  // polynomial mode only
  std::size_t dense_limit = kDefaultDenseLimit;
};

struct ImageResponse {
  std::size_t center_col = 0;
  std::size_t center_row = 0;
  Signal impulse_response;  // kernel applied to the center impulse
  DftResponse dft;
};

// Filters an impulse at the lattice center (row height/2, column width/2)
// on a bipartite image graph and transforms the result. Throws
// PreconditionError for the non-bipartite 8-connected stencil and, in
// polynomial mode, for lattices smaller than 2 m + 3 per side.
ImageResponse ComputeImageResponse(const ImageResponseRequest& request);

// "# omega1 omega2 magnitude" then one row per frequency sample.
void WriteDftTable(std::ostream& out, const DftResponse& dft);

// min over the passband and max over the stopband of a DFT magnitude.
struct BandStats {
  double passband_min = 0.0;
  double stopband_max = 0.0;
  std::size_t passband_samples = 0;
  std::size_t stopband_samples = 0;
};
// Quincunx diamond: passband |w1| + |w2| <= pass, stopband >= stop.
BandStats DiamondBandStats(const DftResponse& dft, double pass, double stop);
// Half-band along one axis (axis 1 = omega1, axis 2 = omega2): passband
// |w| <= pass, stopband |w| >= stop.
BandStats AxisBandStats(const DftResponse& dft, int axis, double pass, double stop);
// Largest spread of the magnitude along the given axis with the other
// frequency fixed; zero when the response depends only on the other axis.
double VariationAlongAxis(const DftResponse& dft, int axis);

}  // namespace graphfb

#endif  // GRAPHFB_RESPONSE_H_
