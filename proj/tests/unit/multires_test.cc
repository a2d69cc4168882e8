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

#include <gtest/gtest.h>

#include <cmath>

#include "graphfb/chebyshev.h"
#include "graphfb/fixtures.h"
#include "graphfb/kernel.h"
#include "graphfb/lattice.h"
#include "graphfb/multires.h"
#include "oracle.h"

namespace graphfb {
namespace {

double MaxAbsError(std::span<const double> a, std::span<const double> b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

bool HasEdge(const Graph& g, VertexId a, VertexId b) {
  for (const Edge& e : g.edges()) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
  }
  return false;
}

TEST(DownsampledGraphTest, PathReconnection) {
  const Graph g = PathGraph(5);
  const std::vector<VertexId> keep = {4, 0, 2};
  const MultiresLevel two = DownsampledGraph(g, keep);
  EXPECT_EQ(two.original_ids, (std::vector<VertexId>{0, 2, 4}));
  EXPECT_EQ(two.graph.num_vertices(), 3u);
  EXPECT_EQ(two.graph.num_edges(), 2u);
  EXPECT_TRUE(HasEdge(two.graph, 0, 1));
  EXPECT_TRUE(HasEdge(two.graph, 1, 2));
  for (const Edge& e : two.graph.edges()) EXPECT_EQ(e.weight, 1.0);
  EXPECT_EQ(DownsampledGraph(g, keep, 3).graph.num_edges(), 2u);
  EXPECT_EQ(DownsampledGraph(g, keep, 4).graph.num_edges(), 3u);
}

TEST(DownsampledGraphTest, MatchesHopOracle) {
  const Graph g = RandomConnectedGraph(40, 0.08, 2);
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < 40; v += 3) keep.push_back(v);
  const auto hops = oracle::HopDistanceTable(g);
  for (int hop : {2, 3}) {
    const MultiresLevel lvl = DownsampledGraph(g, keep, hop);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        const int d = hops[keep[i]][keep[j]];
        EXPECT_EQ(HasEdge(lvl.graph, i, j), d >= 1 && d <= hop) << i << "," << j;
      }
    }
  }
}

TEST(DownsampledGraphTest, RejectsBadArguments) {
  const Graph g = PathGraph(4);
  EXPECT_THROW(DownsampledGraph(g, std::vector<VertexId>{}), PreconditionError);
  EXPECT_THROW(DownsampledGraph(g, std::vector<VertexId>{0, 2}, 1), PreconditionError);
  EXPECT_THROW(DownsampledGraph(g, std::vector<VertexId>{0, 9}), PreconditionError);
}

TEST(PyramidTest, ExactRoundTrip) {
  const PlanarFixture fx = Planar3Colorable(150, 11);
  const Signal f = PiecewiseConstantSignal(fx.coordinates);
  const KernelSet k = QmfCompanions(SpectralKernel::Meyer());
  const PyramidOptions opts{.levels = 3};
  const Pyramid p = AnalyzePyramid(fx.graph, f, k, opts);
  ASSERT_GE(p.levels.size(), 2u);
  EXPECT_EQ(p.levels[0].level.graph.num_vertices(), 150u);
  for (std::size_t l = 0; l + 1 < p.levels.size(); ++l) {
    const std::string lows(p.levels[l].decomposition.dimension(), 'L');
    EXPECT_EQ(p.levels[l].tree.Find(lows)->vertices.size(),
              p.levels[l + 1].level.graph.num_vertices());
    EXPECT_EQ(p.levels[l + 1].level.original_ids, p.levels[l].tree.Find(lows)->vertices);
  }
  EXPECT_LT(MaxAbsError(SynthesizePyramid(p, k, opts), f), 1e-9);
}

TEST(PyramidTest, PolynomialRoundTripIsApproximate) {
  const Graph g = ImageGraph(8, 8, Connectivity::kRect);
  const Signal f = RandomSignal(64, 3);
  const KernelSet k = PolynomialQmf(SpectralKernel::Meyer(), 10);
  const PyramidOptions opts{.levels = 2, .mode = FilterMode::kPolynomial};
  const Pyramid p = AnalyzePyramid(g, f, k, opts);
  EXPECT_EQ(p.levels.size(), 2u);
  const Signal back = SynthesizePyramid(p, k, opts);
  double num = 0.0, den = 0.0;
  for (std::size_t v = 0; v < 64; ++v) {
    num += (back[v] - f[v]) * (back[v] - f[v]);
    den += f[v] * f[v];
  }
  EXPECT_LT(std::sqrt(num / den), 0.1);
}

TEST(PyramidTest, StopsOnEdgelessLevel) {
  const Graph g = PathGraph(2);
  const KernelSet k = QmfCompanions(SpectralKernel::Meyer());
  const PyramidOptions opts{.levels = 4};
  const Signal f = {3.0, -1.0};
  const Pyramid p = AnalyzePyramid(g, f, k, opts);
  EXPECT_EQ(p.levels.size(), 1u);
  EXPECT_LT(MaxAbsError(SynthesizePyramid(p, k, opts), f), 1e-12);
  EXPECT_THROW(AnalyzePyramid(g, Signal(3, 0.0), k, opts), PreconditionError);
}

}  // namespace
}  // namespace graphfb
