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
#include <numbers>
#include <sstream>

#include "graphfb/coloring.h"
#include "graphfb/fixtures.h"
#include "graphfb/gft.h"
#include "graphfb/laplacian.h"
#include "graphfb/lattice.h"
#include "graphfb/spectrum.h"
#include "oracle.h"

namespace graphfb {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

Eigen::MatrixXd ToEigen(const DenseMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::vector<Graph> BipartiteZoo() {
  return {PathGraph(2),
          PathGraph(7),
          CycleGraph(4),
          CycleGraph(10),
          ImageGraph(4, 3, Connectivity::kRect),
          RandomBipartiteGraph(6, 9, 0.1, 1),  // tree-like
          RandomBipartiteGraph(12, 10, 0.3, 2),
          RandomBipartiteGraph(20, 20, 0.15, 3),
          Graph(5, {{0, 1, 1.0}, {1, 2, 0.5}, {1, 3, 2.0}, {3, 4, 1.5}}),  // star-ish tree
          ImageGraph(5, 5, Connectivity::kDiagonal),
          ImageGraph(3, 6, Connectivity::kHorizontal)};
}

std::vector<Graph> NonBipartiteZoo() {
  return {CompleteGraph(3),
          CompleteGraph(5),
          CycleGraph(5),
          CycleGraph(9),
          ImageGraph(4, 4, Connectivity::kEight),
          RandomConnectedGraph(15, 0.3, 4),
          RandomConnectedGraph(30, 0.2, 5),
          Graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {2, 3, 1.0}}),
          Planar3Colorable(40, 6).graph,
          RandomConnectedGraph(50, 0.1, 7)};
}

TEST(LaplacianTest, TwoVertices) {
  const DenseMatrix l = NormalizedLaplacianDense(CompleteGraph(2));
  EXPECT_DOUBLE_EQ(l(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(l(0, 1), -1.0);
  EXPECT_DOUBLE_EQ(l(1, 0), -1.0);
  EXPECT_DOUBLE_EQ(l(1, 1), 1.0);
}

TEST(LaplacianTest, EdgelessGraphGivesZeroMatrix) {
  const DenseMatrix l = NormalizedLaplacianDense(Graph(3, {}));
  EXPECT_EQ(FrobeniusNorm(l), 0.0);
  EXPECT_EQ(NormalizedLaplacian(Graph(3, {})).nnz(), 0u);
}

TEST(LaplacianTest, MatchesOracleOnWeightedGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = RandomConnectedGraph(20, 0.2, seed);
    const Eigen::MatrixXd want = oracle::Laplacian(g);
    EXPECT_LT((ToEigen(NormalizedLaplacianDense(g)) - want).cwiseAbs().maxCoeff(), 1e-15);
    const Eigen::MatrixXd shifted = ToEigen(ShiftedLaplacian(g).ToDense());
    EXPECT_LT((shifted - (want - Eigen::MatrixXd::Identity(20, 20))).cwiseAbs().maxCoeff(),
              1e-15);
  }
}

TEST(SpectrumTest, CycleEigenvaluesAndGroups) {
  const Spectrum s = Eigendecompose(CycleGraph(4));
  const std::vector<double> want = {0.0, 1.0, 1.0, 2.0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s.eigenvalues()[i], want[i], 1e-12);
  ASSERT_EQ(s.groups().size(), 3u);
  EXPECT_EQ(s.groups()[0].count, 1u);
  EXPECT_EQ(s.groups()[1].count, 2u);
  EXPECT_EQ(s.groups()[2].count, 1u);
  EXPECT_NEAR(s.groups()[1].value, 1.0, 1e-12);
}

TEST(SpectrumTest, TwoVertexBasis) {
  const Spectrum s = Eigendecompose(CompleteGraph(2));
  EXPECT_NEAR(s.eigenvalues()[0], 0.0, 1e-15);
  EXPECT_NEAR(s.eigenvalues()[1], 2.0, 1e-15);
  EXPECT_NEAR(s.eigenvectors()(0, 0), 1.0 / kSqrt2, 1e-15);
  EXPECT_NEAR(s.eigenvectors()(1, 0), 1.0 / kSqrt2, 1e-15);
  EXPECT_NEAR(s.eigenvectors()(0, 1), 1.0 / kSqrt2, 1e-15);
  EXPECT_NEAR(s.eigenvectors()(1, 1), -1.0 / kSqrt2, 1e-15);
}

TEST(SpectrumTest, TriangleHasNoEigenvalueTwo) {
  const Spectrum s = Eigendecompose(CompleteGraph(3));
  EXPECT_NEAR(s.eigenvalues()[0], 0.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues()[1], 1.5, 1e-12);
  EXPECT_NEAR(s.eigenvalues()[2], 1.5, 1e-12);
  EXPECT_EQ(s.groups().size(), 2u);
}

TEST(SpectrumTest, InvariantsAgainstOracle) {
  std::vector<Graph> graphs = BipartiteZoo();
  for (Graph& g : NonBipartiteZoo()) graphs.push_back(std::move(g));
  graphs.push_back(Graph(4, {{0, 1, 1.0}}));  // isolated vertices
  for (const Graph& g : graphs) {
    const Spectrum s = Eigendecompose(g);
    const std::size_t n = g.num_vertices();
    const Eigen::MatrixXd u = ToEigen(s.eigenvectors());
    const Eigen::MatrixXd d = u.transpose() * oracle::Laplacian(g) * u;
    const Eigen::MatrixXd off = d - Eigen::MatrixXd(d.diagonal().asDiagonal());
    EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT((u.transpose() * u - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(),
              1e-10);
    const std::vector<double> want = oracle::Eigenvalues(g);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(s.eigenvalues()[i], want[i], 1e-10);
      EXPECT_GE(s.eigenvalues()[i], -1e-10);
      EXPECT_LE(s.eigenvalues()[i], 2.0 + 1e-10);
      if (i > 0) {
        EXPECT_GE(s.eigenvalues()[i], s.eigenvalues()[i - 1]);
      }
      // Sign convention: first entry above 1e-10 in magnitude is positive.
      for (std::size_t r = 0; r < n; ++r) {
        if (std::abs(u(r, i)) > 1e-10) {
          EXPECT_GT(u(r, i), 0.0);
          break;
        }
      }
    }
  }
}

TEST(SpectrumTest, DenseLimitIsEnforced) {
  EXPECT_THROW(Eigendecompose(PathGraph(10), SpectrumOptions{.dense_limit = 9}),
               PreconditionError);
  EXPECT_NO_THROW(Eigendecompose(PathGraph(10), SpectrumOptions{.dense_limit = 10}));
}

TEST(SpectrumTest, ExportTable) {
  std::ostringstream out;
  WriteSpectrum(out, Eigendecompose(CompleteGraph(2)));
  std::istringstream in(out.str());
  int i = -1;
  double v = -1;
  in >> i >> v;
  EXPECT_EQ(i, 0);
  EXPECT_NEAR(v, 0.0, 1e-15);
  in >> i >> v;
  EXPECT_EQ(i, 1);
  EXPECT_NEAR(v, 2.0, 1e-15);
}

TEST(GftTest, TwoVertexExamples) {
  const Spectrum s = Eigendecompose(CompleteGraph(2));
  const Signal c = Gft(std::vector<double>{1.0, 1.0}, s);
  EXPECT_NEAR(c[0], kSqrt2, 1e-15);
  EXPECT_NEAR(c[1], 0.0, 1e-15);
  const Signal f = Igft(std::vector<double>{kSqrt2, 0.0}, s);
  EXPECT_NEAR(f[0], 1.0, 1e-15);
  EXPECT_NEAR(f[1], 1.0, 1e-15);
  EXPECT_THROW(Gft(std::vector<double>{1.0}, s), PreconditionError);
  EXPECT_THROW(Igft(std::vector<double>{1.0, 2.0, 3.0}, s), PreconditionError);
}

TEST(GftTest, BasisVectorsAndRoundTrip) {
  const Graph g = RandomConnectedGraph(25, 0.2, 8);
  const Spectrum s = Eigendecompose(g);
  for (std::size_t j = 0; j < 25; j += 6) {
    const Signal c = Gft(s.eigenvector(j), s);
    for (std::size_t i = 0; i < 25; ++i) EXPECT_NEAR(c[i], i == j ? 1.0 : 0.0, 1e-12);
  }
  Signal e0(25, 0.0);
  e0[0] = 1.0;
  const Signal low = Igft(e0, s);
  for (std::size_t i = 0; i < 25; ++i) EXPECT_NEAR(low[i], s.eigenvectors()(i, 0), 1e-15);

  const Signal f = RandomSignal(25, 9);
  const Signal c = Gft(f, s);
  double ef = 0.0, ec = 0.0;
  for (std::size_t i = 0; i < 25; ++i) {
    ef += f[i] * f[i];
    ec += c[i] * c[i];
  }
  EXPECT_NEAR(std::sqrt(ec), std::sqrt(ef), 1e-10);
  const Signal back = Igft(c, s);
  for (std::size_t i = 0; i < 25; ++i) EXPECT_NEAR(back[i], f[i], 1e-10);
  for (double x : Gft(Signal(25, 0.0), s)) EXPECT_EQ(x, 0.0);
}

TEST(DownsamplingTest, DuOperator) {
  const DownsamplingMap keep0 = DownsamplingMap::FromKeepSet(2, std::vector<VertexId>{0});
  EXPECT_EQ(DuOperator(std::vector<double>{3.0, 5.0}, keep0), (Signal{3.0, 0.0}));
  const DownsamplingMap all(std::vector<int>{1, 1, 1});
  EXPECT_EQ(DuOperator(std::vector<double>{1.0, 2.0, 3.0}, all), (Signal{1.0, 2.0, 3.0}));
  EXPECT_THROW(DownsamplingMap(std::vector<int>{1, 0}), PreconditionError);

  const Signal f = RandomSignal(30, 2);
  const auto bip = IsBipartite(RandomBipartiteGraph(12, 18, 0.2, 2));
  const DownsamplingMap h = DownsamplingMap::HighOf(*bip);
  const DownsamplingMap l = DownsamplingMap::LowOf(*bip);
  const Signal a = DuOperator(f, h);
  const Signal b = DuOperator(f, l);
  for (std::size_t i = 0; i < 30; ++i) EXPECT_EQ(a[i] + b[i], f[i]);
  const Signal jj = h.ApplyJ(h.ApplyJ(f));
  EXPECT_EQ(jj, f);
}

TEST(DownsamplingTest, DeformedSpectrumReproducesDuSpectrum) {
  const Spectrum k2 = Eigendecompose(CompleteGraph(2));
  const Signal f = {1.0, 0.0};
  const DownsamplingMap keep0 = DownsamplingMap::FromKeepSet(2, std::vector<VertexId>{0});
  const DuSpectral d = DuSpectralDecomposition(f, keep0, k2);
  const Signal want = Gft(DuOperator(f, keep0), k2);
  // DU of [1, 0] keeping vertex 0 is [1, 0] itself: coefficients 1/sqrt2 each.
  EXPECT_NEAR(want[0], 1.0 / kSqrt2, 1e-15);
  EXPECT_NEAR(want[1], 1.0 / kSqrt2, 1e-15);
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(d.Combined()[i], want[i], 1e-15);

  const DuSpectral z = DuSpectralDecomposition(Signal(2, 0.0), keep0, k2);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(z.original[i], 0.0);
    EXPECT_EQ(z.deformed[i], 0.0);
  }

  const Graph g = RandomConnectedGraph(20, 0.2, 3);
  const Spectrum s = Eigendecompose(g);
  const Signal r = RandomSignal(20, 4);
  const DownsamplingMap m = DownsamplingMap::FromKeepSet(20, std::vector<VertexId>{0, 3, 4, 9});
  const Signal got = DuSpectralDecomposition(r, m, s).Combined();
  const Signal expect = Gft(DuOperator(r, m), s);
  for (int i = 0; i < 20; ++i) EXPECT_NEAR(got[i], expect[i], 1e-10);
}

TEST(DownsamplingTest, BipartiteDeformationMirrorsSpectrum) {
  const Graph c4 = CycleGraph(4);
  const Spectrum s = Eigendecompose(c4);
  const DownsamplingMap h = DownsamplingMap::HighOf(*IsBipartite(c4));
  const Signal f = {0.3, -1.2, 2.0, 0.7};
  const DuSpectral d = DuSpectralDecomposition(f, h, s);
  // Deformed coefficients at lambda = 0 and 2 are +- the original ones at 2
  // and 0; in the two-dimensional lambda = 1 eigenspace the energies agree.
  EXPECT_NEAR(std::abs(d.deformed[0]), std::abs(d.original[3]), 1e-12);
  EXPECT_NEAR(std::abs(d.deformed[3]), std::abs(d.original[0]), 1e-12);
  EXPECT_NEAR(std::hypot(d.deformed[1], d.deformed[2]),
              std::hypot(d.original[1], d.original[2]), 1e-12);
}

TEST(FoldingTest, SmallBipartiteGraphs) {
  const Graph c4 = CycleGraph(4);
  EXPECT_LT(VerifySpectralFolding(c4, *IsBipartite(c4), Eigendecompose(c4)).max_residual,
            1e-8);

  const Graph k2 = CompleteGraph(2);
  const Spectrum s = Eigendecompose(k2);
  const auto bip = IsBipartite(k2);
  const Signal ju = DownsamplingMap::HighOf(*bip).ApplyJ(s.eigenvector(0));
  const Signal u1 = s.eigenvector(1);
  // J u_0 = u_1 up to sign.
  EXPECT_NEAR(std::abs(ju[0] * u1[0] + ju[1] * u1[1]), 1.0, 1e-15);

  const Graph k3 = CompleteGraph(3);
  EXPECT_THROW(VerifySpectralFolding(k3, Bipartition(std::vector<Side>(3, Side::kLow)),
                                     Eigendecompose(k3)),
               PreconditionError);
}

TEST(FoldingTest, BipartitenessSymmetryAndFoldingAgree) {
  for (const Graph& g : BipartiteZoo()) {
    const auto bip = IsBipartite(g);
    ASSERT_TRUE(bip.has_value());
    const Spectrum s = Eigendecompose(g);
    EXPECT_TRUE(SpectrumSymmetricAboutOne(s, 1e-8));
    EXPECT_LT(VerifySpectralFolding(g, *bip, s).max_residual, 1e-8);
    if (ConnectedComponents(g) == std::vector<int>(g.num_vertices(), 0)) {
      EXPECT_NEAR(s.eigenvalues().back(), 2.0, 1e-8);
    }
  }
  for (const Graph& g : NonBipartiteZoo()) {
    EXPECT_FALSE(IsBipartite(g).has_value());
    const Spectrum s = Eigendecompose(g);
    EXPECT_FALSE(SpectrumSymmetricAboutOne(s, 1e-8));
    EXPECT_LT(s.eigenvalues().back(), 2.0 - 1e-8);
  }
}

TEST(ProjectorTest, IdempotentAndMutuallyOrthogonal) {
  for (const Graph& g : {CycleGraph(8), CompleteGraph(5), RandomConnectedGraph(32, 0.2, 1),
                         ImageGraph(4, 4, Connectivity::kRect)}) {
    const Spectrum s = Eigendecompose(g);
    EXPECT_LT(ProjectorAlgebraResidual(s), 1e-8);
    DenseMatrix sum(g.num_vertices(), g.num_vertices());
    for (std::size_t a = 0; a < s.groups().size(); ++a) sum += s.Projector(a);
    EXPECT_LT(MaxAbsDifference(sum, DenseMatrix::Identity(g.num_vertices())), 1e-10);
  }
}

TEST(ProjectorTest, DownsamplingMapsEigenspacesAcrossTheFold) {
  for (const Graph& g : {CycleGraph(8), ImageGraph(4, 4, Connectivity::kRect),
                         RandomBipartiteGraph(10, 12, 0.3, 5)}) {
    const Spectrum s = Eigendecompose(g);
    const DownsamplingMap j = DownsamplingMap::HighOf(*IsBipartite(g));
    const auto groups = s.groups();
    for (std::size_t a = 0; a < groups.size(); ++a) {
      // Partner group at 2 - lambda.
      std::size_t b = groups.size();
      for (std::size_t k = 0; k < groups.size(); ++k) {
        if (std::abs(groups[k].value - (2.0 - groups[a].value)) < 1e-8) b = k;
      }
      ASSERT_LT(b, groups.size());
      const DenseMatrix lhs = j.LeftApplyJ(s.Projector(a));
      const DenseMatrix rhs = j.RightApplyJ(s.Projector(b));
      EXPECT_LT(FrobeniusNorm(lhs - rhs), 1e-8);
    }
  }
}

TEST(ProjectorTest, AliasedComponentIsFoldedSpectrum) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = RandomBipartiteGraph(8 + seed, 10, 0.3, seed);
    const Spectrum s = Eigendecompose(g);
    const DownsamplingMap j = DownsamplingMap::HighOf(*IsBipartite(g));
    const Signal f = RandomSignal(g.num_vertices(), seed);
    const Signal du = DuOperator(f, j);
    const Signal alias = j.ApplyJ(f);
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(du[i], 0.5 * (f[i] + alias[i]), 1e-15);
    for (std::size_t a = 0; a < s.groups().size(); ++a) {
      std::size_t b = 0;
      for (std::size_t k = 0; k < s.groups().size(); ++k) {
        if (std::abs(s.groups()[k].value - (2.0 - s.groups()[a].value)) < 1e-8) b = k;
      }
      const Signal lhs = MatVec(s.Projector(a), alias);
      const Signal rhs = j.ApplyJ(MatVec(s.Projector(b), f));
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(lhs[i], rhs[i], 1e-8);
    }
  }
}

}  // namespace
}  // namespace graphfb
