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

#include "graphfb/chebyshev.h"
#include "graphfb/coloring.h"
#include "graphfb/decomposition.h"
#include "graphfb/fixtures.h"
#include "graphfb/gft.h"
#include "graphfb/kernel.h"
#include "graphfb/lattice.h"
#include "graphfb/separable.h"
#include "graphfb/subband_io.h"
#include "graphfb/two_channel.h"
#include "oracle.h"

namespace graphfb {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Eigen::MatrixXd ToEigen(const DenseMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

double MaxAbsError(std::span<const double> a, std::span<const double> b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

double SquaredNorm(std::span<const double> a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return s;
}

// Analysis operator of one two-channel stage built from oracle filters:
// rows of H0 on L and rows of H1 on H; isolated vertices pass through / sqrt2.
Eigen::MatrixXd OracleStageOperator(const Graph& g, const Bipartition& p,
                                    const SpectralKernel& h0, const SpectralKernel& h1) {
  const Eigen::MatrixXd a = oracle::FilterMatrix(g, [&](double l) { return h0(l); });
  const Eigen::MatrixXd b = oracle::FilterMatrix(g, [&](double l) { return h1(l); });
  const std::size_t n = g.num_vertices();
  Eigen::MatrixXd t(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      t.row(v).setZero();
      t(v, v) = kInvSqrt2;
    } else {
      t.row(v) = p.is_high(v) ? b.row(v) : a.row(v);
    }
  }
  return t;
}

Bipartition SidesOf(const Graph& g) { return *IsBipartite(g); }

TEST(TwoChannelTest, TwoVertexTrace) {
  const Graph g = CompleteGraph(2);
  const TwoChannelBank bank(g, SidesOf(g), QmfCompanions(SpectralKernel::Ideal()),
                            FilterMode::kExact);
  const Signal f = {1.0, 0.0};
  const TwoChannelCoefficients y = bank.Analyze(f);
  ASSERT_EQ(y.low.size(), 1u);
  ASSERT_EQ(y.high.size(), 1u);
  EXPECT_NEAR(y.low[0], 0.5, 1e-15);
  EXPECT_NEAR(y.high[0], -0.5, 1e-15);
  const Signal back = bank.Synthesize(y.low, y.high);
  EXPECT_NEAR(back[0], 1.0, 1e-15);
  EXPECT_NEAR(back[1], 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(bank.synthesis_gain(), 2.0);
}

TEST(TwoChannelTest, ExactPerfectReconstruction) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = RandomBipartiteGraph(10 + seed, 14, 0.2, seed);
    for (const SpectralKernel& h0 :
         {SpectralKernel::Meyer(), SpectralKernel::Ideal(), SpectralKernel::Meyer(1.7)}) {
      const TwoChannelBank bank(g, SidesOf(g), QmfCompanions(h0), FilterMode::kExact);
      const Signal f = RandomSignal(g.num_vertices(), seed + 100);
      const TwoChannelCoefficients y = bank.Analyze(f);
      EXPECT_EQ(y.low.size() + y.high.size(), g.num_vertices());
      EXPECT_LT(MaxAbsError(bank.Synthesize(y.low, y.high), f), 1e-10);
      EXPECT_LT(MaxAbsError(bank.SynthesizeFull(bank.AnalyzeFull(f)), f), 1e-10);
    }
  }
}

TEST(TwoChannelTest, AnalysisMatchesOracleOperator) {
  const Graph g = RandomBipartiteGraph(9, 11, 0.3, 4);
  const Bipartition p = SidesOf(g);
  const KernelSet k = QmfCompanions(SpectralKernel::Meyer());
  const TwoChannelBank bank(g, p, k, FilterMode::kExact);
  const Eigen::MatrixXd want = OracleStageOperator(g, p, k.h0, k.h1);
  EXPECT_LT((ToEigen(bank.AnalysisOperator()) - want).cwiseAbs().maxCoeff(), 1e-10);
  const Signal f = RandomSignal(20, 1);
  const Eigen::VectorXd y = want * oracle::ToEigen(f);
  EXPECT_LT(MaxAbsError(bank.AnalyzeFull(f), oracle::FromEigen(y)), 1e-10);
}

TEST(TwoChannelTest, OrthogonalBankIsCriticallySampledIsometry) {
  const Graph g = ImageGraph(5, 4, Connectivity::kRect);
  const TwoChannelBank bank(g, SidesOf(g), QmfCompanions(SpectralKernel::Meyer()),
                            FilterMode::kExact);
  EXPECT_LT(OrthonormalityResidual(bank.AnalysisOperator()), 1e-10);
  const Signal f = RandomSignal(20, 3);
  EXPECT_NEAR(2.0 * SquaredNorm(bank.AnalyzeFull(f)), SquaredNorm(f), 1e-10);
}

TEST(TwoChannelTest, IsolatedVerticesPassThrough) {
  const Graph g(5, {{0, 1, 1.0}, {1, 2, 2.0}});
  const Bipartition p({Side::kLow, Side::kHigh, Side::kLow, Side::kHigh, Side::kLow});
  const TwoChannelBank bank(g, p, QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact);
  const Signal f = {1.0, -2.0, 0.5, 4.0, -3.0};
  const Signal y = bank.AnalyzeFull(f);
  EXPECT_NEAR(y[3], 4.0 * kInvSqrt2, 1e-15);
  EXPECT_NEAR(y[4], -3.0 * kInvSqrt2, 1e-15);
  EXPECT_LT(MaxAbsError(bank.SynthesizeFull(y), f), 1e-12);
  EXPECT_LT(OrthonormalityResidual(bank.AnalysisOperator()), 1e-10);
}

TEST(TwoChannelTest, RejectsInvalidConfigurations) {
  const Graph g = CompleteGraph(3);
  const Bipartition p({Side::kLow, Side::kHigh, Side::kHigh});
  EXPECT_THROW(TwoChannelBank(g, p, QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact),
               PreconditionError);
  const Graph c4 = CycleGraph(4);
  EXPECT_THROW(TwoChannelBank(c4, SidesOf(c4), QmfCompanions(SpectralKernel::Meyer()),
                              FilterMode::kPolynomial),
               PreconditionError);
  EXPECT_THROW(TwoChannelBank(c4, Bipartition(std::vector<Side>(3, Side::kLow)),
                              QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact),
               PreconditionError);
}

TEST(TwoChannelTest, PolynomialModeMatchesDirectFiltering) {
  const Graph g = RandomBipartiteGraph(15, 15, 0.15, 7);
  const Bipartition p = SidesOf(g);
  const KernelSet k = PolynomialQmf(SpectralKernel::Meyer(), 6);
  const TwoChannelBank bank(g, p, k, FilterMode::kPolynomial);
  EXPECT_EQ(bank.spectrum(), nullptr);
  const Signal f = RandomSignal(30, 8);
  const Signal a = ApplyPolynomialFilter(g, *k.h0.polynomial(), f);
  const Signal b = ApplyPolynomialFilter(g, *k.h1.polynomial(), f);
  const Signal y = bank.AnalyzeFull(f);
  for (std::size_t v = 0; v < 30; ++v) EXPECT_NEAR(y[v], p.is_high(v) ? b[v] : a[v], 1e-14);
  // Approximately, not exactly, perfect.
  const Signal back = bank.SynthesizeFull(y);
  double num = 0.0;
  for (std::size_t v = 0; v < 30; ++v) num += (back[v] - f[v]) * (back[v] - f[v]);
  const double rel = std::sqrt(num / SquaredNorm(f));
  EXPECT_GT(rel, 1e-8);
  EXPECT_LT(rel, 0.2);
}

TEST(PrConditionsTest, SpectrumOverload) {
  const Graph g = CycleGraph(6);
  const Spectrum s = Eigendecompose(g);
  EXPECT_LT(VerifyPrConditions(QmfCompanions(SpectralKernel::Ideal()), s).max(), 1e-12);
  EXPECT_GT(VerifyPrConditions(PolynomialQmf(SpectralKernel::Ideal(), 3), s).max(), 1e-3);
}

TEST(SeparableTest, TriangleTrace) {
  const Graph g = CompleteGraph(3);
  const BipartiteDecomposition d = HararyDecompose(g, GreedyColoring(g));
  ASSERT_EQ(d.dimension(), 2u);
  const SeparableFilterbank fb(g, d, QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact);
  const Signal f = {1.0, 2.0, -1.0};
  const SubbandTree t = fb.Analyze(f);
  EXPECT_EQ(t.dimension, 2u);
  EXPECT_EQ(t.channels.size(), 4u);
  EXPECT_TRUE(t.PartitionsVertices());
  EXPECT_EQ(t.total_coefficients(), 3u);
  EXPECT_EQ(t.non_empty_channels(), 3u);
  ASSERT_NE(t.Find("LH"), nullptr);
  EXPECT_TRUE(t.Find("LH")->vertices.empty());
  EXPECT_EQ(t.Find("HH")->vertices, (std::vector<VertexId>{2}));
  EXPECT_LT(MaxAbsError(fb.Synthesize(t), f), 1e-12);
}

TEST(SeparableTest, CascadeMatchesOracleProduct) {
  const Graph g = RandomConnectedGraph(18, 0.25, 2);
  const BipartiteDecomposition d = HararyDecompose(g, GreedyColoring(g));
  const KernelSet k = QmfCompanions(SpectralKernel::Meyer());
  const SeparableFilterbank fb(g, d, k, FilterMode::kExact);
  Eigen::MatrixXd want = Eigen::MatrixXd::Identity(18, 18);
  for (const DecompositionStage& st : d.stages) {
    const Graph sub = SubgraphRestricted(g, st.edges);
    want = OracleStageOperator(sub, st.partition, k.h0, k.h1) * want;
  }
  EXPECT_LT((ToEigen(fb.AnalysisOperator()) - want).cwiseAbs().maxCoeff(), 1e-10);
  // Each stage scales energy by 1/2, so 2^K T^t T = I.
  const Eigen::MatrixXd t = ToEigen(fb.AnalysisOperator());
  const double scale = std::ldexp(1.0, static_cast<int>(d.dimension()));
  EXPECT_LT((scale * t.transpose() * t - Eigen::MatrixXd::Identity(18, 18)).cwiseAbs().maxCoeff(),
            1e-10);
}

TEST(SeparableTest, RandomGraphsReconstructAndConserveEnergy) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = RandomConnectedGraph(30, 0.15 + 0.05 * seed, seed);
    const BipartiteDecomposition d = HararyDecompose(g, GreedyColoring(g));
    const SeparableFilterbank fb(g, d, QmfCompanions(SpectralKernel::Meyer()),
                                 FilterMode::kExact);
    const Signal f = RandomSignal(30, seed);
    const SubbandTree t = fb.Analyze(f);
    EXPECT_TRUE(t.PartitionsVertices());
    EXPECT_EQ(t.total_coefficients(), 30u);
    EXPECT_LT(MaxAbsError(fb.Synthesize(t), f), 1e-10);
    const EnergyReport e = fb.ChannelEnergies(t);
    EXPECT_LT(e.sum_residual, 1e-10);
    EXPECT_NEAR(e.total_energy(), SquaredNorm(f), 1e-9 * SquaredNorm(f));
    for (const ChannelEnergy& c : e.channels) {
      EXPECT_NEAR(c.energy, SquaredNorm(c.contribution), 1e-12);
    }
  }
}

TEST(SeparableTest, ChannelOperatorsSumToSynthesisInverse) {
  const Graph g = ImageGraph(4, 4, Connectivity::kEight);
  const BipartiteDecomposition d = HararyDecompose(g, LatticeColoring(4, 4));
  ASSERT_EQ(d.dimension(), 2u);
  const SeparableFilterbank fb(g, d, QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact);
  DenseMatrix sum(16, 16);
  for (const std::string& label : AllChannelLabels(2)) sum += fb.ChannelOperator(label);
  // Sum of all channel projections of the cascade is the cascade itself.
  EXPECT_LT(MaxAbsDifference(sum, fb.AnalysisOperator()), 1e-10);
  EXPECT_THROW(fb.ChannelOperator("L"), PreconditionError);
}

TEST(SeparableTest, ZeroedChannelLosesItsContribution) {
  const Graph g = ImageGraph(6, 6, Connectivity::kEight);
  const SeparableFilterbank fb(g, HararyDecompose(g, LatticeColoring(6, 6)),
                               QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact);
  const Signal f = RandomSignal(36, 5);
  SubbandTree t = fb.Analyze(f);
  const EnergyReport e = fb.ChannelEnergies(t);
  SubbandChannel* hh = t.Find("HH");
  ASSERT_NE(hh, nullptr);
  std::fill(hh->coefficients.begin(), hh->coefficients.end(), 0.0);
  const Signal partial = fb.Synthesize(t);
  const ChannelEnergy* lost = nullptr;
  for (const ChannelEnergy& c : e.channels) {
    if (c.label == "HH") lost = &c;
  }
  ASSERT_NE(lost, nullptr);
  for (std::size_t v = 0; v < 36; ++v) {
    EXPECT_NEAR(partial[v] + lost->contribution[v], f[v], 1e-10);
  }
}

TEST(SeparableTest, RejectsMismatchedTrees) {
  const Graph g = CycleGraph(6);
  const SeparableFilterbank fb(g, HararyDecompose(g, GreedyColoring(g)),
                               QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact);
  SubbandTree t = fb.Analyze(RandomSignal(6, 1));
  t.channels[0].vertices.pop_back();
  t.channels[0].coefficients.pop_back();
  EXPECT_THROW(fb.Synthesize(t), PreconditionError);
  EXPECT_THROW(fb.Analyze(Signal(5, 0.0)), PreconditionError);
}

TEST(SeparableTest, RejectsInvalidDecomposition) {
  const Graph g = CompleteGraph(3);
  BipartiteDecomposition d = HararyDecompose(g, GreedyColoring(g));
  d.stages[1].edges.clear();
  EXPECT_THROW(SeparableFilterbank(g, d, QmfCompanions(SpectralKernel::Meyer()),
                                   FilterMode::kExact),
               PreconditionError);
  const BipartiteDecomposition ok = HararyDecompose(g, GreedyColoring(g));
  const std::vector<KernelSet> one = {QmfCompanions(SpectralKernel::Meyer())};
  EXPECT_THROW(SeparableFilterbank(g, ok, one, FilterMode::kExact), PreconditionError);
}

TEST(SeparableTest, PolynomialCascadeIsCloseToExact) {
  const PlanarFixture fx = Planar3Colorable(120, 3);
  const BipartiteDecomposition d = HararyDecompose(fx.graph, GreedyColoring(fx.graph));
  const SeparableFilterbank poly(fx.graph, d, PolynomialQmf(SpectralKernel::Meyer(), 10),
                                 FilterMode::kPolynomial);
  const Signal f = PiecewiseConstantSignal(fx.coordinates);
  const SubbandTree t = poly.Analyze(f);
  EXPECT_EQ(t.total_coefficients(), 120u);
  const Signal back = poly.Synthesize(t);
  double num = 0.0;
  for (std::size_t v = 0; v < f.size(); ++v) num += (back[v] - f[v]) * (back[v] - f[v]);
  EXPECT_LT(std::sqrt(num / SquaredNorm(f)), 0.05);
}

TEST(CommutationTest, LatticeSplitCommutesExactly) {
  const Graph g = ImageGraph(6, 6, Connectivity::kEight);
  const BipartiteDecomposition d = HararyDecompose(g, LatticeColoring(6, 6));
  EXPECT_LT(CommutationResidual(g, d, QmfCompanions(SpectralKernel::Meyer()),
                                FilterMode::kExact),
            1e-12);
  EXPECT_LT(CommutationResidual(g, d, PolynomialQmf(SpectralKernel::Meyer(), 4),
                                FilterMode::kPolynomial),
            1e-12);
}

TEST(CommutationTest, MisassignedEdgeBreaksCommutation) {
  const Graph g = ImageGraph(6, 6, Connectivity::kEight);
  BipartiteDecomposition d = HararyDecompose(g, LatticeColoring(6, 6));
  d.stages[1].edges.push_back(d.stages[0].edges.back());
  d.stages[0].edges.pop_back();
  EXPECT_FALSE(CheckDecomposition(g, d).ok());
  EXPECT_GT(CommutationResidual(g, d, QmfCompanions(SpectralKernel::Meyer()),
                                FilterMode::kExact),
            1e-6);
}

TEST(CommutationTest, SingleStageIsTriviallyZero) {
  const Graph g = CycleGraph(8);
  EXPECT_EQ(CommutationResidual(g, HararyDecompose(g, GreedyColoring(g)),
                                QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact),
            0.0);
}

TEST(BudgetTest, ExactKernelsHaveNoBudget) {
  const std::vector<double> grid = UniformGrid(1001);
  const std::vector<KernelSet> exact(2, QmfCompanions(SpectralKernel::Meyer()));
  EXPECT_LT(PredictedErrorBudget(exact, grid), 1e-12);
  const std::vector<KernelSet> poly(2, PolynomialQmf(SpectralKernel::Meyer(), 6));
  const std::vector<KernelSet> poly1(1, PolynomialQmf(SpectralKernel::Meyer(), 6));
  const double b2 = PredictedErrorBudget(poly, grid);
  const double b1 = PredictedErrorBudget(poly1, grid);
  EXPECT_GT(b1, 0.0);
  EXPECT_NEAR(b2, (1.0 + b1) * (1.0 + b1) - 1.0, 1e-12);
}

TEST(SubbandIoTest, RoundTrip) {
  const Graph g = CompleteGraph(3);
  const SeparableFilterbank fb(g, HararyDecompose(g, GreedyColoring(g)),
                               QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact);
  const SubbandTree t = fb.Analyze(Signal{0.25, -1.0, 3.0});
  std::stringstream s;
  WriteSubbandTree(s, t);
  const SubbandTree r = ReadSubbandTree(s);
  EXPECT_EQ(r.dimension, t.dimension);
  EXPECT_EQ(r.num_vertices, t.num_vertices);
  ASSERT_EQ(r.channels.size(), t.channels.size());
  for (std::size_t i = 0; i < t.channels.size(); ++i) {
    EXPECT_EQ(r.channels[i].label, t.channels[i].label);
    EXPECT_EQ(r.channels[i].vertices, t.channels[i].vertices);
    EXPECT_EQ(r.channels[i].coefficients, t.channels[i].coefficients);
  }
  std::istringstream bad("garbage\n");
  EXPECT_THROW(ReadSubbandTree(bad), ParseError);
}

TEST(SubbandIoTest, ZeroDimensionalTree) {
  const Graph g(3, {});
  const BipartiteDecomposition d = HararyDecompose(g, GreedyColoring(g));
  EXPECT_EQ(d.dimension(), 0u);
  const SeparableFilterbank fb(g, d, QmfCompanions(SpectralKernel::Meyer()), FilterMode::kExact);
  const Signal f = {1.0, 2.0, 3.0};
  const SubbandTree t = fb.Analyze(f);
  ASSERT_EQ(t.channels.size(), 1u);
  EXPECT_EQ(t.channels[0].label, "");
  std::stringstream s;
  WriteSubbandTree(s, t);
  EXPECT_NE(s.str().find("channel - 3"), std::string::npos);
  const SubbandTree r = ReadSubbandTree(s);
  EXPECT_EQ(r.channels[0].label, "");
  EXPECT_LT(MaxAbsError(fb.Synthesize(r), f), 1e-15);
}

}  // namespace
}  // namespace graphfb
