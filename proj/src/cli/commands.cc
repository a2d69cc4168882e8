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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphfb/chebyshev.h"
#include "graphfb/cli.h"
#include "graphfb/coloring.h"
#include "graphfb/decomposition.h"
#include "graphfb/decomposition_io.h"
#include "graphfb/fixtures.h"
#include "graphfb/gft.h"
#include "graphfb/graph_io.h"
#include "graphfb/kernel.h"
#include "graphfb/kernel_io.h"
#include "graphfb/lattice.h"
#include "graphfb/response.h"
#include "graphfb/separable.h"
#include "graphfb/spectrum.h"
#include "graphfb/subband_io.h"
#include "graphfb/two_channel.h"

namespace graphfb {
namespace {

namespace fs = std::filesystem;

// Property tolerances of the verify command.
constexpr double kSpectralTolerance = 1e-8;
constexpr double kKernelTolerance = 1e-10;
constexpr double kOperatorTolerance = 1e-8;
constexpr double kCommutationTolerance = 1e-10;
constexpr double kRoundTripTolerance = 1e-8;
constexpr std::size_t kProjectorCheckLimit = 128;
constexpr std::size_t kKernelGridPoints = 1001;

struct Options {
  std::string graph;
  std::string signal;
  std::string subbands;
  std::string coloring;
  std::string decomposition;
  std::string reference;
  std::string zero_channels;
  std::string kernel = "meyer";
  std::string mode = "exact";
  std::size_t order = 6;
  std::uint64_t seed = 0;
  std::string out = ".";
  std::size_t dense_limit = kDefaultDenseLimit;
  // response
  std::string kind = "kernel-grid";
  std::string connectivity = "rect";
  std::size_t width = 64;
  std::size_t height = 64;
  std::size_t points = kKernelGridPoints;
  // fixtures
  std::string name;
  std::size_t n = 0;
};

FilterMode Mode(const Options& o) {
  return o.mode == "poly" ? FilterMode::kPolynomial : FilterMode::kExact;
}

SpectralKernel BaseKernel(const Options& o) {
  return o.kernel == "ideal" ? SpectralKernel::Ideal() : SpectralKernel::Meyer();
}

KernelSet Kernels(const Options& o) {
  if (Mode(o) == FilterMode::kPolynomial) return PolynomialQmf(BaseKernel(o), o.order);
  return QmfCompanions(BaseKernel(o));
}

Coloring ColoringFor(const Graph& g, const Options& o) {
  if (o.coloring.empty()) return GreedyColoring(g);
  return LoadColoring(o.coloring, g.num_vertices());
}

BipartiteDecomposition DecompositionFor(const Graph& g, const Options& o) {
  if (!o.decomposition.empty()) {
    BipartiteDecomposition d = LoadDecomposition(o.decomposition);
    if (d.num_vertices != g.num_vertices()) {
      throw ParseError("decomposition does not match the graph's vertex count");
    }
    return d;
  }
  return HararyDecompose(g, ColoringFor(g, o));
}

void Metric(std::ostream& out, const std::string& name, double value) {
  out << name << ' ' << value << '\n';
}

double Norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

struct Errors {
  double max_abs = 0.0;
  double relative_l2 = 0.0;
};

Errors Compare(std::span<const double> got, std::span<const double> want) {
  Errors e;
  double diff = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double d = got[i] - want[i];
    e.max_abs = std::max(e.max_abs, std::abs(d));
    diff += d * d;
  }
  const double ref = Norm(want);
  e.relative_l2 = ref > 0.0 ? std::sqrt(diff) / ref : std::sqrt(diff);
  return e;
}

double PredictedBudget(const SeparableFilterbank& bank) {
  std::vector<KernelSet> sets;
  for (std::size_t i = 0; i < bank.dimension(); ++i) sets.push_back(bank.stage(i).kernels());
  return PredictedErrorBudget(sets, UniformGrid(kKernelGridPoints));
}

// ---------------------------------------------------------------- decompose

int RunDecompose(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph);
  const Coloring c = ColoringFor(g, o);
  const BipartiteDecomposition d = HararyDecompose(g, c);
  SaveDecomposition(o.out, d);
  out << "vertices " << g.num_vertices() << '\n';
  out << "edges " << g.num_edges() << '\n';
  out << "colors " << c.num_colors << '\n';
  out << "stages " << d.dimension() << '\n';
  for (std::size_t i = 0; i < d.dimension(); ++i) {
    out << "stage-edges:" << i + 1 << ' ' << d.stages[i].edges.size() << '\n';
  }
  const DecompositionCheck check = CheckDecomposition(g, d);
  out << "valid " << (check.ok() ? "yes" : "no") << '\n';
  return check.ok() ? kExitOk : kExitPropertyFailure;
}

// ------------------------------------------------------------------ analyze

int RunAnalyze(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph);
  const Signal f = LoadSignal(o.signal, g.num_vertices());
  const SeparableFilterbank bank(g, DecompositionFor(g, o), Kernels(o), Mode(o),
                                 o.dense_limit);
  const SubbandTree tree = bank.Analyze(f);
  fs::create_directories(o.out);
  SaveSubbandTree(fs::path(o.out) / "subbands.txt", tree);
  UseRoundTripPrecision(out);
  out << "stages " << tree.dimension << '\n';
  double total_energy = 0.0;
  for (const SubbandChannel& ch : tree.channels) {
    const double e = Norm(ch.coefficients);
    total_energy += e * e;
    const std::string label = ch.label.empty() ? "-" : ch.label;
    out << "channel-size:" << label << ' ' << ch.vertices.size() << '\n';
    Metric(out, "channel-energy:" + label, e * e);
  }
  out << "total-coefficients " << tree.total_coefficients() << '\n';
  const bool critical =
      tree.PartitionsVertices() && tree.total_coefficients() == g.num_vertices();
  out << "critical-sampling " << (critical ? "ok" : "violated") << '\n';
  Metric(out, "signal-energy", Norm(f) * Norm(f));
  Metric(out, "coefficient-energy", total_energy);
  if (Mode(o) == FilterMode::kPolynomial) Metric(out, "predicted-relative-error", PredictedBudget(bank));
  return critical ? kExitOk : kExitPropertyFailure;
}

// --------------------------------------------------------------- synthesize

std::vector<std::string> SplitLabels(const std::string& list) {
  std::vector<std::string> labels;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) labels.push_back(item);
  }
  return labels;
}

int RunSynthesize(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph);
  SubbandTree tree = LoadSubbandTree(o.subbands);
  if (tree.num_vertices != g.num_vertices()) {
    throw ParseError("subband file does not match the graph's vertex count");
  }
  for (const std::string& label : SplitLabels(o.zero_channels)) {
    SubbandChannel* ch = tree.Find(label == "-" ? "" : label);
    if (ch == nullptr) throw ParseError("no channel '" + label + "' in the subband file");
    std::fill(ch->coefficients.begin(), ch->coefficients.end(), 0.0);
  }
  const SeparableFilterbank bank(g, DecompositionFor(g, o), Kernels(o), Mode(o),
                                 o.dense_limit);
  const Signal f = bank.Synthesize(tree);
  fs::create_directories(o.out);
  SaveSignal(fs::path(o.out) / "reconstruction.signal", f);
  UseRoundTripPrecision(out);
  Metric(out, "reconstruction-energy", Norm(f) * Norm(f));
  if (Mode(o) == FilterMode::kPolynomial) Metric(out, "predicted-relative-error", PredictedBudget(bank));
  if (!o.reference.empty()) {
    const Signal ref = LoadSignal(o.reference, g.num_vertices());
    const Errors e = Compare(f, ref);
    Metric(out, "max-abs-error", e.max_abs);
    Metric(out, "relative-l2-error", e.relative_l2);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

class CheckTable {
 public:
  explicit CheckTable(std::ostream& out) : out_(out) { UseRoundTripPrecision(out_); }

  void Check(const std::string& name, double value, double tolerance) {
    const bool pass = value < tolerance;
    failed_ |= !pass;
    out_ << "check " << name << ' ' << (pass ? "PASS" : "FAIL") << ' ' << value << '\n';
  }
  void Require(const std::string& name, bool pass, const std::string& detail) {
    failed_ |= !pass;
    out_ << "check " << name << ' ' << (pass ? "PASS" : "FAIL") << ' ' << detail << '\n';
  }
  void Skip(const std::string& name, const std::string& why) {
    out_ << "check " << name << " SKIP " << why << '\n';
  }
  void Info(const std::string& name, double value) {
    out_ << "check " << name << " INFO " << value << '\n';
  }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

int RunVerify(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph);
  const std::size_t n = g.num_vertices();
  const FilterMode mode = Mode(o);
  const KernelSet kernels = Kernels(o);
  CheckTable t(out);

  // Spectral properties of the whole graph.
  const Spectrum spectrum = Eigendecompose(g, SpectrumOptions{.dense_limit = o.dense_limit});
  const std::optional<Bipartition> bip = IsBipartite(g);
  double asymmetry = 0.0;
  const auto lambdas = spectrum.eigenvalues();
  for (std::size_t i = 0; i < n; ++i) {
    asymmetry = std::max(asymmetry, std::abs(lambdas[i] - (2.0 - lambdas[n - 1 - i])));
  }
  const bool symmetric = asymmetry <= kSpectralTolerance;
  std::ostringstream symmetry;
  symmetry << "bipartite=" << (bip ? "yes" : "no") << " symmetric=" << (symmetric ? "yes" : "no");
  t.Require("bipartite-iff-symmetric-spectrum", bip.has_value() == symmetric, symmetry.str());
  if (bip) {
    t.Check("spectral-folding", VerifySpectralFolding(g, *bip, spectrum).max_residual,
            kSpectralTolerance);
  } else {
    t.Skip("spectral-folding", "not-bipartite");
  }
  if (n <= kProjectorCheckLimit) {
    t.Check("projector-algebra", ProjectorAlgebraResidual(spectrum), kSpectralTolerance);
  } else {
    t.Skip("projector-algebra", "graph-too-large");
  }

  // Kernel conditions.
  const PrReport pr = VerifyPrConditions(kernels, UniformGrid(kKernelGridPoints));
  if (mode == FilterMode::kExact) {
    t.Check("aliasing-cancellation", pr.aliasing, kKernelTolerance);
    t.Check("distortion-free", pr.distortion, kKernelTolerance);
    t.Check("kernel-orthogonality",
            std::max(pr.orthogonality_cross, pr.orthogonality_power), kKernelTolerance);
  } else {
    t.Info("aliasing-cancellation", pr.aliasing);
    t.Info("distortion-free", pr.distortion);
    t.Info("kernel-orthogonality", std::max(pr.orthogonality_cross, pr.orthogonality_power));
  }

  // Decomposition and filterbank properties.
  const BipartiteDecomposition d = DecompositionFor(g, o);
  const DecompositionCheck dc = CheckDecomposition(g, d);
  t.Require("decomposition", dc.ok(), dc.ok() ? "valid" : "invalid");
  if (d.dimension() >= 2) {
    t.Check("commutation", CommutationResidual(g, d, kernels, mode, o.dense_limit),
            kCommutationTolerance);
  } else {
    t.Skip("commutation", "single-stage");
  }
  if (!dc.ok()) {
    t.Require("critical-sampling", false, "invalid-decomposition");
    t.Require("perfect-reconstruction", false, "invalid-decomposition");
    return kExitPropertyFailure;
  }
  const SeparableFilterbank bank(g, d, kernels, mode, o.dense_limit);
  for (std::size_t i = 0; i < bank.dimension(); ++i) {
    const std::string name = "stage-orthonormality:" + std::to_string(i + 1);
    const double r = OrthonormalityResidual(bank.stage(i).AnalysisOperator());
    if (mode == FilterMode::kExact) {
      t.Check(name, r, kOperatorTolerance);
    } else {
      t.Info(name, r);
    }
  }
  const Signal f = RandomSignal(n, o.seed);
  const SubbandTree tree = bank.Analyze(f);
  t.Require("critical-sampling",
            tree.PartitionsVertices() && tree.total_coefficients() == n,
            std::to_string(tree.total_coefficients()) + "/" + std::to_string(n));
  const EnergyReport energy = bank.ChannelEnergies(tree);
  const double rel = Compare(energy.reconstruction, f).relative_l2;
  const double f2 = Norm(f) * Norm(f);
  const double energy_gap = f2 > 0.0 ? std::abs(energy.total_energy() - f2) / f2 : 0.0;
  if (mode == FilterMode::kExact) {
    t.Check("perfect-reconstruction", rel, kRoundTripTolerance);
    t.Check("energy-additivity", energy_gap, kOperatorTolerance);
  } else {
    t.Info("perfect-reconstruction", rel);
    t.Info("predicted-relative-error", PredictedBudget(bank));
    t.Info("energy-additivity", energy_gap);
  }
  t.Check("channel-sum", energy.sum_residual, kOperatorTolerance);
  return t.failed() ? kExitPropertyFailure : kExitOk;
}

// ----------------------------------------------------------------- response

int RunResponse(const Options& o, std::ostream& out) {
  fs::create_directories(o.out);
  const fs::path path = fs::path(o.out) / "response.txt";
  std::ofstream file(path);
  if (!file) throw Error("cannot open '" + path.string() + "' for writing");
  UseRoundTripPrecision(out);
  if (o.kind == "kernel-grid") {
    const KernelSet exact = QmfCompanions(BaseKernel(o));
    const std::vector<double> grid = UniformGrid(o.points);
    if (Mode(o) == FilterMode::kExact) {
      const ResponseColumn cols[] = {{"h0", exact.h0}, {"h1", exact.h1}};
      WriteResponseTable(file, grid, cols);
    } else {
      const KernelSet poly = PolynomialQmf(BaseKernel(o), o.order);
      const ResponseColumn cols[] = {{"h0", poly.h0},
                                     {"h1", poly.h1},
                                     {"h0_exact", exact.h0},
                                     {"h1_exact", exact.h1}};
      WriteResponseTable(file, grid, cols);
      Metric(out, "max-deviation",
             std::max(MaxGridError(poly.h0, exact.h0, grid),
                      MaxGridError(poly.h1, exact.h1, grid)));
    }
    out << "samples " << grid.size() << '\n';
    return kExitOk;
  }
  if (o.kind != "image-dft") throw ParseError("unknown response kind '" + o.kind + "'");
  ImageResponseRequest req;
  req.width = o.width;
  req.height = o.height;
  req.connectivity = ParseConnectivity(o.connectivity);
  req.kernel = BaseKernel(o);
  req.mode = Mode(o);
  req.degree = o.order;
  req.dense_limit = o.dense_limit;
  const ImageResponse r = ComputeImageResponse(req);
  WriteDftTable(file, r.dft);
  out << "center " << r.center_col << ' ' << r.center_row << '\n';
  const double pi = std::numbers::pi;
  std::optional<BandStats> stats;
  if (req.connectivity == Connectivity::kRect) {
    stats = DiamondBandStats(r.dft, 0.8 * pi, 1.2 * pi);
  } else if (req.connectivity == Connectivity::kHorizontal) {
    stats = AxisBandStats(r.dft, 1, 0.4 * pi, 0.6 * pi);
    Metric(out, "variation-along-omega2", VariationAlongAxis(r.dft, 2));
  } else if (req.connectivity == Connectivity::kVertical) {
    stats = AxisBandStats(r.dft, 2, 0.4 * pi, 0.6 * pi);
    Metric(out, "variation-along-omega1", VariationAlongAxis(r.dft, 1));
  }
  if (stats) {
    Metric(out, "passband-min", stats->passband_min);
    Metric(out, "stopband-max", stats->stopband_max);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- fixtures

int RunFixtures(const Options& o, std::ostream& out) {
  std::optional<Graph> g;
  std::optional<std::vector<Point>> coords;
  std::optional<Coloring> coloring;
  const std::string& name = o.name;
  if (name == "k2") {
    g = CompleteGraph(2);
  } else if (name == "complete") {
    g = CompleteGraph(o.n == 0 ? 3 : o.n);
  } else if (name == "cycle") {
    g = CycleGraph(o.n == 0 ? 4 : o.n);
  } else if (name == "path") {
    g = PathGraph(o.n == 0 ? 8 : o.n);
  } else if (name == "lattice" || name == "lattice8") {
    const Connectivity conn =
        name == "lattice8" ? Connectivity::kEight : ParseConnectivity(o.connectivity);
    const std::size_t w = o.width;
    const std::size_t h = o.height;
    g = ImageGraph(w, h, conn);
    coords = LatticeCoordinates(w, h);
    if (conn == Connectivity::kEight) coloring = LatticeColoring(w, h);
  } else if (name == "planar3c") {
    PlanarFixture p = Planar3Colorable(o.n == 0 ? 200 : o.n, o.seed);
    g = std::move(p.graph);
    coords = std::move(p.coordinates);
  } else if (name == "random") {
    g = RandomConnectedGraph(o.n == 0 ? 32 : o.n, 0.15, o.seed);
  } else if (name == "random-bipartite") {
    const std::size_t total = o.n == 0 ? 32 : o.n;
    g = RandomBipartiteGraph(total / 2, total - total / 2, 0.2, o.seed);
  } else {
    throw ParseError("unknown fixture '" + name + "'");
  }
  const fs::path dir(o.out);
  fs::create_directories(dir);
  SaveGraph(dir / (name + ".edges"), *g);
  SaveSignal(dir / (name + ".random.signal"), RandomSignal(g->num_vertices(), o.seed));
  SaveSignal(dir / (name + ".constant.signal"), ConstantSignal(g->num_vertices()));
  if (coords) {
    SaveSignal(dir / (name + ".piecewise.signal"), PiecewiseConstantSignal(*coords));
    std::ofstream c(dir / (name + ".coords"));
    WriteCoordinates(c, *coords);
  }
  if (coloring) SaveColoring(dir / (name + ".coloring"), *coloring);
  out << "vertices " << g->num_vertices() << '\n';
  out << "edges " << g->num_edges() << '\n';
  out << "colors " << GreedyColoring(*g).num_colors << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------- app

void AddFilterOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--kernel", o.kernel, "Lowpass kernel")
      ->check(CLI::IsMember({"ideal", "meyer"}));
  cmd->add_option("--mode", o.mode, "Exact spectral filters or Chebyshev polynomials")
      ->check(CLI::IsMember({"exact", "poly"}));
  cmd->add_option("--order", o.order, "Polynomial degree m")->check(CLI::Range(1, 1000));
  cmd->add_option("--dense-limit", o.dense_limit, "Largest N for dense eigendecomposition");
}

void AddDecompositionOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--coloring", o.coloring, "Coloring file (default: greedy coloring)");
  cmd->add_option("--decomposition", o.decomposition,
                  "Directory written by 'decompose' (default: re-derive)");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Critically sampled graph wavelet filterbanks"};
  app.name("graphfb");
  app.require_subcommand(1);

  auto* decompose = app.add_subcommand("decompose", "Harary bipartite decomposition");
  decompose->add_option("--graph", o.graph, "Edge-list file")->required();
  decompose->add_option("--coloring", o.coloring, "Coloring file (default: greedy)");
  decompose->add_option("--out", o.out, "Output directory");

  auto* analyze = app.add_subcommand("analyze", "Separable filterbank analysis");
  analyze->add_option("--graph", o.graph, "Edge-list file")->required();
  analyze->add_option("--signal", o.signal, "Signal file")->required();
  analyze->add_option("--out", o.out, "Output directory");
  analyze->add_option("--seed", o.seed, "Random seed");
  AddFilterOptions(analyze, o);
  AddDecompositionOptions(analyze, o);

  auto* synthesize = app.add_subcommand("synthesize", "Separable filterbank synthesis");
  synthesize->add_option("--graph", o.graph, "Edge-list file")->required();
  synthesize->add_option("--subbands,--signal", o.subbands, "Subband file")->required();
  synthesize->add_option("--reference", o.reference, "Signal to compare against");
  synthesize->add_option("--zero-channels", o.zero_channels,
                         "Comma-separated channel labels to zero before synthesis");
  synthesize->add_option("--out", o.out, "Output directory");
  synthesize->add_option("--seed", o.seed, "Random seed");
  AddFilterOptions(synthesize, o);
  AddDecompositionOptions(synthesize, o);

  auto* verify = app.add_subcommand("verify", "Property checks on a graph");
  verify->add_option("--graph", o.graph, "Edge-list file")->required();
  verify->add_option("--seed", o.seed, "Seed of the random test signal");
  AddFilterOptions(verify, o);
  AddDecompositionOptions(verify, o);

  auto* response = app.add_subcommand("response", "Kernel and 2D-DFT response tables");
  response->add_option("--kind", o.kind, "Table kind")
      ->check(CLI::IsMember({"kernel-grid", "image-dft"}));
  response->add_option("--connectivity", o.connectivity,
                       "Image graph: rect, horizontal, vertical, diagonal");
  response->add_option("--width", o.width, "Lattice width");
  response->add_option("--height", o.height, "Lattice height");
  response->add_option("--points", o.points, "Kernel grid samples")->check(CLI::Range(2, 10000000));
  response->add_option("--out", o.out, "Output directory");
  AddFilterOptions(response, o);

  auto* fixtures = app.add_subcommand("fixtures", "Generate fixture graphs and signals");
  fixtures->add_option("--name", o.name,
                       "k2, cycle, complete, path, lattice, lattice8, planar3c, random, "
                       "random-bipartite")
      ->required();
  fixtures->add_option("--n", o.n, "Vertex count");
  fixtures->add_option("--width,-w", o.width, "Lattice width");
  fixtures->add_option("--height", o.height, "Lattice height");
  fixtures->add_option("--connectivity", o.connectivity, "Lattice stencil");
  fixtures->add_option("--seed", o.seed, "Random seed");
  fixtures->add_option("--out", o.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*decompose) return RunDecompose(o, out);
    if (*analyze) return RunAnalyze(o, out);
    if (*synthesize) return RunSynthesize(o, out);
    if (*verify) return RunVerify(o, out);
    if (*response) return RunResponse(o, out);
    if (*fixtures) return RunFixtures(o, out);
  } catch (const std::exception& e) {
    err << "graphfb: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace graphfb
