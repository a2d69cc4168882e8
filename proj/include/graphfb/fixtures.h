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

#ifndef GRAPHFB_FIXTURES_H_
#define GRAPHFB_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <vector>

#include "graphfb/common.h"
#include "graphfb/graph.h"

namespace graphfb {

// Deterministic random source: portable uniform and normal draws on top of
// std::mt19937_64, whose output sequence is fixed by the standard.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, 1).
  double Uniform();
  // Uniform on (0, 2], the edge-weight range of the random fixtures.
  double Weight() { return 2.0 - 2.0 * Uniform(); }
  double Normal();
  // Uniform integer in [0, n).
  std::size_t Index(std::size_t n);
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[Index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct Point {
  double x;
  double y;
};

Graph CompleteGraph(std::size_t n);
Graph CycleGraph(std::size_t n);
Graph PathGraph(std::size_t n);

// Connected bipartite graph with the given side sizes: a random spanning
// tree across the sides plus each other cross pair with probability p.
// Weights are uniform on (0, 2] unless unit_weights is set.
Graph RandomBipartiteGraph(std::size_t num_low, std::size_t num_high, double p,
                           std::uint64_t seed, bool unit_weights = false);
// Connected graph: random spanning tree plus each other pair with
// probability p; weights uniform on (0, 2].
Graph RandomConnectedGraph(std::size_t n, double p, std::uint64_t seed);

// Connected planar 3-colorable fixture with n vertices: a jittered
// triangular lattice (3-colorable by construction) thinned by dropping
// non-spanning-tree edges at random. Candidates are redrawn until the
// greedy coloring uses exactly three colors, so the Harary decomposition
// has two stages and exactly three non-empty channels.
struct PlanarFixture {
  Graph graph;
  std::vector<Point> coordinates;  // in the unit square
};
PlanarFixture Planar3Colorable(std::size_t n, std::uint64_t seed);

// Piecewise-constant signal over coordinates, three regions:
// 1 for x < 0.4, -0.5 for x >= 0.4 and y < 0.5, 2 elsewhere.
Signal PiecewiseConstantSignal(const std::vector<Point>& coordinates);
// Lattice coordinates (col, row) scaled to the unit square.
std::vector<Point> LatticeCoordinates(std::size_t width, std::size_t height);
Signal RandomSignal(std::size_t n, std::uint64_t seed);
Signal ConstantSignal(std::size_t n, double value = 1.0);

// "v x y" lines.
void WriteCoordinates(std::ostream& out, const std::vector<Point>& coordinates);

}  // namespace graphfb

#endif  // GRAPHFB_FIXTURES_H_
