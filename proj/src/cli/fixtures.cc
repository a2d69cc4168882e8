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

#include "graphfb/fixtures.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

#include "graphfb/coloring.h"
#include "graphfb/graph_io.h"

namespace graphfb {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Keeps a random spanning forest of the candidate edges and each remaining
// candidate with probability keep.
std::vector<Edge> Thin(std::size_t n, std::vector<Edge> candidates, double keep,
                       Random& rng) {
  rng.Shuffle(candidates);
  DisjointSets sets(n);
  std::vector<Edge> tree;
  std::vector<Edge> rest;
  for (const Edge& e : candidates) {
    (sets.Union(e.u, e.v) ? tree : rest).push_back(e);
  }
  for (const Edge& e : rest) {
    if (rng.Uniform() < keep) tree.push_back(e);
  }
  return tree;
}

}  // namespace

double Random::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Random::Normal() {
  // Box-Muller; 1 - Uniform() lies in (0, 1].
  const double r = std::sqrt(-2.0 * std::log(1.0 - Uniform()));
  return r * std::cos(2.0 * std::numbers::pi * Uniform());
}

std::size_t Random::Index(std::size_t n) {
  return static_cast<std::size_t>(Uniform() * static_cast<double>(n)) % n;
}

Graph CompleteGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph CycleGraph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), 1.0});
  }
  return Graph(n, std::move(edges));
}

Graph PathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), 1.0});
  }
  return Graph(n, std::move(edges));
}

Graph RandomBipartiteGraph(std::size_t num_low, std::size_t num_high, double p,
                           std::uint64_t seed, bool unit_weights) {
  if (num_low == 0 || num_high == 0) {
    throw PreconditionError("both sides of a random bipartite graph need vertices");
  }
  Random rng(seed);
  const std::size_t n = num_low + num_high;
  std::vector<Edge> candidates;
  for (std::size_t a = 0; a < num_low; ++a) {
    for (std::size_t b = num_low; b < n; ++b) {
      candidates.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), 1.0});
    }
  }
  std::vector<Edge> edges = Thin(n, std::move(candidates), p, rng);
  if (!unit_weights) {
    for (Edge& e : edges) e.weight = rng.Weight();
  }
  return Graph(n, std::move(edges));
}

Graph RandomConnectedGraph(std::size_t n, double p, std::uint64_t seed) {
  Random rng(seed);
  std::vector<Edge> candidates;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      candidates.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), 1.0});
    }
  }
  std::vector<Edge> edges = Thin(n, std::move(candidates), p, rng);
  for (Edge& e : edges) e.weight = rng.Weight();
  return Graph(n, std::move(edges));
}

PlanarFixture Planar3Colorable(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("planar fixture needs at least 3 vertices");
  const std::size_t width =
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t height = (n + width - 1) / width;
  Random rng(seed);
  // Keeping 15% of the non-tree links gives an average degree near 2.5, a
  // sparse road-network-like graph on which greedy coloring usually finds
  // three colors.
  constexpr double kPlanarKeep = 0.15;
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Triangular lattice: (r, c) joins (r, c+1), (r+1, c) and (r+1, c-1).
    // Color (c + 2r) mod 3 differs across each of these links.
    std::vector<Edge> candidates;
    auto id = [&](std::size_t r, std::size_t c) { return r * width + c; };
    for (std::size_t r = 0; r < height; ++r) {
      for (std::size_t c = 0; c < width; ++c) {
        const std::size_t v = id(r, c);
        if (v >= n) continue;
        auto link = [&](std::size_t u) {
          if (u < n) {
            candidates.push_back({static_cast<VertexId>(v), static_cast<VertexId>(u), 1.0});
          }
        };
        if (c + 1 < width) link(id(r, c + 1));
        if (r + 1 < height) {
          link(id(r + 1, c));
          if (c > 0) link(id(r + 1, c - 1));
        }
      }
    }
    std::vector<Edge> edges = Thin(n, std::move(candidates), kPlanarKeep, rng);
    Graph g(n, std::move(edges));
    if (ConnectedComponents(g) != std::vector<int>(n, 0) || GreedyColoring(g).num_colors != 3) {
      continue;
    }
    PlanarFixture out{std::move(g), {}};
    // Shear row r by r/2 cells so the lattice links have similar lengths,
    // jitter, and scale into the unit square.
    const double x_span = static_cast<double>(width) + 0.5 * static_cast<double>(height);
    const double y_span = static_cast<double>(height);
    for (std::size_t v = 0; v < n; ++v) {
      const double r = static_cast<double>(v / width);
      const double c = static_cast<double>(v % width);
      const double x = (c + 0.5 * r + 0.3 * rng.Uniform()) / x_span;
      const double y = (r + 0.3 * rng.Uniform()) / y_span;
      out.coordinates.push_back({x, y});
    }
    return out;
  }
  throw Error("could not draw a planar fixture with a greedy 3-coloring");
}

Signal PiecewiseConstantSignal(const std::vector<Point>& coordinates) {
  Signal f;
  f.reserve(coordinates.size());
  for (const Point& p : coordinates) {
    f.push_back(p.x < 0.4 ? 1.0 : (p.y < 0.5 ? -0.5 : 2.0));
  }
  return f;
}

std::vector<Point> LatticeCoordinates(std::size_t width, std::size_t height) {
  std::vector<Point> out;
  const double scale = 1.0 / static_cast<double>(std::max(width, height));
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      out.push_back({(static_cast<double>(c) + 0.5) * scale,
                     (static_cast<double>(r) + 0.5) * scale});
    }
  }
  return out;
}

Signal RandomSignal(std::size_t n, std::uint64_t seed) {
  Random rng(seed);
  Signal f(n);
  for (double& x : f) x = rng.Normal();
  return f;
}

Signal ConstantSignal(std::size_t n, double value) { return Signal(n, value); }

void WriteCoordinates(std::ostream& out, const std::vector<Point>& coordinates) {
  UseRoundTripPrecision(out);
  for (std::size_t v = 0; v < coordinates.size(); ++v) {
    out << v << ' ' << coordinates[v].x << ' ' << coordinates[v].y << '\n';
  }
}

}  // namespace graphfb
