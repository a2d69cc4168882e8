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

#ifndef GRAPHFB_COLORING_H_
#define GRAPHFB_COLORING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "graphfb/graph.h"

namespace graphfb {

// Vertex coloring with colors 1..num_colors.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;
};

enum class Side : std::uint8_t { kLow, kHigh };

// Two-set partition (L, H) of the full vertex set of a host graph.
class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<Side> sides) : sides_(std::move(sides)) {}

  std::size_t num_vertices() const { return sides_.size(); }
  Side side(VertexId v) const { return sides_[v]; }
  bool is_high(VertexId v) const { return sides_[v] == Side::kHigh; }
  // Downsampling sign of the highpass channel: +1 on H, -1 on L.
  int beta(VertexId v) const { return is_high(v) ? 1 : -1; }
  std::span<const Side> sides() const { return sides_; }

  std::vector<VertexId> low() const;
  std::vector<VertexId> high() const;

  // True when every edge of g joins L to H.
  bool Separates(const Graph& g) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<Side> sides_;
};

// Greedy coloring visiting vertices by descending weighted degree, ties by
// ascending id; each vertex takes the smallest color unused by its colored
// neighbors. Proper, deterministic, not necessarily minimal.
Coloring GreedyColoring(const Graph& g);

// Proper, colors within 1..num_colors and all colors used.
bool IsProperColoring(const Graph& g, const Coloring& c);

// BFS 2-coloring per connected component; the first vertex of each component
// goes to L, so isolated vertices land in L. Empty when an odd cycle exists.
std::optional<Bipartition> IsBipartite(const Graph& g);

}  // namespace graphfb

#endif  // GRAPHFB_COLORING_H_
