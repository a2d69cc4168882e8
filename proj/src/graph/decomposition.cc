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

#include "graphfb/decomposition.h"

#include <algorithm>

namespace graphfb {
namespace {

// Rank-compresses the colors of `members` to 1..k in ascending order of the
// inherited color; returns k.
int CompressColors(const std::vector<VertexId>& members, std::vector<int>& colors) {
  std::vector<int> present;
  present.reserve(members.size());
  for (VertexId v : members) present.push_back(colors[v]);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  for (VertexId v : members) {
    colors[v] = static_cast<int>(
                    std::lower_bound(present.begin(), present.end(), colors[v]) -
                    present.begin()) +
                1;
  }
  return static_cast<int>(present.size());
}

int CeilLog2(int k) {
  int stages = 0;
  while ((1 << stages) < k) ++stages;
  return stages;
}

}  // namespace

BipartiteDecomposition HararyDecompose(const Graph& g, const Coloring& coloring) {
  if (!IsProperColoring(g, coloring)) {
    throw PreconditionError("coloring is not proper for this graph");
  }
  const std::size_t n = g.num_vertices();
  BipartiteDecomposition out;
  out.num_vertices = n;
  const int num_stages = CeilLog2(std::max(coloring.num_colors, 1));

  std::vector<int> colors = coloring.colors;
  std::vector<int> part(n, 0);
  std::vector<std::vector<VertexId>> parts(1);
  for (std::size_t v = 0; v < n; ++v) parts[0].push_back(static_cast<VertexId>(v));
  std::vector<int> part_colors = {coloring.num_colors};
  std::vector<bool> assigned(g.num_edges(), false);

  for (int stage = 0; stage < num_stages; ++stage) {
    std::vector<Side> sides(n, Side::kLow);
    std::vector<std::vector<VertexId>> next_parts;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const int k = part_colors[p];
      std::vector<VertexId> low, high;
      for (VertexId v : parts[p]) {
        if (k > 1 && colors[v] > k / 2) {
          sides[v] = Side::kHigh;
          high.push_back(v);
        } else {
          low.push_back(v);
        }
      }
      if (!low.empty()) next_parts.push_back(std::move(low));
      if (!high.empty()) next_parts.push_back(std::move(high));
    }

    DecompositionStage st;
    st.partition = Bipartition(sides);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edges()[i];
      if (!assigned[i] && sides[e.u] != sides[e.v]) {
        assigned[i] = true;
        st.edges.push_back(e);
      }
    }
    out.stages.push_back(std::move(st));

    parts = std::move(next_parts);
    part_colors.clear();
    for (const auto& members : parts) part_colors.push_back(CompressColors(members, colors));
  }
  return out;
}

DecompositionCheck CheckDecomposition(const Graph& g,
                                      const BipartiteDecomposition& d) {
  DecompositionCheck check;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) check.message += (check.message.empty() ? "" : "; ") + why;
    flag = false;
  };
  if (d.num_vertices != g.num_vertices()) {
    fail(check.covers_vertices, "vertex count mismatch");
    return check;
  }
  std::vector<int> owner(g.num_edges(), -1);
  for (std::size_t s = 0; s < d.stages.size(); ++s) {
    const auto& st = d.stages[s];
    if (st.partition.num_vertices() != g.num_vertices()) {
      fail(check.covers_vertices,
           "stage " + std::to_string(s + 1) + " partition does not cover V");
      continue;
    }
    for (const Edge& e : st.edges) {
      const auto idx = g.edge_index(e.u, e.v);
      if (!idx) {
        fail(check.covers_edges, "stage " + std::to_string(s + 1) +
                                     " holds an edge not in the graph");
        continue;
      }
      if (owner[*idx] >= 0) {
        fail(check.edge_disjoint, "edge (" + std::to_string(e.u) + ", " +
                                      std::to_string(e.v) +
                                      ") assigned to two stages");
      }
      owner[*idx] = static_cast<int>(s);
      if (st.partition.side(e.u) == st.partition.side(e.v)) {
        fail(check.stage_bipartite,
             "stage " + std::to_string(s + 1) + " edge (" + std::to_string(e.u) +
                 ", " + std::to_string(e.v) + ") does not cross L/H");
      }
    }
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (owner[i] < 0) {
      fail(check.covers_edges, "edge (" + std::to_string(g.edges()[i].u) + ", " +
                                   std::to_string(g.edges()[i].v) +
                                   ") is not assigned");
    }
  }
  if (!check.covers_vertices) return check;
  // After stage s, no edge owned by a later stage (or unassigned) may cross
  // the stage-s bipartition.
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    const int o = owner[i] < 0 ? static_cast<int>(d.stages.size()) : owner[i];
    for (int s = 0; s < o; ++s) {
      const auto& part = d.stages[s].partition;
      if (part.side(e.u) != part.side(e.v)) {
        fail(check.cross_edges_exhausted,
             "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                 ") crosses stage " + std::to_string(s + 1) +
                 " but was left for a later stage");
        break;
      }
    }
  }
  return check;
}

std::string ChannelLabelOf(const BipartiteDecomposition& d, VertexId v) {
  std::string label;
  label.reserve(d.stages.size());
  for (const auto& st : d.stages) label.push_back(st.partition.is_high(v) ? 'H' : 'L');
  return label;
}

std::vector<std::string> AllChannelLabels(std::size_t dimension) {
  std::vector<std::string> labels;
  const std::size_t count = std::size_t{1} << dimension;
  labels.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::string label(dimension, 'L');
    for (std::size_t i = 0; i < dimension; ++i) {
      if (code & (std::size_t{1} << (dimension - 1 - i))) label[i] = 'H';
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

}  // namespace graphfb
