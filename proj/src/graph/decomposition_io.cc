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

#include "graphfb/decomposition_io.h"

#include <ostream>
#include <string>

#include "graphfb/graph_io.h"
#include "io/text_io.h"

namespace graphfb {
namespace {

std::filesystem::path StagePath(const std::filesystem::path& dir, std::size_t i) {
  return dir / ("stage_" + std::to_string(i + 1) + ".edges");
}

}  // namespace

void WritePartitionTable(std::ostream& out, const BipartiteDecomposition& d) {
  out << d.dimension() << ' ' << d.num_vertices << '\n';
  for (std::size_t v = 0; v < d.num_vertices; ++v) {
    const std::string label = ChannelLabelOf(d, static_cast<VertexId>(v));
    out << v << ' ' << (label.empty() ? "-" : label) << '\n';
  }
}

void SaveDecomposition(const std::filesystem::path& dir, const BipartiteDecomposition& d) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < d.dimension(); ++i) {
    SaveGraph(StagePath(dir, i), Graph(d.num_vertices, d.stages[i].edges));
  }
  std::ofstream out = internal::OpenForWrite(dir / "partition.txt");
  WritePartitionTable(out, d);
}

BipartiteDecomposition LoadDecomposition(const std::filesystem::path& dir) {
  std::ifstream in = internal::OpenForRead(dir / "partition.txt");
  internal::LineReader reader(in);
  std::istringstream fields;
  if (!reader.Next(fields)) throw ParseError("empty partition file");
  long long k = -1;
  long long n = -1;
  if (!(fields >> k >> n) || k < 0 || n < 0) reader.Fail("expected header 'K N'");
  internal::ExpectEnd(fields, reader);
  BipartiteDecomposition d;
  d.num_vertices = static_cast<std::size_t>(n);
  std::vector<std::vector<Side>> sides(static_cast<std::size_t>(k),
                                       std::vector<Side>(d.num_vertices, Side::kLow));
  std::vector<bool> seen(d.num_vertices, false);
  std::size_t count = 0;
  while (reader.Next(fields)) {
    long long v = -1;
    std::string label;
    if (!(fields >> v >> label)) reader.Fail("expected 'v label'");
    internal::ExpectEnd(fields, reader);
    if (label == "-") label.clear();
    if (v < 0 || v >= n) reader.Fail("vertex id out of range");
    if (seen[v]) reader.Fail("vertex " + std::to_string(v) + " listed twice");
    if (label.size() != sides.size() || label.find_first_not_of("LH") != std::string::npos) {
      reader.Fail("label '" + label + "' is not over {L,H}^" + std::to_string(k));
    }
    seen[v] = true;
    ++count;
    for (std::size_t i = 0; i < label.size(); ++i) {
      sides[i][v] = label[i] == 'H' ? Side::kHigh : Side::kLow;
    }
  }
  if (count != d.num_vertices) {
    throw ParseError("partition file lists " + std::to_string(count) + " vertices, expected " +
                     std::to_string(n));
  }
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const Graph stage = LoadGraph(StagePath(dir, i));
    if (stage.num_vertices() != d.num_vertices) {
      throw ParseError(StagePath(dir, i).string() + " does not span all vertices");
    }
    d.stages.push_back({Bipartition(std::move(sides[i])),
                        std::vector<Edge>(stage.edges().begin(), stage.edges().end())});
  }
  return d;
}

}  // namespace graphfb
