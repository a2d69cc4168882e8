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

#include "graphfb/graph_io.h"

#include "io/text_io.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace graphfb {
namespace {

using internal::ExpectEnd;
using internal::LineReader;
using internal::OpenForRead;
using internal::OpenForWrite;


// Reads N lines "v value" into a per-vertex table, each vertex exactly once.
template <typename T>
std::vector<T> ReadVertexTable(std::istream& in, std::size_t n, const char* what) {
  LineReader reader(in);
  std::vector<T> values(n);
  std::vector<bool> seen(n, false);
  std::istringstream fields;
  std::size_t count = 0;
  while (reader.Next(fields)) {
    long long v = -1;
    T value{};
    if (!(fields >> v >> value)) reader.Fail(std::string("expected 'v ") + what + "'");
    ExpectEnd(fields, reader);
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      reader.Fail("vertex id " + std::to_string(v) + " out of range");
    }
    if (seen[v]) reader.Fail("vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    values[v] = value;
    ++count;
  }
  if (count != n) {
    throw ParseError(std::string(what) + " file lists " + std::to_string(count) +
                     " of " + std::to_string(n) + " vertices");
  }
  return values;
}

}  // namespace

void UseRoundTripPrecision(std::ostream& out) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
}

Graph ReadGraph(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.Next(fields)) throw ParseError("empty graph file");
  long long n = -1, m = -1;
  if (!(fields >> n >> m) || n < 0 || m < 0) reader.Fail("expected header 'N M'");
  ExpectEnd(fields, reader);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (reader.Next(fields)) {
    long long u = -1, v = -1;
    double w = 0.0;
    if (!(fields >> u >> v >> w)) reader.Fail("expected 'u v w'");
    ExpectEnd(fields, reader);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      reader.Fail("vertex id out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) reader.Fail("self-loop at vertex " + std::to_string(u));
    if (!(w > 0.0)) reader.Fail("edge weight must be positive");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }
  if (edges.size() != static_cast<std::size_t>(m)) {
    throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Graph LoadGraph(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ReadGraph(in);
}

void WriteGraph(std::ostream& out, const Graph& g) {
  UseRoundTripPrecision(out);
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

void SaveGraph(const std::filesystem::path& path, const Graph& g) {
  auto out = OpenForWrite(path);
  WriteGraph(out, g);
}

Coloring ReadColoring(std::istream& in, std::size_t num_vertices) {
  Coloring c;
  c.colors = ReadVertexTable<int>(in, num_vertices, "color");
  for (int col : c.colors) {
    if (col < 1) throw ParseError("colors must be >= 1");
    c.num_colors = std::max(c.num_colors, col);
  }
  return c;
}

Coloring LoadColoring(const std::filesystem::path& path, std::size_t num_vertices) {
  auto in = OpenForRead(path);
  return ReadColoring(in, num_vertices);
}

void WriteColoring(std::ostream& out, const Coloring& c) {
  for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
}

void SaveColoring(const std::filesystem::path& path, const Coloring& c) {
  auto out = OpenForWrite(path);
  WriteColoring(out, c);
}

Signal ReadSignal(std::istream& in, std::size_t num_vertices) {
  return ReadVertexTable<double>(in, num_vertices, "value");
}

Signal LoadSignal(const std::filesystem::path& path, std::size_t num_vertices) {
  auto in = OpenForRead(path);
  return ReadSignal(in, num_vertices);
}

void WriteSignal(std::ostream& out, std::span<const double> signal) {
  UseRoundTripPrecision(out);
  for (std::size_t v = 0; v < signal.size(); ++v) out << v << ' ' << signal[v] << '\n';
}

void SaveSignal(const std::filesystem::path& path, std::span<const double> signal) {
  auto out = OpenForWrite(path);
  WriteSignal(out, signal);
}

}  // namespace graphfb
