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

#ifndef GRAPHFB_GRAPH_IO_H_
#define GRAPHFB_GRAPH_IO_H_

#include <filesystem>
#include <iosfwd>
#include <span>

#include "graphfb/coloring.h"
#include "graphfb/common.h"
#include "graphfb/graph.h"

namespace graphfb {

// Edge-list text format:
//   N M
//   u v w      (M lines, 0-based ids, decimal weight)
// Lines starting with '#' and blank lines are ignored. Duplicate edges,
// self-loops, non-positive weights and out-of-range ids are errors.
Graph ReadGraph(std::istream& in);
Graph LoadGraph(const std::filesystem::path& path);
void WriteGraph(std::ostream& out, const Graph& g);
void SaveGraph(const std::filesystem::path& path, const Graph& g);

// Coloring file: N lines "v color" (every vertex once).
Coloring ReadColoring(std::istream& in, std::size_t num_vertices);
Coloring LoadColoring(const std::filesystem::path& path, std::size_t num_vertices);
void WriteColoring(std::ostream& out, const Coloring& c);
void SaveColoring(const std::filesystem::path& path, const Coloring& c);

// Signal file: N lines "v value" (every vertex exactly once, any order).
Signal ReadSignal(std::istream& in, std::size_t num_vertices);
Signal LoadSignal(const std::filesystem::path& path, std::size_t num_vertices);
void WriteSignal(std::ostream& out, std::span<const double> signal);
void SaveSignal(const std::filesystem::path& path, std::span<const double> signal);

// Sets 17 significant digits so decimal text reproduces binary doubles.
void UseRoundTripPrecision(std::ostream& out);

}  // namespace graphfb

#endif  // GRAPHFB_GRAPH_IO_H_
