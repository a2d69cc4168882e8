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

#ifndef GRAPHFB_LATTICE_H_
#define GRAPHFB_LATTICE_H_

#include <cstddef>
#include <string_view>

#include "graphfb/coloring.h"
#include "graphfb/graph.h"

namespace graphfb {

// Neighbor stencils for image lattices.
enum class Connectivity {
  kEight,       // rect + diagonal
  kRect,        // left/right and up/down (4-connected)
  kHorizontal,  // left/right only
  kVertical,    // up/down only
  kDiagonal,    // the four diagonal neighbors
};

Connectivity ParseConnectivity(std::string_view name);
std::string_view ConnectivityName(Connectivity c);

// Unit-weight width x height lattice, vertex id = row * width + col.
// Throws PreconditionError unless width, height >= 2.
Graph ImageGraph(std::size_t width, std::size_t height, Connectivity connectivity);

// Four-coloring of the 8-connected lattice whose ascending split first
// separates the checkerboard classes (stage 1 = rect links) and then the row
// parity within each class (stage 2 = diagonal links).
Coloring LatticeColoring(std::size_t width, std::size_t height);

}  // namespace graphfb

#endif  // GRAPHFB_LATTICE_H_
