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

#include "graphfb/lattice.h"

#include <string>
#include <vector>

namespace graphfb {

Connectivity ParseConnectivity(std::string_view name) {
  if (name == "eight") return Connectivity::kEight;
  if (name == "rect") return Connectivity::kRect;
  if (name == "horizontal") return Connectivity::kHorizontal;
  if (name == "vertical") return Connectivity::kVertical;
  if (name == "diagonal") return Connectivity::kDiagonal;
  throw ParseError("unknown lattice connectivity '" + std::string(name) + "'");
}

std::string_view ConnectivityName(Connectivity c) {
  switch (c) {
    case Connectivity::kEight: return "eight";
    case Connectivity::kRect: return "rect";
    case Connectivity::kHorizontal: return "horizontal";
    case Connectivity::kVertical: return "vertical";
    case Connectivity::kDiagonal: return "diagonal";
  }
  return "unknown";
}

Graph ImageGraph(std::size_t width, std::size_t height, Connectivity connectivity) {
  if (width < 2 || height < 2) {
    throw PreconditionError("image lattice needs width, height >= 2");
  }
  const bool horizontal = connectivity == Connectivity::kEight ||
                          connectivity == Connectivity::kRect ||
                          connectivity == Connectivity::kHorizontal;
  const bool vertical = connectivity == Connectivity::kEight ||
                        connectivity == Connectivity::kRect ||
                        connectivity == Connectivity::kVertical;
  const bool diagonal = connectivity == Connectivity::kEight ||
                        connectivity == Connectivity::kDiagonal;
  auto id = [width](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * width + c);
  };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (horizontal && c + 1 < width) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (vertical && r + 1 < height) edges.push_back({id(r, c), id(r + 1, c), 1.0});
      if (diagonal && r + 1 < height) {
        if (c + 1 < width) edges.push_back({id(r, c), id(r + 1, c + 1), 1.0});
        if (c > 0) edges.push_back({id(r, c), id(r + 1, c - 1), 1.0});
      }
    }
  }
  return Graph(width * height, std::move(edges));
}

Coloring LatticeColoring(std::size_t width, std::size_t height) {
  Coloring c;
  c.colors.resize(width * height);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t col = 0; col < width; ++col) {
      const int parity = static_cast<int>((r + col) % 2);
      c.colors[r * width + col] = 1 + 2 * parity + static_cast<int>(r % 2);
    }
  }
  c.num_colors = 4;
  return c;
}

}  // namespace graphfb
