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

#ifndef GRAPHFB_DECOMPOSITION_IO_H_
#define GRAPHFB_DECOMPOSITION_IO_H_

#include <filesystem>
#include <iosfwd>

#include "graphfb/decomposition.h"
#include "graphfb/graph.h"

namespace graphfb {

// A decomposition on disk is a directory holding
//   stage_<i>.edges   edge list of E_i over all N vertices, i = 1..K
//   partition.txt     "K N" header, then N lines "v label" where label[i]
//                     is L or H for stage i + 1 ("-" when K = 0)
void SaveDecomposition(const std::filesystem::path& dir, const BipartiteDecomposition& d);
// Reads the files back; structural validity is left to CheckDecomposition.
BipartiteDecomposition LoadDecomposition(const std::filesystem::path& dir);

void WritePartitionTable(std::ostream& out, const BipartiteDecomposition& d);

}  // namespace graphfb

#endif  // GRAPHFB_DECOMPOSITION_IO_H_
