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

#ifndef GRAPHFB_SUBBAND_IO_H_
#define GRAPHFB_SUBBAND_IO_H_

#include <filesystem>
#include <iosfwd>

#include "graphfb/separable.h"

namespace graphfb {

// Subband file:
//   K N
//   channel <label> <count>     (every channel, in label order)
//   v coefficient               (count lines, original vertex ids)
// The label of the single channel of a zero-stage tree is written as "-".
SubbandTree ReadSubbandTree(std::istream& in);
SubbandTree LoadSubbandTree(const std::filesystem::path& path);
void WriteSubbandTree(std::ostream& out, const SubbandTree& tree);
void SaveSubbandTree(const std::filesystem::path& path, const SubbandTree& tree);

}  // namespace graphfb

#endif  // GRAPHFB_SUBBAND_IO_H_
