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

#ifndef GRAPHFB_COMMON_H_
#define GRAPHFB_COMMON_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphfb {

using VertexId = std::int32_t;

// A graph signal: one real sample per vertex, indexed by vertex id.
using Signal = std::vector<double>;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files or text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A structural or numerical precondition does not hold (non-bipartite host,
// size mismatch, dense limit exceeded, improper coloring, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Selects the OpenMP-parallel kernels or their serial reference versions.
enum class Execution { kParallel, kSerial };

// Upper bound on the vertex count for dense eigendecompositions.
inline constexpr std::size_t kDefaultDenseLimit = 4096;

}  // namespace graphfb

#endif  // GRAPHFB_COMMON_H_
