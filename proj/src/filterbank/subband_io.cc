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

#include "graphfb/subband_io.h"

#include <ostream>
#include <string>

#include "graphfb/graph_io.h"
#include "io/text_io.h"

namespace graphfb {

SubbandTree ReadSubbandTree(std::istream& in) {
  internal::LineReader reader(in);
  std::istringstream fields;
  if (!reader.Next(fields)) throw ParseError("empty subband file");
  long long k = -1;
  long long n = -1;
  if (!(fields >> k >> n) || k < 0 || n < 0 || k > 30) reader.Fail("expected header 'K N'");
  internal::ExpectEnd(fields, reader);
  SubbandTree tree;
  tree.dimension = static_cast<std::size_t>(k);
  tree.num_vertices = static_cast<std::size_t>(n);
  while (reader.Next(fields)) {
    std::string keyword;
    std::string label;
    long long count = -1;
    if (!(fields >> keyword >> label >> count) || keyword != "channel" || count < 0) {
      reader.Fail("expected 'channel <label> <count>'");
    }
    internal::ExpectEnd(fields, reader);
    if (label == "-") label.clear();
    if (label.size() != tree.dimension ||
        label.find_first_not_of("LH") != std::string::npos) {
      reader.Fail("channel label '" + label + "' is not over {L,H}^" + std::to_string(k));
    }
    if (tree.Find(label) != nullptr) reader.Fail("duplicate channel '" + label + "'");
    SubbandChannel channel{label, {}, {}};
    for (long long i = 0; i < count; ++i) {
      if (!reader.Next(fields)) throw ParseError("channel '" + label + "' is truncated");
      long long v = -1;
      double x = 0.0;
      if (!(fields >> v >> x)) reader.Fail("expected 'vertex coefficient'");
      internal::ExpectEnd(fields, reader);
      if (v < 0 || v >= n) reader.Fail("vertex id out of range");
      channel.vertices.push_back(static_cast<VertexId>(v));
      channel.coefficients.push_back(x);
    }
    tree.channels.push_back(std::move(channel));
  }
  if (tree.channels.size() != (std::size_t{1} << tree.dimension)) {
    throw ParseError("subband file lists " + std::to_string(tree.channels.size()) +
                     " channels, expected " + std::to_string(std::size_t{1} << tree.dimension));
  }
  return tree;
}

SubbandTree LoadSubbandTree(const std::filesystem::path& path) {
  std::ifstream in = internal::OpenForRead(path);
  return ReadSubbandTree(in);
}

void WriteSubbandTree(std::ostream& out, const SubbandTree& tree) {
  UseRoundTripPrecision(out);
  out << tree.dimension << ' ' << tree.num_vertices << '\n';
  for (const SubbandChannel& c : tree.channels) {
    out << "channel " << (c.label.empty() ? "-" : c.label) << ' ' << c.vertices.size()
        << '\n';
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      out << c.vertices[i] << ' ' << c.coefficients[i] << '\n';
    }
  }
}

void SaveSubbandTree(const std::filesystem::path& path, const SubbandTree& tree) {
  std::ofstream out = internal::OpenForWrite(path);
  WriteSubbandTree(out, tree);
}

}  // namespace graphfb
