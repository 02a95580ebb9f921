// Copyright 2026 The FairSDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRSDP_GRAPH_IO_HPP_
#define FAIRSDP_GRAPH_IO_HPP_

#include <string>
#include <vector>

#include "fairsdp/graph.hpp"

namespace fairsdp {

// Plain-text edge list.  Lines starting with '#' are comments and blank
// lines are skipped.  The first payload line is "n <node_count>"; every
// later payload line is "u v w" with 0-based node ids and a weight in
// [0, 1].  Unlisted pairs have weight 0.  A pair listed twice (in either
// orientation), a self edge, or an id outside [0, n) is an error.
Graph load_edge_list(const std::string& path);

// Writes the same format: header line, then one line per nonzero-weight
// pair with u < v, pairs sorted lexicographically.  Weights are printed
// with 17 significant digits so a load after save is bit-exact.
void save_edge_list(const Graph& g, const std::string& path);

// Label CSV with header "node,label" and one row per node; nodes 0..n-1
// must each appear exactly once, in any order.  Labels are non-negative
// integers.  The returned vector is indexed by node.
std::vector<int> load_labels(const std::string& path);

void save_labels(const std::vector<int>& labels, const std::string& path);

// Sensitive attribute CSV with header "node,group".  Values in {-1, +1}
// give the binary encoding.  Otherwise the values must be 0..m-1 and give
// the multi-level encoding with m groups.
SensitiveAttributes load_sensitive(const std::string& path);

void save_sensitive(const SensitiveAttributes& s, const std::string& path);

}  // namespace fairsdp

#endif  // FAIRSDP_GRAPH_IO_HPP_
