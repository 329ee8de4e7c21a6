// Copyright 2026 The jitslice Authors
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

#ifndef JITSLICE_BLOSSOM_H
#define JITSLICE_BLOSSOM_H

#include <cstdint>
#include <vector>

namespace jitslice {

struct WeightedEdge {
    int u;
    int v;
    std::int64_t weight;
};

/// Maximum-weight matching in a general graph by Edmonds' blossom algorithm
/// with dual variables, O(n^3). With `max_cardinality` the result is a
/// maximum-weight matching among maximum-cardinality matchings. Returns
/// mate[v] (or -1).
std::vector<int> max_weight_matching(int num_nodes, const std::vector<WeightedEdge> &edges, bool max_cardinality);

/// Minimum-weight perfect matching on a complete graph given by a symmetric
/// weight matrix (n even). Returns mate[v].
std::vector<int> min_weight_perfect_matching(const std::vector<std::vector<std::int64_t>> &weights);

}  // namespace jitslice

#endif
