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

#ifndef JITSLICE_CSS_H
#define JITSLICE_CSS_H

#include <optional>
#include <string>
#include <vector>

#include "jitslice/coord.h"
#include "jitslice/gf2.h"

namespace jitslice {

struct CssCode {
    std::size_t n = 0;
    std::vector<std::vector<int>> z_stabs;
    std::vector<std::vector<int>> x_stabs;
};

std::vector<Bits> stabiliser_rows(const CssCode &code, PauliType type);

int logical_qubit_count(const CssCode &code);

/// Number of (X stabiliser, Z stabiliser) pairs with odd overlap.
std::size_t anticommuting_pairs(const CssCode &code);

/// Some logical operator of the given type, i.e. an operator commuting with
/// all stabilisers of the opposite type and outside the span of its own type.
std::optional<Bits> find_logical(const CssCode &code, PauliType type);

enum class WeightMethod { Enumeration, ShortestOddCycle, MinCut, FlowLowerBound };

const char *weight_method_name(WeightMethod m);

struct LogicalWeight {
    std::size_t weight = 0;
    WeightMethod method = WeightMethod::Enumeration;
    bool exact = true;
    std::vector<int> representative;
};

/// Minimum weight of a `type` logical when every qubit lies in at most two
/// stabilisers of the opposite type. Operators commuting with those
/// stabilisers are then even subgraphs of a graph whose edges are qubits, and
/// the minimum is a shortest odd cycle in the double cover defined by a
/// conjugate logical.
std::optional<LogicalWeight> graph_min_logical(const CssCode &code, PauliType type);

/// Exact minimum by enumerating the stabiliser coset of a representative.
LogicalWeight enumerated_min_logical(const CssCode &code, PauliType type);

/// Picks the graph method when applicable, otherwise enumeration.
LogicalWeight min_weight_logical(const CssCode &code, PauliType type);

/// Minimum s-t edge cut in an undirected multigraph with unit capacities.
/// Returns the cut edges; `paths` receives an edge-disjoint family of s-t
/// paths of the same size.
std::vector<int> min_edge_cut(int num_nodes, const std::vector<std::pair<int, int>> &edges, int s, int t,
                              std::vector<std::vector<int>> *paths);

}  // namespace jitslice

#endif
