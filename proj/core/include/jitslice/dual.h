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

#ifndef JITSLICE_DUAL_H
#define JITSLICE_DUAL_H

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "jitslice/lattice.h"

namespace jitslice {

enum class SideBoundary : std::uint8_t { SideX1, SideX2 };

/// An endpoint (dual vertex) identified by its global cell centre, or one of
/// the two side X boundaries.
struct PairElement {
    bool is_boundary = false;
    SideBoundary side = SideBoundary::SideX1;
    Coord centre;

    static PairElement endpoint(const Coord &c) { return {false, SideBoundary::SideX1, c}; }
    static PairElement boundary(SideBoundary b) { return {true, b, {}}; }

    auto operator<=>(const PairElement &) const = default;
    std::string str() const;
};

/// Unordered pair stored with first <= second.
struct PairKey {
    PairElement first;
    PairElement second;

    PairKey() = default;
    PairKey(const PairElement &a, const PairElement &b);
    auto operator<=>(const PairKey &) const = default;
    std::string str() const;
};

/// Dual vertex id for an element: real vertex index or the side node.
int dual_node(const SliceGeometry &slice, const PairElement &e);

/// Breadth-first distances from `source`. Virtual vertices other than the
/// source are reached but never expanded, so paths do not run through Top or
/// the side boundaries.
std::vector<int> dual_bfs(const SliceGeometry &slice, int source, std::vector<int> *parent_face = nullptr);

int dual_distance(const PairElement &a, const PairElement &b, const SliceGeometry &slice);

/// Faces along a shortest dual path, ordered from `a` to `b`.
std::vector<int> path_between(const PairElement &a, const PairElement &b, const SliceGeometry &slice);

/// Faces along a shortest dual path from the endpoint to the Top node. At
/// each step the next cell keeps the lateral position of the endpoint as
/// closely as possible (X-side coordinate first, then Z-side coordinate);
/// remaining ties go to the smallest cell.
std::vector<int> path_to_top(const Coord &endpoint, const SliceGeometry &slice);

/// Where defects pushed off the top of one slice reappear in the next. For
/// every real vertex v the syndrome path_to_top(v) + path_between(v, nearest
/// side) is corrected on the non-bottom qubits, the top layer is carried into
/// the next slice and its endpoints are read off. A defect that does not
/// reappear has left through a side and maps to that side.
class TopEmergence {
   public:
    TopEmergence(const SliceGeometry &slice_t, const SliceGeometry &slice_next);

    PairElement translate(const PairElement &e) const;
    PairKey translate(const PairKey &pair) const;
    std::size_t size() const { return map_.size(); }

   private:
    std::map<Coord, PairElement> map_;
};

/// Where the endpoints of a pair joined to the top re-emerge in the next
/// slice. Boundary elements map to themselves.
PairKey translate_pair(const PairKey &pair, const SliceGeometry &slice_t, const SliceGeometry &slice_next);

}  // namespace jitslice

#endif
