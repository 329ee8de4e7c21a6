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

#ifndef JITSLICE_VALIDATE_H
#define JITSLICE_VALIDATE_H

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "jitslice/css.h"
#include "jitslice/lattice.h"

namespace jitslice {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    CodeLabel code = CodeLabel::A;
    int L = 0;
    int timestep = 0;
    std::vector<ValidationCheck> checks;

    bool passed() const;
    const ValidationCheck *find(const std::string &name) const;
    std::string summary() const;
};

CssCode slice_css(const SliceGeometry &slice);
CssCode layer_css(const LayerGeometry &layer);

/// Slice logical weights. Z: exact shortest odd cycle. X: exact coset
/// enumeration at L = 3; for larger L an s-t min cut between the two Z sides,
/// reported exact when the cut is itself a logical and as a flow lower bound
/// otherwise.
LogicalWeight min_logical_weight(const SliceGeometry &slice, PauliType type);
LogicalWeight min_logical_weight(const LayerGeometry &layer, PauliType type);

/// Checks every slice invariant. `layers_from_slice` recomputes the boundary
/// layers with build_layer for the restriction checks.
ValidationReport validate_slice(const SliceGeometry &slice);

/// Variant for hand-modified geometries (fixtures) that skips the checks that
/// need a consistent dual graph.
ValidationReport validate_stabilisers(const SliceGeometry &slice);

using SiteTriple = std::tuple<Coord, Coord, Coord>;

/// Sites shared by the three slices at one timestep. Raises if the pairwise
/// intersections disagree with the triple set inside the common region.
std::set<SiteTriple> overlap_triples(int L, int timestep);

/// Sites of the cube where all three codes overlap over the whole sweep.
std::set<Coord> cubic_overlap_sites(int L);

/// Number of timesteps after which no slice meets the cubic overlap.
int sweep_length(int L);

}  // namespace jitslice

#endif
