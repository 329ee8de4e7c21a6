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

#ifndef JITSLICE_LATTICE_H
#define JITSLICE_LATTICE_H

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "jitslice/coord.h"

namespace jitslice {

/// Lateral extent of a code: a Z-type pair of sides bounding one coordinate
/// axis and an X-type pair of sides bounding the linear functional
/// `x_normal . p`. Top and bottom are the kagome planes of the slab and are X
/// type as well.
struct LateralRegion {
    int z_axis = 0;
    int z_lo = 0;
    int z_hi = 0;
    Coord x_normal;
    int x_lo = 0;
    int x_hi = 0;
};

LateralRegion lateral_region(CodeLabel code, int L);

enum Violation : std::uint8_t {
    kBelow = 1,
    kAbove = 2,
    kZLo = 4,
    kZHi = 8,
    kXLo = 16,
    kXHi = 32,
};
constexpr std::uint8_t kXTypeViolations = kBelow | kAbove | kXLo | kXHi;
constexpr std::uint8_t kZTypeViolations = kZLo | kZHi;

/// Region of the global frame occupied by a slice (or a single layer).
struct SlabRegion {
    LateralRegion lateral;
    int plane_lo = 0;
    int plane_hi = 0;

    std::uint8_t violations(const Coord &p) const;
    bool contains(const Coord &p) const { return p.odd_count() == 1 && violations(p) == 0; }
};

/// Label implied by the union of violated constraints of a truncated
/// generator's missing vertices.
Boundary label_for_violations(std::uint8_t bits);

enum class CellKind : std::uint8_t { Cube, Octahedron };

inline CellKind cell_kind(const Coord &centre) { return centre.odd_count() == 3 ? CellKind::Cube : CellKind::Octahedron; }

/// Full (untruncated) vertex set of a cuboctahedron or octahedron cell.
std::vector<Coord> cell_vertices(const Coord &centre);

struct ZFace {
    std::vector<int> qubits;
    Boundary label = Boundary::Bulk;
    bool bottom = false;
    /// The two cells of the lattice separated by this face.
    std::array<Coord, 2> cells;
};

struct XCell {
    std::vector<int> qubits;
    Boundary label = Boundary::Bulk;
    Coord centre;
};

/// Cells of the Z-face complex with the faces as edges. Real vertices come
/// first, ordered by centre coordinate; three virtual vertices follow.
struct DualGraph {
    struct Incidence {
        int neighbour;
        int face;
    };

    int num_real = 0;
    std::vector<Coord> centre;  // real vertices only
    std::vector<bool> bottom_adjacent;
    std::vector<std::vector<Incidence>> adjacency;  // real and virtual vertices
    std::vector<std::array<int, 2>> face_ends;      // {-1,-1} for bottom faces
    std::unordered_map<Coord, int, CoordHash> index_of;

    int top() const { return num_real; }
    int side_x1() const { return num_real + 1; }
    int side_x2() const { return num_real + 2; }
    int num_nodes() const { return num_real + 3; }
    bool is_virtual(int v) const { return v >= num_real; }
    int find(const Coord &c) const;
};

struct SliceGeometry {
    CodeLabel code = CodeLabel::A;
    int L = 3;
    int timestep = 0;
    int base_plane = 0;
    SlabRegion region;

    std::vector<Coord> qubits;  // sorted by coordinate
    std::vector<int> layer;     // 0 bottom, 1 middle, 2 top
    std::vector<ZFace> zfaces;
    std::vector<XCell> xcells;
    DualGraph dual;

    /// Qubits off the bottom layer, which receive fresh noise and corrections.
    std::vector<int> fresh_qubits;
    /// Faces measured in this timestep (all faces not tagged bottom).
    std::vector<int> new_faces;
    /// Per qubit, the indices of the zfaces containing it.
    std::vector<std::vector<int>> faces_of_qubit;
    /// Per qubit, its two lattice X cells as xcell indices; cells dropped at a
    /// Z side are -1 (SideZ1) or -2 (SideZ2).
    std::vector<std::array<int, 2>> xcells_of_qubit;

    std::unordered_map<Coord, int, CoordHash> qubit_index;

    int find_qubit(const Coord &c) const;
    std::size_t num_qubits() const { return qubits.size(); }
    std::size_t num_faces() const { return zfaces.size(); }
    std::vector<int> layer_qubits(int which) const;
    int diameter_bound() const;
};

struct LayerGeometry {
    CodeLabel code = CodeLabel::A;
    int L = 3;
    int position = 0;
    int plane = 0;
    std::vector<Coord> qubits;
    std::vector<std::vector<int>> zfaces;
    std::vector<std::vector<int>> xfaces;
    std::vector<Boundary> zface_labels;
    std::vector<Boundary> xface_labels;
    /// Boundary type of the four lateral sides in the order SideX1, SideX2,
    /// SideZ1, SideZ2.
    std::array<PauliType, 4> side_types = {PauliType::X, PauliType::X, PauliType::Z, PauliType::Z};
    std::vector<int> logical_x;
    std::vector<int> logical_z;
    std::unordered_map<Coord, int, CoordHash> qubit_index;

    int find_qubit(const Coord &c) const;
};

std::shared_ptr<const SliceGeometry> build_slice(CodeLabel code, int L, int timestep);
std::shared_ptr<const LayerGeometry> build_layer(CodeLabel code, int L, int position);

/// Canonical plain-text listing: one record per line, lines sorted bytewise.
///   Q x y z layer
///   Z tag label n x,y,z ...
///   X label n x,y,z ...
std::string golden_listing(const SliceGeometry &slice);

}  // namespace jitslice

#endif
