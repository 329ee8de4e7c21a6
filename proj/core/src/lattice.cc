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

#include "jitslice/lattice.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jitslice/css.h"

namespace jitslice {

std::string Coord::str() const {
    std::ostringstream out;
    out << x << ',' << y << ',' << z;
    return out.str();
}

std::ostream &operator<<(std::ostream &out, const Coord &c) { return out << '(' << c.x << ',' << c.y << ',' << c.z << ')'; }

char code_char(CodeLabel code) {
    switch (code) {
        case CodeLabel::A:
            return 'A';
        case CodeLabel::B:
            return 'B';
        default:
            return 'C';
    }
}

CodeLabel parse_code(const std::string &text) {
    if (text == "A" || text == "a") {
        return CodeLabel::A;
    }
    if (text == "B" || text == "b") {
        return CodeLabel::B;
    }
    if (text == "C" || text == "c") {
        return CodeLabel::C;
    }
    throw std::invalid_argument("unknown code label '" + text + "' (expected A, B or C)");
}

const char *boundary_name(Boundary b) {
    switch (b) {
        case Boundary::Bulk:
            return "Bulk";
        case Boundary::Top:
            return "Top";
        case Boundary::Bottom:
            return "Bottom";
        case Boundary::SideX1:
            return "SideX1";
        case Boundary::SideX2:
            return "SideX2";
        case Boundary::SideZ1:
            return "SideZ1";
        default:
            return "SideZ2";
    }
}

void check_distance(int L) {
    if (L < 3 || L % 2 == 0) {
        throw std::invalid_argument("distance must be an odd integer >= 3, got " + std::to_string(L));
    }
}

namespace {

/// Largest u <= v with u = 1 (mod 4).
int align_one_mod_four(int v) { return v - floor_mod(v - 1, 4); }

}  // namespace

LateralRegion lateral_region(CodeLabel code, int L) {
    check_distance(L);
    LateralRegion r;
    int zspan = 2 * (L - 1);
    int xspan = 4 * (L - 1);
    switch (code) {
        case CodeLabel::A:
            r.z_axis = 0;
            r.z_lo = 1;
            r.x_normal = {1, -1, 1};
            r.x_lo = align_one_mod_four(2 - L);
            break;
        case CodeLabel::B:
            r.z_axis = 1;
            r.z_lo = 0;
            r.x_normal = {1, 1, -1};
            r.x_lo = align_one_mod_four(2 - L);
            break;
        case CodeLabel::C:
            r.z_axis = 2;
            r.z_lo = 0;
            r.x_normal = {-1, 1, 1};
            r.x_lo = align_one_mod_four(-L);
            break;
    }
    r.z_hi = r.z_lo + zspan;
    r.x_hi = r.x_lo + xspan;
    return r;
}

std::uint8_t SlabRegion::violations(const Coord &p) const {
    std::uint8_t bits = 0;
    int s = p.sum();
    if (s < plane_lo) {
        bits |= kBelow;
    }
    if (s > plane_hi) {
        bits |= kAbove;
    }
    int a = p[lateral.z_axis];
    if (a < lateral.z_lo) {
        bits |= kZLo;
    }
    if (a > lateral.z_hi) {
        bits |= kZHi;
    }
    int g = lateral.x_normal.dot(p);
    if (g < lateral.x_lo) {
        bits |= kXLo;
    }
    if (g > lateral.x_hi) {
        bits |= kXHi;
    }
    return bits;
}

Boundary label_for_violations(std::uint8_t bits) {
    if (bits & kXLo) {
        return Boundary::SideX1;
    }
    if (bits & kXHi) {
        return Boundary::SideX2;
    }
    if (bits & kZLo) {
        return Boundary::SideZ1;
    }
    if (bits & kZHi) {
        return Boundary::SideZ2;
    }
    if (bits & kAbove) {
        return Boundary::Top;
    }
    if (bits & kBelow) {
        return Boundary::Bottom;
    }
    return Boundary::Bulk;
}

std::vector<Coord> cell_vertices(const Coord &centre) {
    std::vector<Coord> out;
    if (centre.odd_count() == 3) {
        for (int i = 0; i < 3; i++) {
            for (int j = i + 1; j < 3; j++) {
                for (int si : {-1, 1}) {
                    for (int sj : {-1, 1}) {
                        out.push_back(centre + Coord::unit(i, si) + Coord::unit(j, sj));
                    }
                }
            }
        }
    } else {
        for (int i = 0; i < 3; i++) {
            for (int s : {-1, 1}) {
                out.push_back(centre + Coord::unit(i, s));
            }
        }
    }
    return out;
}

int DualGraph::find(const Coord &c) const {
    auto it = index_of.find(c);
    return it == index_of.end() ? -1 : it->second;
}

int SliceGeometry::find_qubit(const Coord &c) const {
    auto it = qubit_index.find(c);
    return it == qubit_index.end() ? -1 : it->second;
}

int LayerGeometry::find_qubit(const Coord &c) const {
    auto it = qubit_index.find(c);
    return it == qubit_index.end() ? -1 : it->second;
}

std::vector<int> SliceGeometry::layer_qubits(int which) const {
    std::vector<int> out;
    for (std::size_t q = 0; q < qubits.size(); q++) {
        if (layer[q] == which) {
            out.push_back(static_cast<int>(q));
        }
    }
    return out;
}

int SliceGeometry::diameter_bound() const { return 8 * L + 8; }

namespace {

enum class GenKind : std::uint8_t { Square, Triangle, Octahedron, Cuboctahedron, Hexagon };

/// A stabiliser generator of the infinite lattice. `a` is the centre (or the
/// octahedron vertex for triangles) and `s` the sign vector of a triangle.
struct GenKey {
    GenKind kind;
    Coord a;
    Coord s;
    auto operator<=>(const GenKey &) const = default;
};

std::vector<Coord> generator_vertices(const GenKey &g) {
    std::vector<Coord> out;
    switch (g.kind) {
        case GenKind::Square:
            for (int i = 0; i < 3; i++) {
                if (g.a[i] & 1) {
                    out.push_back(g.a - Coord::unit(i));
                    out.push_back(g.a + Coord::unit(i));
                }
            }
            break;
        case GenKind::Triangle:
            for (int i = 0; i < 3; i++) {
                out.push_back(g.a + Coord::unit(i, g.s[i]));
            }
            break;
        case GenKind::Octahedron:
        case GenKind::Cuboctahedron:
            out = cell_vertices(g.a);
            break;
        case GenKind::Hexagon:
            for (int i = 0; i < 3; i++) {
                for (int j = 0; j < 3; j++) {
                    if (i != j) {
                        out.push_back(g.a + Coord::unit(i) - Coord::unit(j));
                    }
                }
            }
            break;
    }
    return out;
}

/// The two lattice cells sharing a Z face.
std::array<Coord, 2> face_cells(const GenKey &g) {
    if (g.kind == GenKind::Square) {
        for (int i = 0; i < 3; i++) {
            if (!(g.a[i] & 1)) {
                return {g.a - Coord::unit(i), g.a + Coord::unit(i)};
            }
        }
    }
    return {g.a, g.a + g.s};
}

int odd_axis(const Coord &q) {
    for (int i = 0; i < 3; i++) {
        if (q[i] & 1) {
            return i;
        }
    }
    throw std::logic_error("not a qubit site");
}

bool triangle_is_green(const GenKey &t) { return cube_is_green(t.a + t.s); }

void add_triangles(const Coord &q, std::set<GenKey> &out, bool want_green) {
    int a = odd_axis(q);
    for (int sa : {-1, 1}) {
        Coord v = q - Coord::unit(a, sa);
        for (int sb : {-1, 1}) {
            for (int sc : {-1, 1}) {
                Coord s;
                s[a] = sa;
                s[(a + 1) % 3] = sb;
                s[(a + 2) % 3] = sc;
                GenKey t{GenKind::Triangle, v, s};
                if (triangle_is_green(t) == want_green) {
                    out.insert(t);
                }
            }
        }
    }
}

void add_squares(const Coord &q, std::set<GenKey> &out) {
    int a = odd_axis(q);
    for (int b = 0; b < 3; b++) {
        if (b != a) {
            out.insert({GenKind::Square, q - Coord::unit(b), {}});
            out.insert({GenKind::Square, q + Coord::unit(b), {}});
        }
    }
}

void add_octahedra(const Coord &q, std::set<GenKey> &out) {
    int a = odd_axis(q);
    out.insert({GenKind::Octahedron, q - Coord::unit(a), {}});
    out.insert({GenKind::Octahedron, q + Coord::unit(a), {}});
}

std::array<Coord, 4> cubes_of(const Coord &q) {
    int a = odd_axis(q);
    int b = (a + 1) % 3;
    int c = (a + 2) % 3;
    return {q + Coord::unit(b, -1) + Coord::unit(c, -1), q + Coord::unit(b, -1) + Coord::unit(c, 1),
            q + Coord::unit(b, 1) + Coord::unit(c, -1), q + Coord::unit(b, 1) + Coord::unit(c, 1)};
}

void add_cuboctahedra(const Coord &q, std::set<GenKey> &out, bool want_green) {
    for (const auto &c : cubes_of(q)) {
        if (cube_is_green(c) == want_green) {
            out.insert({GenKind::Cuboctahedron, c, {}});
        }
    }
}

void add_hexagons(const Coord &q, std::set<GenKey> &out) {
    int a = odd_axis(q);
    int b = (a + 1) % 3;
    int c = (a + 2) % 3;
    out.insert({GenKind::Hexagon, q - Coord::unit(b) + Coord::unit(c), {}});
    out.insert({GenKind::Hexagon, q + Coord::unit(b) - Coord::unit(c), {}});
}

void add_plane_triangles(const Coord &q, std::set<GenKey> &out) {
    int a = odd_axis(q);
    out.insert({GenKind::Triangle, q - Coord::unit(a), {1, 1, 1}});
    out.insert({GenKind::Triangle, q + Coord::unit(a), {-1, -1, -1}});
}

/// Enumerates the qubit sites of a slab region in sorted order.
std::vector<Coord> enumerate_sites(const SlabRegion &region) {
    const auto &lat = region.lateral;
    int za = lat.z_axis;
    int u_axis = (za + 1) % 3;
    int v_axis = (za + 2) % 3;
    int reach = 4 * (std::abs(region.plane_lo) + std::abs(region.plane_hi) + std::abs(lat.x_lo) + std::abs(lat.x_hi) +
                     std::abs(lat.z_lo) + std::abs(lat.z_hi)) +
                16;
    std::vector<Coord> out;
    for (int a = lat.z_lo; a <= lat.z_hi; a++) {
        for (int s = region.plane_lo; s <= region.plane_hi; s++) {
            for (int u = -reach; u <= reach; u++) {
                Coord p;
                p[za] = a;
                p[u_axis] = u;
                p[v_axis] = s - a - u;
                if (region.contains(p)) {
                    out.push_back(p);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class Keep { Full, Truncated, Dropped };

/// Boundary rule: missing vertices beyond X-type constraints only truncate X
/// generators and remove Z generators; beyond Z-type constraints only the
/// reverse; generators missing vertices of both types are removed.
Keep keep_rule(bool is_x_generator, std::uint8_t missing_bits) {
    if (missing_bits == 0) {
        return Keep::Full;
    }
    bool x_side = (missing_bits & kXTypeViolations) != 0;
    bool z_side = (missing_bits & kZTypeViolations) != 0;
    if (x_side && !z_side) {
        return is_x_generator ? Keep::Truncated : Keep::Dropped;
    }
    if (z_side && !x_side) {
        return is_x_generator ? Keep::Dropped : Keep::Truncated;
    }
    return Keep::Dropped;
}

struct Restricted {
    std::vector<int> qubits;
    std::uint8_t missing_bits = 0;
    Keep keep = Keep::Dropped;
};

Restricted restrict_generator(const GenKey &g, bool is_x, const SlabRegion &region,
                              const std::unordered_map<Coord, int, CoordHash> &index, std::uint8_t ignore_bits) {
    Restricted r;
    for (const auto &v : generator_vertices(g)) {
        auto it = index.find(v);
        if (it != index.end()) {
            r.qubits.push_back(it->second);
        } else {
            r.missing_bits |= static_cast<std::uint8_t>(region.violations(v) & ~ignore_bits);
        }
    }
    std::sort(r.qubits.begin(), r.qubits.end());
    r.keep = r.qubits.empty() ? Keep::Dropped : keep_rule(is_x, r.missing_bits);
    return r;
}

Boundary stabiliser_label(const Restricted &r, const std::vector<int> &layer_of) {
    if (r.keep == Keep::Truncated) {
        return label_for_violations(r.missing_bits);
    }
    bool all_bottom = true;
    bool all_top = true;
    for (int q : r.qubits) {
        all_bottom = all_bottom && layer_of[q] == 0;
        all_top = all_top && layer_of[q] == 2;
    }
    if (all_bottom) {
        return Boundary::Bottom;
    }
    if (all_top) {
        return Boundary::Top;
    }
    return Boundary::Bulk;
}

std::uint8_t cell_missing_bits(const Coord &centre, const SlabRegion &region) {
    std::uint8_t bits = 0;
    for (const auto &v : cell_vertices(centre)) {
        bits |= region.violations(v);
    }
    return bits;
}

/// Which lattice cells form the Z-face complex of each code.
bool is_dual_cell(CodeLabel code, const Coord &centre) {
    if (centre.odd_count() == 3) {
        switch (code) {
            case CodeLabel::A:
                return true;
            case CodeLabel::B:
                return !cube_is_green(centre);
            case CodeLabel::C:
                return cube_is_green(centre);
        }
    }
    return code != CodeLabel::A;
}

}  // namespace

std::shared_ptr<const SliceGeometry> build_slice(CodeLabel code, int L, int timestep) {
    check_distance(L);
    if (timestep < 0) {
        throw std::invalid_argument("timestep must be nonnegative");
    }
    auto geo = std::make_shared<SliceGeometry>();
    SliceGeometry &g = *geo;
    g.code = code;
    g.L = L;
    g.timestep = timestep;
    g.base_plane = slice_base_plane(timestep);
    g.region.lateral = lateral_region(code, L);
    g.region.plane_lo = g.base_plane;
    g.region.plane_hi = g.base_plane + 4;

    g.qubits = enumerate_sites(g.region);
    for (std::size_t i = 0; i < g.qubits.size(); i++) {
        g.qubit_index[g.qubits[i]] = static_cast<int>(i);
        g.layer.push_back((g.qubits[i].sum() - g.base_plane) / 2);
    }

    std::set<GenKey> zkeys;
    std::set<GenKey> xkeys;
    for (const auto &q : g.qubits) {
        switch (code) {
            case CodeLabel::A:
                add_squares(q, zkeys);
                add_octahedra(q, xkeys);
                break;
            case CodeLabel::B:
                add_triangles(q, zkeys, false);
                add_cuboctahedra(q, xkeys, true);
                break;
            case CodeLabel::C:
                add_triangles(q, zkeys, true);
                add_cuboctahedra(q, xkeys, false);
                break;
        }
    }

    for (const auto &key : zkeys) {
        auto r = restrict_generator(key, false, g.region, g.qubit_index, 0);
        if (r.keep == Keep::Dropped) {
            continue;
        }
        ZFace f;
        f.label = stabiliser_label(r, g.layer);
        f.bottom = std::all_of(r.qubits.begin(), r.qubits.end(), [&](int q) { return g.layer[q] == 0; });
        f.qubits = std::move(r.qubits);
        f.cells = face_cells(key);
        g.zfaces.push_back(std::move(f));
    }

    std::map<Coord, int> xcell_of_centre;
    std::map<Coord, Boundary> dropped_xcell;
    for (const auto &key : xkeys) {
        auto r = restrict_generator(key, true, g.region, g.qubit_index, 0);
        if (r.keep == Keep::Dropped) {
            dropped_xcell[key.a] = label_for_violations(r.missing_bits & kZTypeViolations);
            continue;
        }
        XCell c;
        c.label = stabiliser_label(r, g.layer);
        c.qubits = std::move(r.qubits);
        c.centre = key.a;
        xcell_of_centre[key.a] = static_cast<int>(g.xcells.size());
        g.xcells.push_back(std::move(c));
    }

    for (std::size_t q = 0; q < g.qubits.size(); q++) {
        if (g.layer[q] != 0) {
            g.fresh_qubits.push_back(static_cast<int>(q));
        }
    }
    for (std::size_t f = 0; f < g.zfaces.size(); f++) {
        if (!g.zfaces[f].bottom) {
            g.new_faces.push_back(static_cast<int>(f));
        }
    }
    g.faces_of_qubit.assign(g.qubits.size(), {});
    for (std::size_t f = 0; f < g.zfaces.size(); f++) {
        for (int q : g.zfaces[f].qubits) {
            g.faces_of_qubit[q].push_back(static_cast<int>(f));
        }
    }

    g.xcells_of_qubit.assign(g.qubits.size(), {0, 0});
    for (std::size_t q = 0; q < g.qubits.size(); q++) {
        std::set<GenKey> mine;
        if (code == CodeLabel::A) {
            add_octahedra(g.qubits[q], mine);
        } else {
            add_cuboctahedra(g.qubits[q], mine, code == CodeLabel::B);
        }
        int k = 0;
        for (const auto &key : mine) {
            auto it = xcell_of_centre.find(key.a);
            if (it != xcell_of_centre.end()) {
                g.xcells_of_qubit[q][k] = it->second;
            } else {
                g.xcells_of_qubit[q][k] = dropped_xcell.at(key.a) == Boundary::SideZ2 ? -2 : -1;
            }
            k++;
        }
    }

    // Dual graph.
    DualGraph &d = g.dual;
    enum : int { kTop = -10, kSideX1 = -11, kSideX2 = -12, kReal = -1 };
    std::map<Coord, int> cell_class;
    auto classify = [&](const Coord &centre) {
        auto it = cell_class.find(centre);
        if (it != cell_class.end()) {
            return it->second;
        }
        std::uint8_t bits = cell_missing_bits(centre, g.region);
        int cls = kReal;
        if (bits & kXLo) {
            cls = kSideX1;
        } else if (bits & kXHi) {
            cls = kSideX2;
        } else if (bits & kAbove) {
            cls = kTop;
        }
        cell_class[centre] = cls;
        return cls;
    };
    std::set<Coord> real_cells;
    for (const auto &f : g.zfaces) {
        if (f.bottom) {
            continue;
        }
        for (const auto &c : f.cells) {
            if (!is_dual_cell(code, c)) {
                throw std::logic_error("face separates a cell outside the dual complex");
            }
            if (classify(c) == kReal) {
                real_cells.insert(c);
            }
        }
    }
    d.num_real = static_cast<int>(real_cells.size());
    for (const auto &c : real_cells) {
        d.index_of[c] = static_cast<int>(d.centre.size());
        d.centre.push_back(c);
        d.bottom_adjacent.push_back((cell_missing_bits(c, g.region) & kBelow) != 0);
    }
    d.adjacency.assign(static_cast<std::size_t>(d.num_nodes()), {});
    d.face_ends.assign(g.zfaces.size(), {-1, -1});
    auto node_of = [&](const Coord &c) {
        switch (classify(c)) {
            case kTop:
                return d.top();
            case kSideX1:
                return d.side_x1();
            case kSideX2:
                return d.side_x2();
            default:
                return d.index_of.at(c);
        }
    };
    for (std::size_t f = 0; f < g.zfaces.size(); f++) {
        const auto &face = g.zfaces[f];
        if (face.bottom) {
            // Bottom faces of the C slice mark the cell above them as bottom adjacent.
            for (const auto &c : face.cells) {
                int v = d.find(c);
                if (v >= 0) {
                    d.bottom_adjacent[v] = true;
                }
            }
            continue;
        }
        int u = node_of(face.cells[0]);
        int v = node_of(face.cells[1]);
        d.face_ends[f] = {u, v};
        d.adjacency[u].push_back({v, static_cast<int>(f)});
        if (u != v) {
            d.adjacency[v].push_back({u, static_cast<int>(f)});
        }
    }
    return geo;
}

std::shared_ptr<const LayerGeometry> build_layer(CodeLabel code, int L, int position) {
    check_distance(L);
    if (position < 0) {
        throw std::invalid_argument("layer position must be nonnegative");
    }
    auto geo = std::make_shared<LayerGeometry>();
    LayerGeometry &g = *geo;
    g.code = code;
    g.L = L;
    g.position = position;
    g.plane = slice_base_plane(position);
    SlabRegion region;
    region.lateral = lateral_region(code, L);
    region.plane_lo = g.plane;
    region.plane_hi = g.plane;
    g.qubits = enumerate_sites(region);
    for (std::size_t i = 0; i < g.qubits.size(); i++) {
        g.qubit_index[g.qubits[i]] = static_cast<int>(i);
    }

    std::set<GenKey> hexagons;
    std::set<GenKey> triangles;
    for (const auto &q : g.qubits) {
        add_hexagons(q, hexagons);
        add_plane_triangles(q, triangles);
    }
    const auto &zkeys = code == CodeLabel::C ? triangles : hexagons;
    const auto &xkeys = code == CodeLabel::C ? hexagons : triangles;
    constexpr std::uint8_t kIgnore = kAbove | kBelow;
    for (const auto &key : zkeys) {
        auto r = restrict_generator(key, false, region, g.qubit_index, kIgnore);
        if (r.keep != Keep::Dropped) {
            g.zface_labels.push_back(label_for_violations(r.missing_bits));
            g.zfaces.push_back(std::move(r.qubits));
        }
    }
    for (const auto &key : xkeys) {
        auto r = restrict_generator(key, true, region, g.qubit_index, kIgnore);
        if (r.keep != Keep::Dropped) {
            g.xface_labels.push_back(label_for_violations(r.missing_bits));
            g.xfaces.push_back(std::move(r.qubits));
        }
    }

    CssCode css{g.qubits.size(), g.zfaces, g.xfaces};
    if (logical_qubit_count(css) != 1) {
        throw std::logic_error("layer does not encode exactly one logical qubit");
    }
    g.logical_x = min_weight_logical(css, PauliType::X).representative;
    g.logical_z = min_weight_logical(css, PauliType::Z).representative;
    return geo;
}

std::string golden_listing(const SliceGeometry &slice) {
    std::vector<std::string> lines;
    auto coords = [&](const std::vector<int> &qs) {
        std::vector<Coord> cs;
        for (int q : qs) {
            cs.push_back(slice.qubits[q]);
        }
        std::sort(cs.begin(), cs.end());
        std::string out = std::to_string(cs.size());
        for (const auto &c : cs) {
            out += ' ';
            out += c.str();
        }
        return out;
    };
    for (std::size_t q = 0; q < slice.qubits.size(); q++) {
        const auto &c = slice.qubits[q];
        lines.push_back("Q " + std::to_string(c.x) + " " + std::to_string(c.y) + " " + std::to_string(c.z) + " " +
                        std::to_string(slice.layer[q]));
    }
    for (const auto &f : slice.zfaces) {
        lines.push_back(std::string("Z ") + (f.bottom ? "bottom " : "new ") + boundary_name(f.label) + " " +
                        coords(f.qubits));
    }
    for (const auto &c : slice.xcells) {
        lines.push_back(std::string("X ") + boundary_name(c.label) + " " + coords(c.qubits));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto &l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

}  // namespace jitslice
