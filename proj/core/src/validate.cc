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

#include "jitslice/validate.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jitslice/gf2.h"

namespace jitslice {

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.passed; });
}

const ValidationCheck *ValidationReport::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (const auto &c : checks) {
        out << code_char(code) << " L=" << L << " t=" << timestep << "  " << (c.passed ? "PASS" : "FAIL") << "  "
            << c.name;
        if (!c.detail.empty()) {
            out << "  (" << c.detail << ")";
        }
        out << '\n';
    }
    return out.str();
}

CssCode slice_css(const SliceGeometry &slice) {
    CssCode css;
    css.n = slice.qubits.size();
    for (const auto &f : slice.zfaces) {
        css.z_stabs.push_back(f.qubits);
    }
    for (const auto &c : slice.xcells) {
        css.x_stabs.push_back(c.qubits);
    }
    return css;
}

CssCode layer_css(const LayerGeometry &layer) { return {layer.qubits.size(), layer.zfaces, layer.xfaces}; }

LogicalWeight min_logical_weight(const LayerGeometry &layer, PauliType type) {
    return min_weight_logical(layer_css(layer), type);
}

LogicalWeight min_logical_weight(const SliceGeometry &slice, PauliType type) {
    CssCode css = slice_css(slice);
    if (logical_qubit_count(css) != 1) {
        throw std::invalid_argument("minimum logical weight requires a slice encoding exactly one logical qubit");
    }
    if (type == PauliType::Z || slice.L == 3) {
        return min_weight_logical(css, type);
    }
    // X logicals are membranes separating the two Z sides.
    int m = static_cast<int>(slice.xcells.size());
    int s = m;
    int t = m + 1;
    std::vector<std::pair<int, int>> edges;
    for (const auto &pair : slice.xcells_of_qubit) {
        auto node = [&](int c) { return c >= 0 ? c : (c == -1 ? s : t); };
        edges.emplace_back(node(pair[0]), node(pair[1]));
    }
    std::vector<std::vector<int>> paths;
    auto cut = min_edge_cut(m + 2, edges, s, t, &paths);
    auto lx = find_logical(css, PauliType::X);
    bool certified = lx.has_value();
    for (const auto &p : paths) {
        Bits z = bits_from_support(p, css.n);
        certified = certified && odd_overlap(z, *lx);
    }
    if (!certified) {
        throw std::logic_error("slice X logical bound could not be certified");
    }
    LogicalWeight out;
    out.weight = paths.size();
    out.representative = cut;
    Bits cut_bits = bits_from_support(cut, css.n);
    bool cut_commutes = true;
    for (const auto &z : stabiliser_rows(css, PauliType::Z)) {
        cut_commutes = cut_commutes && !odd_overlap(z, cut_bits);
    }
    auto lz = find_logical(css, PauliType::Z);
    if (cut_commutes && lz && odd_overlap(cut_bits, *lz) && cut.size() == paths.size()) {
        out.method = WeightMethod::MinCut;
        out.exact = true;
    } else {
        out.method = WeightMethod::FlowLowerBound;
        out.exact = false;
    }
    return out;
}

namespace {

using CoordSet = std::vector<Coord>;

CoordSet coords_of(const std::vector<int> &qubits, const std::vector<Coord> &sites, int plane_filter) {
    CoordSet out;
    for (int q : qubits) {
        if (plane_filter == INT32_MIN || sites[q].sum() == plane_filter) {
            out.push_back(sites[q]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void add(ValidationReport &r, const std::string &name, bool ok, const std::string &detail = "") {
    r.checks.push_back({name, ok, detail});
}

void stabiliser_checks(const SliceGeometry &slice, const CssCode &css, ValidationReport &r) {
    auto bad = anticommuting_pairs(css);
    add(r, "css_commutation", bad == 0, std::to_string(bad) + " anticommuting pairs");

    std::map<int, int> per_layer;
    for (int l : slice.layer) {
        per_layer[l]++;
    }
    bool three = per_layer.size() == 3 && per_layer.count(0) && per_layer.count(1) && per_layer.count(2);
    add(r, "three_layers", three, std::to_string(per_layer.size()) + " occupied layers");

    bool covered = true;
    std::vector<int> in_face(slice.qubits.size(), 0);
    for (const auto &f : css.z_stabs) {
        for (int q : f) {
            in_face[q] = 1;
        }
    }
    std::size_t uncovered = std::count(in_face.begin(), in_face.end(), 0);
    covered = uncovered == 0;
    add(r, "qubit_in_some_zface", covered, std::to_string(uncovered) + " uncovered qubits");
}

}  // namespace

ValidationReport validate_stabilisers(const SliceGeometry &slice) {
    ValidationReport r;
    r.code = slice.code;
    r.L = slice.L;
    r.timestep = slice.timestep;
    stabiliser_checks(slice, slice_css(slice), r);
    return r;
}

ValidationReport validate_slice(const SliceGeometry &slice) {
    ValidationReport r;
    r.code = slice.code;
    r.L = slice.L;
    r.timestep = slice.timestep;
    CssCode css = slice_css(slice);
    stabiliser_checks(slice, css, r);

    int k = logical_qubit_count(css);
    add(r, "encodes_one_qubit", k == 1, "k=" + std::to_string(k));

    // Bulk weights.
    std::size_t want_z = slice.code == CodeLabel::A ? 4 : 3;
    std::size_t want_x = slice.code == CodeLabel::A ? 6 : 12;
    std::size_t bulk_z = 0;
    std::size_t bulk_x = 0;
    bool weights_ok = true;
    for (const auto &f : slice.zfaces) {
        if (f.label == Boundary::Bulk) {
            bulk_z++;
            weights_ok = weights_ok && f.qubits.size() == want_z;
        }
    }
    for (const auto &c : slice.xcells) {
        if (c.label == Boundary::Bulk) {
            bulk_x++;
            weights_ok = weights_ok && c.qubits.size() == want_x;
        }
    }
    // Every blue cuboctahedron of a code C slice crosses the top or bottom
    // plane, so only its Z faces have a bulk weight.
    weights_ok = weights_ok && bulk_z > 0 && (bulk_x > 0 || slice.code == CodeLabel::C);
    add(r, "bulk_weights", weights_ok,
        std::to_string(bulk_z) + " bulk Z of weight " + std::to_string(want_z) + ", " + std::to_string(bulk_x) +
            " bulk X of weight " + std::to_string(want_x));

    if (slice.code != CodeLabel::A) {
        std::size_t weight_two = 0;
        for (const auto &f : slice.zfaces) {
            if ((f.label == Boundary::SideZ1 || f.label == Boundary::SideZ2) && f.qubits.size() == 2) {
                weight_two++;
            }
        }
        add(r, "z_boundary_weight_two", weight_two > 0, std::to_string(weight_two) + " weight-2 Z stabilisers");
    }

    // Layer restriction and layer commutation.
    auto bottom = build_layer(slice.code, slice.L, slice.timestep);
    auto top = build_layer(slice.code, slice.L, slice.timestep + 1);
    bool sites_match = coords_of(slice.layer_qubits(0), slice.qubits, INT32_MIN) == bottom->qubits &&
                       coords_of(slice.layer_qubits(2), slice.qubits, INT32_MIN) == top->qubits;
    add(r, "layers_match_slice_boundary", sites_match);

    bool restriction_ok = true;
    std::size_t restrictions = 0;
    for (const auto *layer : {bottom.get(), top.get()}) {
        std::set<CoordSet> layer_x;
        for (const auto &x : layer->xfaces) {
            layer_x.insert(coords_of(x, layer->qubits, INT32_MIN));
        }
        for (const auto &c : slice.xcells) {
            auto part = coords_of(c.qubits, slice.qubits, layer->plane);
            if (!part.empty()) {
                restrictions++;
                restriction_ok = restriction_ok && layer_x.count(part) > 0;
            }
        }
    }
    add(r, "layer_restriction", restriction_ok, std::to_string(restrictions) + " nonempty restrictions");

    std::size_t layer_bad = 0;
    auto xrows = stabiliser_rows(css, PauliType::X);
    for (const auto *layer : {bottom.get(), top.get()}) {
        for (const auto &z : layer->zfaces) {
            Bits zb(css.n);
            for (int q : z) {
                zb.set(static_cast<std::size_t>(slice.find_qubit(layer->qubits[q])));
            }
            for (const auto &x : xrows) {
                layer_bad += odd_overlap(zb, x) ? 1 : 0;
            }
        }
    }
    add(r, "layer_z_commutes_with_slice_x", layer_bad == 0, std::to_string(layer_bad) + " anticommuting pairs");

    bool layer_cover = true;
    for (const auto *layer : {bottom.get(), top.get()}) {
        std::vector<int> hit(layer->qubits.size(), 0);
        for (const auto &z : layer->zfaces) {
            for (int q : z) {
                hit[q] = 1;
            }
        }
        layer_cover = layer_cover && std::count(hit.begin(), hit.end(), 0) == 0;
    }
    add(r, "layer_qubit_in_some_zface", layer_cover);

    if (k != 1) {
        return r;
    }

    // Distances.
    auto wz = min_logical_weight(slice, PauliType::Z);
    auto wx = min_logical_weight(slice, PauliType::X);
    add(r, "distance_z", wz.weight >= static_cast<std::size_t>(slice.L),
        std::to_string(wz.weight) + " via " + weight_method_name(wz.method));
    add(r, "distance_x", wx.weight >= static_cast<std::size_t>(slice.L),
        std::to_string(wx.weight) + " via " + weight_method_name(wx.method) + (wx.exact ? "" : " (lower bound)"));
    std::size_t layer_min = SIZE_MAX;
    for (const auto *layer : {bottom.get(), top.get()}) {
        layer_min = std::min({layer_min, layer->logical_x.size(), layer->logical_z.size()});
    }
    add(r, "layer_distance", layer_min >= static_cast<std::size_t>(slice.L), "min " + std::to_string(layer_min));

    // Dual graph: every real vertex's new faces multiply to a bottom-layer stabiliser.
    const auto &d = slice.dual;
    std::vector<Bits> bottom_z;
    for (const auto &z : bottom->zfaces) {
        Bits zb(css.n);
        for (int q : z) {
            zb.set(static_cast<std::size_t>(slice.find_qubit(bottom->qubits[q])));
        }
        bottom_z.push_back(std::move(zb));
    }
    EchelonBasis bottom_span(css.n);
    for (const auto &z : bottom_z) {
        bottom_span.add(z);
    }
    std::size_t bad_vertices = 0;
    for (int v = 0; v < d.num_real; v++) {
        Bits prod(css.n);
        for (const auto &inc : d.adjacency[v]) {
            for (int q : slice.zfaces[inc.face].qubits) {
                prod.flip(static_cast<std::size_t>(q));
            }
        }
        if (!bottom_span.contains(prod)) {
            bad_vertices++;
        }
    }
    bool ends_ok = true;
    for (std::size_t f = 0; f < slice.zfaces.size(); f++) {
        bool has_ends = d.face_ends[f][0] >= 0 && d.face_ends[f][1] >= 0;
        ends_ok = ends_ok && has_ends == !slice.zfaces[f].bottom;
    }
    add(r, "dual_vertex_parity", bad_vertices == 0 && ends_ok,
        std::to_string(bad_vertices) + " of " + std::to_string(d.num_real) + " real vertices inconsistent");

    // Every loop syndrome is reachable by a correction off the bottom layer,
    // and any two such corrections differ on the top layer by a stabiliser.
    std::vector<int> new_faces;
    for (std::size_t f = 0; f < slice.zfaces.size(); f++) {
        if (!slice.zfaces[f].bottom) {
            new_faces.push_back(static_cast<int>(f));
        }
    }
    std::vector<int> free_qubits;
    std::vector<int> column_of(css.n, -1);
    for (std::size_t q = 0; q < css.n; q++) {
        if (slice.layer[q] != 0) {
            column_of[q] = static_cast<int>(free_qubits.size());
            free_qubits.push_back(static_cast<int>(q));
        }
    }
    std::vector<Bits> equations;
    for (int f : new_faces) {
        Bits row(free_qubits.size());
        for (int q : slice.zfaces[f].qubits) {
            if (column_of[q] >= 0) {
                row.set(static_cast<std::size_t>(column_of[q]));
            }
        }
        equations.push_back(std::move(row));
    }
    LinearSolver solver(equations, free_qubits.size());
    std::vector<Bits> incidence;
    for (int v = 0; v < d.num_real; v++) {
        Bits row(new_faces.size());
        for (std::size_t i = 0; i < new_faces.size(); i++) {
            const auto &e = d.face_ends[new_faces[i]];
            if ((e[0] == v) != (e[1] == v)) {
                row.set(i);
            }
        }
        incidence.push_back(std::move(row));
    }
    std::size_t cycle_dim = new_faces.size() - gf2_rank(incidence, new_faces.size());
    add(r, "loop_syndromes_correctable", solver.rank() == cycle_dim,
        "image rank " + std::to_string(solver.rank()) + ", loop space " + std::to_string(cycle_dim));

    EchelonBasis top_x(css.n);
    for (const auto &x : top->xfaces) {
        Bits xb(css.n);
        for (int q : x) {
            xb.set(static_cast<std::size_t>(slice.find_qubit(top->qubits[q])));
        }
        top_x.add(xb);
    }
    std::size_t ambiguous = 0;
    for (const auto &kv : solver.kernel_basis()) {
        Bits on_top(css.n);
        for (auto i = kv.find_first(); i != Bits::npos; i = kv.find_next(i)) {
            int q = free_qubits[i];
            if (slice.layer[q] == 2) {
                on_top.set(static_cast<std::size_t>(q));
            }
        }
        if (!top_x.contains(on_top)) {
            ambiguous++;
        }
    }
    add(r, "correction_unique_on_top", ambiguous == 0,
        std::to_string(ambiguous) + " kernel vectors act nontrivially on the top layer");
    return r;
}

std::set<Coord> cubic_overlap_sites(int L) {
    std::set<Coord> out;
    std::array<LateralRegion, 3> lat = {lateral_region(CodeLabel::A, L), lateral_region(CodeLabel::B, L),
                                        lateral_region(CodeLabel::C, L)};
    auto inside = [&](const LateralRegion &r, const Coord &p) {
        int a = p[r.z_axis];
        int g = r.x_normal.dot(p);
        return a >= r.z_lo && a <= r.z_hi && g >= r.x_lo && g <= r.x_hi;
    };
    // Each prism bounds one coordinate directly, so the box below is exhaustive.
    int lo = -1;
    int hi = 2 * L;
    for (int x = lo; x <= hi; x++) {
        for (int y = lo; y <= hi; y++) {
            for (int z = lo; z <= hi; z++) {
                Coord p{x, y, z};
                if (p.odd_count() == 1 && inside(lat[0], p) && inside(lat[1], p) && inside(lat[2], p)) {
                    out.insert(p);
                }
            }
        }
    }
    return out;
}

int sweep_length(int L) {
    int top = INT32_MIN;
    for (const auto &p : cubic_overlap_sites(L)) {
        top = std::max(top, p.sum());
    }
    return (top - kBasePlane) / kPlanesPerStep + 1;
}

std::set<SiteTriple> overlap_triples(int L, int timestep) {
    std::array<std::shared_ptr<const SliceGeometry>, 3> s = {
        build_slice(CodeLabel::A, L, timestep), build_slice(CodeLabel::B, L, timestep),
        build_slice(CodeLabel::C, L, timestep)};
    std::array<std::set<Coord>, 3> sites;
    for (int i = 0; i < 3; i++) {
        sites[i].insert(s[i]->qubits.begin(), s[i]->qubits.end());
    }
    std::set<SiteTriple> triples;
    std::set<Coord> common;
    for (const auto &p : sites[0]) {
        if (sites[1].count(p) && sites[2].count(p)) {
            triples.insert({p, p, p});
            common.insert(p);
        }
    }
    auto central = cubic_overlap_sites(L);
    int lo = slice_base_plane(timestep);
    for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
            std::set<Coord> pair;
            for (const auto &p : sites[i]) {
                if (sites[j].count(p) && central.count(p)) {
                    pair.insert(p);
                }
            }
            if (pair != common) {
                throw std::logic_error("pairwise slice intersection disagrees with the triple overlap");
            }
        }
    }
    for (const auto &p : common) {
        if (p.sum() < lo || p.sum() > lo + 4 || !central.count(p)) {
            throw std::logic_error("triple overlap site outside the common region");
        }
    }
    return triples;
}

}  // namespace jitslice
