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

#include "jitslice/dual.h"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <deque>
#include <stdexcept>

#include "jitslice/gf2.h"

namespace jitslice {

std::string PairElement::str() const {
    if (is_boundary) {
        return side == SideBoundary::SideX1 ? "SideX1" : "SideX2";
    }
    return centre.str();
}

PairKey::PairKey(const PairElement &a, const PairElement &b) : first(std::min(a, b)), second(std::max(a, b)) {}

std::string PairKey::str() const { return first.str() + "|" + second.str(); }

int dual_node(const SliceGeometry &slice, const PairElement &e) {
    if (e.is_boundary) {
        return e.side == SideBoundary::SideX1 ? slice.dual.side_x1() : slice.dual.side_x2();
    }
    int v = slice.dual.find(e.centre);
    if (v < 0) {
        throw std::out_of_range("cell " + e.centre.str() + " is not a dual vertex of this slice");
    }
    return v;
}

std::vector<int> dual_bfs(const SliceGeometry &slice, int source, std::vector<int> *parent_face) {
    const auto &d = slice.dual;
    std::vector<int> dist(static_cast<std::size_t>(d.num_nodes()), -1);
    if (parent_face) {
        parent_face->assign(dist.size(), -1);
    }
    std::deque<int> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u != source && d.is_virtual(u)) {
            continue;
        }
        for (const auto &inc : d.adjacency[u]) {
            if (dist[inc.neighbour] < 0) {
                dist[inc.neighbour] = dist[u] + 1;
                if (parent_face) {
                    (*parent_face)[inc.neighbour] = inc.face;
                }
                queue.push_back(inc.neighbour);
            }
        }
    }
    return dist;
}

int dual_distance(const PairElement &a, const PairElement &b, const SliceGeometry &slice) {
    if (a == b) {
        return 0;
    }
    int u = dual_node(slice, a);
    int v = dual_node(slice, b);
    auto dist = dual_bfs(slice, u);
    if (dist[v] < 0) {
        throw std::runtime_error("dual vertices " + a.str() + " and " + b.str() + " are disconnected");
    }
    return dist[v];
}

namespace {

int other_end(const SliceGeometry &slice, int face, int node) {
    const auto &ends = slice.dual.face_ends[face];
    return ends[0] == node ? ends[1] : ends[0];
}

}  // namespace

std::vector<int> path_between(const PairElement &a, const PairElement &b, const SliceGeometry &slice) {
    if (a == b) {
        return {};
    }
    int u = dual_node(slice, a);
    int v = dual_node(slice, b);
    std::vector<int> parent;
    auto dist = dual_bfs(slice, v, &parent);
    if (dist[u] < 0) {
        throw std::runtime_error("dual vertices " + a.str() + " and " + b.str() + " are disconnected");
    }
    std::vector<int> faces;
    for (int x = u; x != v;) {
        int f = parent[x];
        faces.push_back(f);
        x = other_end(slice, f, x);
    }
    return faces;
}

std::vector<int> path_to_top(const Coord &endpoint, const SliceGeometry &slice) {
    const auto &d = slice.dual;
    int v = d.find(endpoint);
    if (v < 0) {
        throw std::out_of_range("cell " + endpoint.str() + " is not a dual vertex of this slice");
    }
    auto dist = dual_bfs(slice, d.top());
    if (dist[v] < 0) {
        throw std::runtime_error("cell " + endpoint.str() + " cannot reach the top boundary");
    }
    const auto &lat = slice.region.lateral;
    auto drift = [&](const Coord &c) {
        return std::pair{std::abs(lat.x_normal.dot(c - endpoint)), std::abs(c[lat.z_axis] - endpoint[lat.z_axis])};
    };
    std::vector<int> faces;
    Coord here = endpoint;
    while (v != d.top()) {
        int best_face = -1;
        Coord best_cell;
        for (const auto &inc : d.adjacency[v]) {
            if (dist[inc.neighbour] != dist[v] - 1) {
                continue;
            }
            if (inc.neighbour != d.top() && d.is_virtual(inc.neighbour)) {
                continue;
            }
            const auto &cells = slice.zfaces[inc.face].cells;
            Coord next = cells[0] == here ? cells[1] : cells[0];
            if (best_face < 0 || drift(next) < drift(best_cell) ||
                (drift(next) == drift(best_cell) && next < best_cell)) {
                best_face = inc.face;
                best_cell = next;
            }
        }
        faces.push_back(best_face);
        here = best_cell;
        v = other_end(slice, best_face, v);
    }
    return faces;
}

TopEmergence::TopEmergence(const SliceGeometry &s, const SliceGeometry &next) {
    const auto &d = s.dual;
    std::vector<int> col(s.num_qubits(), -1);
    for (std::size_t i = 0; i < s.fresh_qubits.size(); i++) {
        col[s.fresh_qubits[i]] = static_cast<int>(i);
    }
    std::vector<int> row_of(s.num_faces(), -1);
    std::vector<Bits> rows;
    for (int f : s.new_faces) {
        row_of[f] = static_cast<int>(rows.size());
        Bits row(s.fresh_qubits.size());
        for (int q : s.zfaces[f].qubits) {
            if (col[q] >= 0) {
                row.set(static_cast<std::size_t>(col[q]));
            }
        }
        rows.push_back(std::move(row));
    }
    LinearSolver solver(rows, s.fresh_qubits.size());
    for (int v = 0; v < d.num_real; v++) {
        const Coord &c = d.centre[v];
        auto dist = dual_bfs(s, v);
        auto side = dist[d.side_x1()] >= 0 && (dist[d.side_x2()] < 0 || dist[d.side_x1()] <= dist[d.side_x2()])
                        ? SideBoundary::SideX1
                        : SideBoundary::SideX2;
        Bits rhs(rows.size());
        for (int f : path_between(PairElement::endpoint(c), PairElement::boundary(side), s)) {
            rhs.flip(static_cast<std::size_t>(row_of[f]));
        }
        for (int f : path_to_top(c, s)) {
            rhs.flip(static_cast<std::size_t>(row_of[f]));
        }
        auto x = solver.solve(rhs);
        if (!x) {
            throw std::logic_error("no correction pushes " + c.str() + " to the top");
        }
        std::vector<char> flagged(next.num_faces(), 0);
        for (auto i = x->find_first(); i != Bits::npos; i = x->find_next(i)) {
            int q = s.fresh_qubits[i];
            if (s.layer[q] != 2) {
                continue;
            }
            int nq = next.find_qubit(s.qubits[q]);
            if (nq < 0 || next.layer[nq] != 0) {
                throw std::logic_error("top qubit " + s.qubits[q].str() + " is not on the bottom of the next slice");
            }
            for (int f : next.faces_of_qubit[nq]) {
                flagged[f] ^= 1;
            }
        }
        std::vector<char> parity(next.dual.num_real, 0);
        for (std::size_t f = 0; f < flagged.size(); f++) {
            const auto &ends = next.dual.face_ends[f];
            if (!flagged[f] || ends[0] < 0 || ends[0] == ends[1]) {
                continue;
            }
            for (int u : ends) {
                if (u < next.dual.num_real) {
                    parity[u] ^= 1;
                }
            }
        }
        std::vector<int> found;
        for (int u = 0; u < next.dual.num_real; u++) {
            if (parity[u]) {
                found.push_back(u);
            }
        }
        if (found.size() > 1) {
            throw std::logic_error("defect at " + c.str() + " re-emerges at several cells");
        }
        map_[c] = found.empty() ? PairElement::boundary(side) : PairElement::endpoint(next.dual.centre[found[0]]);
    }
}

PairElement TopEmergence::translate(const PairElement &e) const {
    if (e.is_boundary) {
        return e;
    }
    auto it = map_.find(e.centre);
    if (it == map_.end()) {
        throw std::out_of_range("cell " + e.centre.str() + " is not a dual vertex of the slice");
    }
    return it->second;
}

PairKey TopEmergence::translate(const PairKey &pair) const {
    return PairKey(translate(pair.first), translate(pair.second));
}

PairKey translate_pair(const PairKey &pair, const SliceGeometry &slice_t, const SliceGeometry &slice_next) {
    return TopEmergence(slice_t, slice_next).translate(pair);
}

}  // namespace jitslice
