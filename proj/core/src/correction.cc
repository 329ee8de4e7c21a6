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

#include "jitslice/correction.h"

#include <deque>
#include <stdexcept>

#include "jitslice/decoder.h"
#include "jitslice/errors.h"

namespace jitslice {

namespace {

/// Column index of each fresh qubit, -1 on the bottom layer.
std::vector<int> fresh_columns(const SliceGeometry &s) {
    std::vector<int> col(s.num_qubits(), -1);
    for (std::size_t i = 0; i < s.fresh_qubits.size(); i++) {
        col[s.fresh_qubits[i]] = static_cast<int>(i);
    }
    return col;
}

}  // namespace

TopPusher::TopPusher(std::shared_ptr<const SliceGeometry> slice) : slice_(std::move(slice)) {
    const auto &s = *slice_;
    auto col = fresh_columns(s);
    std::vector<Bits> rows;
    rows.reserve(s.new_faces.size());
    for (int f : s.new_faces) {
        Bits row(s.fresh_qubits.size());
        for (int q : s.zfaces[f].qubits) {
            if (col[q] >= 0) {
                row.set(static_cast<std::size_t>(col[q]));
            }
        }
        rows.push_back(std::move(row));
    }
    solver_ = LinearSolver(rows, s.fresh_qubits.size());
}

CorrectionOp TopPusher::push(const SyndromeState &repaired) const {
    const auto &s = *slice_;
    CorrectionOp op{Bits(s.num_qubits()), PauliType::X};
    if (repaired.flagged.none()) {
        return op;
    }
    Bits rhs(s.new_faces.size());
    for (std::size_t i = 0; i < s.new_faces.size(); i++) {
        if (repaired.flagged.test(static_cast<std::size_t>(s.new_faces[i]))) {
            rhs.set(i);
        }
    }
    auto x = solver_.solve(rhs);
    if (!x) {
        throw ContractViolation("repaired syndrome has no correction on the non-bottom qubits");
    }
    for (auto i = x->find_first(); i != Bits::npos; i = x->find_next(i)) {
        op.qubits.set(static_cast<std::size_t>(s.fresh_qubits[i]));
    }
    return op;
}

CorrectionOp push_to_top(const SyndromeState &repaired, const std::shared_ptr<const SliceGeometry> &slice) {
    return TopPusher(slice).push(repaired);
}

CollapseRecord collapse(const SliceGeometry &slice, const Bits &x_errors) {
    CollapseRecord rec;
    rec.surviving = slice.layer_qubits(2);
    for (int q : rec.surviving) {
        if (x_errors.test(static_cast<std::size_t>(q))) {
            rec.residual.push_back(slice.qubits[q]);
        }
    }
    return rec;
}

Bits carry_forward(const CollapseRecord &record, const SliceGeometry &next) {
    Bits out(next.num_qubits());
    for (const auto &c : record.residual) {
        int q = next.find_qubit(c);
        if (q < 0 || next.layer[q] != 0) {
            throw ContractViolation("residual site " + c.str() + " is not on the bottom layer of the next slice");
        }
        out.set(static_cast<std::size_t>(q));
    }
    return out;
}

Bits residual_on_layer(const CollapseRecord &record, const LayerGeometry &layer) {
    Bits out(layer.qubits.size());
    for (const auto &c : record.residual) {
        int q = layer.find_qubit(c);
        if (q < 0) {
            throw ContractViolation("residual site " + c.str() + " is not a qubit of the final layer");
        }
        out.set(static_cast<std::size_t>(q));
    }
    return out;
}

bool layer_logical_failure(const LayerGeometry &layer, const Bits &x_errors) {
    int nf = static_cast<int>(layer.zfaces.size());
    int boundary = nf;
    // Qubit edges between the Z faces containing them; a qubit in one face
    // joins that face to the boundary node.
    std::vector<std::vector<std::pair<int, int>>> adj(nf + 1);
    std::vector<std::vector<int>> faces_of(layer.qubits.size());
    for (int f = 0; f < nf; f++) {
        for (int q : layer.zfaces[f]) {
            faces_of[q].push_back(f);
        }
    }
    for (std::size_t q = 0; q < faces_of.size(); q++) {
        const auto &fs = faces_of[q];
        if (fs.empty() || fs.size() > 2) {
            throw ContractViolation("layer qubit outside the matching graph");
        }
        int a = fs[0];
        int b = fs.size() == 2 ? fs[1] : boundary;
        adj[a].push_back({b, static_cast<int>(q)});
        adj[b].push_back({a, static_cast<int>(q)});
    }
    std::vector<char> flagged(nf, 0);
    for (auto q = x_errors.find_first(); q != Bits::npos; q = x_errors.find_next(q)) {
        for (int f : faces_of[q]) {
            flagged[f] ^= 1;
        }
    }
    std::vector<int> defects;
    for (int f = 0; f < nf; f++) {
        if (flagged[f]) {
            defects.push_back(f);
        }
    }
    int k = static_cast<int>(defects.size());
    std::vector<std::vector<int>> parent(k);
    std::vector<std::vector<int>> dist(k);
    for (int i = 0; i < k; i++) {
        dist[i].assign(nf + 1, -1);
        parent[i].assign(nf + 1, -1);
        std::deque<int> queue{defects[i]};
        dist[i][defects[i]] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (u == boundary) {
                continue;
            }
            for (auto [v, q] : adj[u]) {
                if (dist[i][v] < 0) {
                    dist[i][v] = dist[i][u] + 1;
                    parent[i][v] = q;
                    queue.push_back(v);
                }
            }
        }
    }
    std::vector<std::vector<std::int64_t>> pw(k, std::vector<std::int64_t>(k, 0));
    std::vector<std::int64_t> bw(k, 0);
    std::int64_t far = 4LL * (nf + 1);
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            pw[i][j] = dist[i][defects[j]] < 0 ? far : dist[i][defects[j]];
        }
        bw[i] = dist[i][boundary] < 0 ? far : dist[i][boundary];
    }
    auto partner = boundary_matching(pw, bw);
    Bits net = x_errors;
    auto trace = [&](int i, int target) {
        if (dist[i][target] < 0) {
            throw ContractViolation("layer decoder matched disconnected defects");
        }
        for (int v = target; v != defects[i];) {
            int q = parent[i][v];
            net.flip(static_cast<std::size_t>(q));
            const auto &fs = faces_of[q];
            int other = fs.size() == 2 ? (fs[0] == v ? fs[1] : fs[0]) : fs[0];
            v = v == boundary ? fs[0] : other;
        }
    };
    for (int i = 0; i < k; i++) {
        if (partner[i] < 0) {
            trace(i, boundary);
        } else if (partner[i] > i) {
            trace(i, defects[partner[i]]);
        }
    }
    bool odd = false;
    for (int q : layer.logical_z) {
        odd ^= net.test(static_cast<std::size_t>(q));
    }
    return odd;
}

const std::array<std::array<int, 4>, 6> MinimalCube::kZStabilisers = {{
    {0, 1, 4, 5},
    {1, 3, 5, 7},
    {2, 3, 6, 7},
    {0, 2, 4, 6},
    {0, 1, 2, 3},
    {4, 5, 6, 7},
}};
const std::array<std::array<int, 4>, 4> MinimalCube::kXStabilisers = {{
    {0, 1, 2, 3},
    {4, 5, 6, 7},
    {0, 2, 4, 6},
    {1, 3, 5, 7},
}};
const std::array<std::array<int, 2>, 2> MinimalCube::kTopXStabilisers = {{{0, 2}, {1, 3}}};
const std::array<int, 2> MinimalCube::kTopLogicalZ = {1, 3};
const std::array<int, 2> MinimalCube::kTopLogicalX = {0, 1};

CorrectionOp z_footprint(const std::array<int, 4> &bottom_outcomes) {
    CorrectionOp op{Bits(4), PauliType::Z};
    for (int i = 0; i < 4; i++) {
        if (bottom_outcomes[i] == -1) {
            op.qubits.set(static_cast<std::size_t>(i));
        } else if (bottom_outcomes[i] != 1) {
            throw std::invalid_argument("measurement outcomes must be +1 or -1");
        }
    }
    return op;
}

}  // namespace jitslice
