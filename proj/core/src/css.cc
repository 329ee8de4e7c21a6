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

#include "jitslice/css.h"

#include <deque>
#include <limits>
#include <stdexcept>

namespace jitslice {

std::vector<Bits> stabiliser_rows(const CssCode &code, PauliType type) {
    const auto &stabs = type == PauliType::X ? code.x_stabs : code.z_stabs;
    std::vector<Bits> rows;
    rows.reserve(stabs.size());
    for (const auto &s : stabs) {
        rows.push_back(bits_from_support(s, code.n));
    }
    return rows;
}

int logical_qubit_count(const CssCode &code) {
    auto zr = stabiliser_rows(code, PauliType::Z);
    auto xr = stabiliser_rows(code, PauliType::X);
    return static_cast<int>(code.n) - static_cast<int>(gf2_rank(zr, code.n)) - static_cast<int>(gf2_rank(xr, code.n));
}

std::size_t anticommuting_pairs(const CssCode &code) {
    auto zr = stabiliser_rows(code, PauliType::Z);
    auto xr = stabiliser_rows(code, PauliType::X);
    std::size_t bad = 0;
    for (const auto &x : xr) {
        for (const auto &z : zr) {
            bad += odd_overlap(x, z) ? 1 : 0;
        }
    }
    return bad;
}

const char *weight_method_name(WeightMethod m) {
    switch (m) {
        case WeightMethod::Enumeration:
            return "enumeration";
        case WeightMethod::ShortestOddCycle:
            return "shortest-odd-cycle";
        case WeightMethod::MinCut:
            return "min-cut";
        default:
            return "flow-lower-bound";
    }
}

std::optional<Bits> find_logical(const CssCode &code, PauliType type) {
    PauliType other = type == PauliType::X ? PauliType::Z : PauliType::X;
    auto commute_with = stabiliser_rows(code, other);
    auto own = stabiliser_rows(code, type);
    EchelonBasis span(code.n);
    for (const auto &r : own) {
        span.add(r);
    }
    for (auto &v : nullspace(commute_with, code.n)) {
        if (!span.contains(v)) {
            return v;
        }
    }
    return std::nullopt;
}

std::optional<LogicalWeight> graph_min_logical(const CssCode &code, PauliType type) {
    const auto &checks = type == PauliType::X ? code.z_stabs : code.x_stabs;
    PauliType conj = type == PauliType::X ? PauliType::Z : PauliType::X;
    auto anti = find_logical(code, conj);
    if (!anti) {
        return std::nullopt;
    }
    int boundary = static_cast<int>(checks.size());
    std::vector<std::vector<int>> inc(code.n);
    for (std::size_t s = 0; s < checks.size(); s++) {
        for (int q : checks[s]) {
            inc[q].push_back(static_cast<int>(s));
        }
    }
    struct Arc {
        int to;
        int qubit;
        int parity;
    };
    std::vector<std::vector<Arc>> adj(checks.size() + 1);
    for (std::size_t q = 0; q < code.n; q++) {
        if (inc[q].size() > 2) {
            return std::nullopt;
        }
        int u = inc[q].size() > 0 ? inc[q][0] : boundary;
        int v = inc[q].size() > 1 ? inc[q][1] : boundary;
        int par = anti->test(q) ? 1 : 0;
        adj[u].push_back({v, static_cast<int>(q), par});
        if (u != v) {
            adj[v].push_back({u, static_cast<int>(q), par});
        }
    }
    int num = boundary + 1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<int> best_edges;
    std::vector<int> dist(2 * num);
    std::vector<int> parent_qubit(2 * num);
    std::vector<int> parent_state(2 * num);
    for (int src = 0; src < num; src++) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue;
        int start = 2 * src;
        dist[start] = 0;
        queue.push_back(start);
        int goal = 2 * src + 1;
        while (!queue.empty() && dist[goal] < 0) {
            int st = queue.front();
            queue.pop_front();
            if (static_cast<std::size_t>(dist[st]) + 1 >= best) {
                break;
            }
            int u = st / 2;
            int p = st % 2;
            for (const auto &arc : adj[u]) {
                int nx = 2 * arc.to + (p ^ arc.parity);
                if (dist[nx] < 0) {
                    dist[nx] = dist[st] + 1;
                    parent_qubit[nx] = arc.qubit;
                    parent_state[nx] = st;
                    queue.push_back(nx);
                }
            }
        }
        if (dist[goal] >= 0 && static_cast<std::size_t>(dist[goal]) < best) {
            best = static_cast<std::size_t>(dist[goal]);
            best_edges.clear();
            for (int st = goal; st != start; st = parent_state[st]) {
                best_edges.push_back(parent_qubit[st]);
            }
        }
    }
    if (best_edges.empty()) {
        return std::nullopt;
    }
    Bits rep(code.n);
    for (int q : best_edges) {
        rep.flip(static_cast<std::size_t>(q));
    }
    LogicalWeight out;
    out.representative = support_of(rep);
    out.weight = out.representative.size();
    out.method = WeightMethod::ShortestOddCycle;
    out.exact = true;
    return out;
}

LogicalWeight enumerated_min_logical(const CssCode &code, PauliType type) {
    auto l = find_logical(code, type);
    if (!l) {
        throw std::invalid_argument("code has no logical operator of the requested type");
    }
    auto own = stabiliser_rows(code, type);
    LogicalWeight out;
    out.weight = coset_min_weight(*l, own, code.n);
    out.method = WeightMethod::Enumeration;
    out.exact = true;
    out.representative = support_of(*l);
    return out;
}

LogicalWeight min_weight_logical(const CssCode &code, PauliType type) {
    if (logical_qubit_count(code) != 1) {
        throw std::invalid_argument("minimum logical weight requires a code with exactly one logical qubit");
    }
    if (auto g = graph_min_logical(code, type)) {
        return *g;
    }
    return enumerated_min_logical(code, type);
}

std::vector<int> min_edge_cut(int num_nodes, const std::vector<std::pair<int, int>> &edges, int s, int t,
                              std::vector<std::vector<int>> *paths) {
    // Each undirected edge carries flow in at most one direction.
    std::vector<int> flow(edges.size(), 0);  // +1: first->second, -1: reverse
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(num_nodes));
    for (std::size_t e = 0; e < edges.size(); e++) {
        inc[edges[e].first].push_back(static_cast<int>(e));
        if (edges[e].first != edges[e].second) {
            inc[edges[e].second].push_back(static_cast<int>(e));
        }
    }
    auto residual_to = [&](int u, int e) -> int {
        const auto &[a, b] = edges[e];
        if (a == b) {
            return -1;
        }
        if (u == a && flow[e] <= 0) {
            return b;
        }
        if (u == b && flow[e] >= 0) {
            return a;
        }
        return -1;
    };
    std::vector<int> via(static_cast<std::size_t>(num_nodes));
    while (true) {
        std::fill(via.begin(), via.end(), -2);
        via[s] = -1;
        std::deque<int> queue{s};
        while (!queue.empty() && via[t] == -2) {
            int u = queue.front();
            queue.pop_front();
            for (int e : inc[u]) {
                int v = residual_to(u, e);
                if (v >= 0 && via[v] == -2) {
                    via[v] = e;
                    queue.push_back(v);
                }
            }
        }
        if (via[t] == -2) {
            break;
        }
        for (int v = t; v != s;) {
            int e = via[v];
            const auto &[a, b] = edges[e];
            int u = v == b ? a : b;
            flow[e] += v == b ? 1 : -1;
            v = u;
        }
    }
    std::vector<int> cut;
    for (std::size_t e = 0; e < edges.size(); e++) {
        const auto &[a, b] = edges[e];
        if ((via[a] != -2) != (via[b] != -2)) {
            cut.push_back(static_cast<int>(e));
        }
    }
    if (paths) {
        paths->clear();
        std::vector<int> f = flow;
        while (true) {
            std::vector<int> path;
            int u = s;
            while (u != t) {
                int next = -1;
                for (int e : inc[u]) {
                    const auto &[a, b] = edges[e];
                    if (u == a && f[e] > 0) {
                        next = e;
                        break;
                    }
                    if (u == b && f[e] < 0) {
                        next = e;
                        break;
                    }
                }
                if (next < 0) {
                    break;
                }
                const auto &[a, b] = edges[next];
                f[next] = 0;
                path.push_back(next);
                u = u == a ? b : a;
            }
            if (u != t) {
                break;
            }
            paths->push_back(std::move(path));
        }
    }
    return cut;
}

}  // namespace jitslice
