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

#include "jitslice/decoder.h"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <stdexcept>

#include "jitslice/blossom.h"

namespace jitslice {

void DecoderParams::check() const {
    if (c < 0) {
        throw std::invalid_argument("decoder join threshold c must be >= 0");
    }
    if (r < 1) {
        throw std::invalid_argument("decoder reduction r must be >= 1");
    }
}

std::vector<int> boundary_matching(const std::vector<std::vector<std::int64_t>> &pair_weight,
                                   const std::vector<std::int64_t> &boundary_weight) {
    int k = static_cast<int>(boundary_weight.size());
    if (k == 0) {
        return {};
    }
    std::int64_t total = 1;
    for (int i = 0; i < k; i++) {
        total += boundary_weight[i];
        for (int j = 0; j < k; j++) {
            if (i != j) {
                total += pair_weight[i][j];
            }
        }
    }
    std::vector<std::vector<std::int64_t>> w(2 * k, std::vector<std::int64_t>(2 * k, 0));
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            if (i != j) {
                w[i][j] = pair_weight[i][j];
            }
            w[i][k + j] = w[k + j][i] = i == j ? boundary_weight[i] : total;
        }
    }
    auto mate = min_weight_perfect_matching(w);
    std::vector<int> partner(k, -1);
    for (int i = 0; i < k; i++) {
        if (mate[i] < k) {
            partner[i] = mate[i];
        } else if (mate[i] != k + i) {
            throw std::logic_error("boundary matching used a foreign boundary copy");
        }
    }
    return partner;
}

Matching mwpm(const std::vector<int> &endpoints, const SliceGeometry &slice) {
    const auto &d = slice.dual;
    int k = static_cast<int>(endpoints.size());
    std::vector<std::vector<std::int64_t>> pw(k, std::vector<std::int64_t>(k, 0));
    std::vector<std::int64_t> bw(k, 0);
    std::vector<SideBoundary> side(k, SideBoundary::SideX1);
    const std::int64_t unreachable = 16LL * d.num_nodes();
    for (int i = 0; i < k; i++) {
        auto dist = dual_bfs(slice, endpoints[i]);
        for (int j = 0; j < k; j++) {
            int v = dist[endpoints[j]];
            pw[i][j] = v < 0 ? unreachable : v;
        }
        int s1 = dist[d.side_x1()];
        int s2 = dist[d.side_x2()];
        if (s1 < 0 && s2 < 0) {
            throw std::runtime_error("endpoint cannot reach a side boundary");
        }
        if (s1 >= 0 && (s2 < 0 || s1 <= s2)) {
            bw[i] = s1;
        } else {
            bw[i] = s2;
            side[i] = SideBoundary::SideX2;
        }
    }
    auto partner = boundary_matching(pw, bw);
    Matching out;
    for (int i = 0; i < k; i++) {
        auto a = PairElement::endpoint(d.centre[endpoints[i]]);
        if (partner[i] < 0) {
            out.push_back({PairKey(a, PairElement::boundary(side[i])), static_cast<int>(bw[i])});
        } else if (partner[i] > i) {
            if (pw[i][partner[i]] >= unreachable) {
                throw std::runtime_error("matched endpoints are disconnected");
            }
            auto b = PairElement::endpoint(d.centre[endpoints[partner[i]]]);
            out.push_back({PairKey(a, b), static_cast<int>(pw[i][partner[i]])});
        }
    }
    std::sort(out.begin(), out.end(), [](const MatchedPair &x, const MatchedPair &y) { return x.key < y.key; });
    return out;
}

DecodeResult delayed_match(const std::vector<int> &endpoints, const PseudoDistanceMap &memory,
                           const DecoderParams &params, const SliceGeometry &slice_t,
                           const TopEmergence *emergence, const SyndromeState &syndrome) {
    DecodeResult res;
    res.repaired = syndrome;
    res.matching = mwpm(endpoints, slice_t);

    PseudoDistanceMap current;
    for (const auto &mp : res.matching) {
        auto it = memory.find(mp.key);
        current[mp.key] = it != memory.end() ? it->second : mp.distance;
    }

    auto flip = [&](const std::vector<int> &faces) {
        for (int f : faces) {
            res.repaired.flagged.flip(static_cast<std::size_t>(f));
        }
    };
    for (const auto &mp : res.matching) {
        int value = current.at(mp.key);
        if (value <= params.c) {
            flip(path_between(mp.key.first, mp.key.second, slice_t));
            res.joined.push_back(mp.key);
            continue;
        }
        for (const auto *e : {&mp.key.first, &mp.key.second}) {
            if (!e->is_boundary) {
                flip(path_to_top(e->centre, slice_t));
            }
        }
        res.deferred.push_back(mp.key);
        if (emergence) {
            PairKey moved = emergence->translate(mp.key);
            if (moved.first.is_boundary && moved.second.is_boundary) {
                continue;
            }
            int reduced = value - params.r;
            auto [it, inserted] = res.next.emplace(moved, reduced);
            if (!inserted) {
                it->second = std::min(it->second, reduced);
            }
        }
    }
    return res;
}

DecodeResult delayed_match(const std::vector<int> &endpoints, const PseudoDistanceMap &memory,
                           const DecoderParams &params, const SliceGeometry &slice_t,
                           const SliceGeometry &slice_next, const SyndromeState &syndrome) {
    TopEmergence emergence(slice_t, slice_next);
    return delayed_match(endpoints, memory, params, slice_t, &emergence, syndrome);
}

bool loop_check(const SyndromeState &syndrome, const SliceGeometry &slice) {
    return extract_endpoints(syndrome, slice).empty();
}

namespace {

nlohmann::json element_json(const PairElement &e) {
    if (e.is_boundary) {
        return e.str();
    }
    return nlohmann::json::array({e.centre.x, e.centre.y, e.centre.z});
}

nlohmann::json memory_json(const PseudoDistanceMap &m) {
    auto out = nlohmann::json::array();
    for (const auto &[key, value] : m) {
        out.push_back({{"a", element_json(key.first)}, {"b", element_json(key.second)}, {"value", value}});
    }
    return out;
}

}  // namespace

std::string trace_record(int trial, int timestep, const std::vector<int> &endpoints, const SliceGeometry &slice,
                         const PseudoDistanceMap &before, const DecodeResult &result) {
    nlohmann::json rec;
    rec["trial"] = trial;
    rec["timestep"] = timestep;
    rec["code"] = std::string(1, code_char(slice.code));
    rec["L"] = slice.L;
    auto eps = nlohmann::json::array();
    for (int v : endpoints) {
        eps.push_back(element_json(PairElement::endpoint(slice.dual.centre[v])));
    }
    rec["endpoints"] = eps;
    auto matching = nlohmann::json::array();
    for (const auto &mp : result.matching) {
        bool joined = std::find(result.joined.begin(), result.joined.end(), mp.key) != result.joined.end();
        matching.push_back({{"a", element_json(mp.key.first)},
                            {"b", element_json(mp.key.second)},
                            {"distance", mp.distance},
                            {"action", joined ? "join" : "top"}});
    }
    rec["matching"] = matching;
    rec["memory_before"] = memory_json(before);
    rec["memory_after"] = memory_json(result.next);
    return rec.dump();
}

}  // namespace jitslice
