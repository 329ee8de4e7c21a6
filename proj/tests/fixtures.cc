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

#include "fixtures.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace jitslice::testing {

std::int64_t brute_force_boundary_matching(const std::vector<std::vector<std::int64_t>> &pw,
                                           const std::vector<std::int64_t> &bw) {
    int k = static_cast<int>(bw.size());
    std::vector<char> used(k, 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::function<void(std::int64_t)> rec = [&](std::int64_t acc) {
        int i = 0;
        while (i < k && used[i]) {
            i++;
        }
        if (i == k) {
            best = std::min(best, acc);
            return;
        }
        used[i] = 1;
        rec(acc + bw[i]);
        for (int j = i + 1; j < k; j++) {
            if (!used[j]) {
                used[j] = 1;
                rec(acc + pw[i][j]);
                used[j] = 0;
            }
        }
        used[i] = 0;
    };
    rec(0);
    return best;
}

std::int64_t matching_weight(const std::vector<int> &partner, const std::vector<std::vector<std::int64_t>> &pw,
                             const std::vector<std::int64_t> &bw) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < partner.size(); i++) {
        if (partner[i] < 0) {
            w += bw[i];
        } else if (partner[i] > static_cast<int>(i)) {
            if (partner[partner[i]] != static_cast<int>(i)) {
                throw std::logic_error("partner vector is not symmetric");
            }
            w += pw[i][partner[i]];
        }
    }
    return w;
}

DelayedPairScenario find_delayed_pair(const SliceGeometry &slice, int distance) {
    const auto &d = slice.dual;
    std::vector<int> top_adjacent;
    for (int v = 0; v < d.num_real; v++) {
        for (const auto &inc : d.adjacency[v]) {
            if (inc.neighbour == d.top()) {
                top_adjacent.push_back(v);
                break;
            }
        }
    }
    auto side_distance = [&](const std::vector<int> &dist) {
        int s1 = dist[d.side_x1()];
        int s2 = dist[d.side_x2()];
        return std::min(s1 < 0 ? 1 << 20 : s1, s2 < 0 ? 1 << 20 : s2);
    };
    int best_score = -1;
    DelayedPairScenario best;
    for (int u : top_adjacent) {
        auto du = dual_bfs(slice, u);
        int bu = side_distance(du);
        for (int v : top_adjacent) {
            if (v <= u || du[v] != distance) {
                continue;
            }
            int bv = side_distance(dual_bfs(slice, v));
            if (bu + bv <= distance) {
                continue;
            }
            int score = std::min(bu, bv);
            if (score > best_score) {
                best_score = score;
                best.a = d.centre[u];
                best.b = d.centre[v];
            }
        }
    }
    if (best_score < 0) {
        throw std::runtime_error("no delayed pair in this slice");
    }
    best.flipped_faces = path_between(PairElement::endpoint(best.a), PairElement::endpoint(best.b), slice);
    return best;
}

ScenarioRun run_delayed_pair(const TrialConfig &config, const SliceCache &cache, const DelayedPairScenario &s) {
    ScenarioRun run;
    TrialHooks hooks;
    hooks.noise = [&](int t, const SliceGeometry &slice, const Bits &carried) {
        ErrorState e = empty_errors(slice);
        e.x_errors = carried;
        if (t == 0) {
            for (int f : s.flipped_faces) {
                e.meas_flips.set(static_cast<std::size_t>(f));
            }
        } else {
            ErrorState only_carried{carried, Bits(slice.num_faces())};
            run.carried_endpoints.push_back(extract_endpoints(compute_syndrome(slice, only_carried), slice).size());
        }
        return e;
    };
    PseudoDistanceMap memory;
    hooks.observe = [&](int t, const DecodeResult &res, const CorrectionOp &) {
        StepRecord step;
        step.before = memory;
        step.result = res;
        for (const auto &mp : res.matching) {
            for (const auto *e : {&mp.key.first, &mp.key.second}) {
                if (!e->is_boundary) {
                    step.endpoints.push_back(e->centre);
                }
            }
        }
        std::sort(step.endpoints.begin(), step.endpoints.end());
        memory = res.next;
        run.steps.push_back(std::move(step));
        (void)t;
    };
    TrialConfig cfg = config;
    cfg.p = 0.0;
    run.failed = run_trial(cfg, 0, cache, &hooks);
    return run;
}

SingleFaultSummary exhaustive_single_faults(const TrialConfig &config, const SliceCache &cache) {
    SingleFaultSummary out;
    TrialConfig cfg = config;
    cfg.p = 0.0;
    for (int t = 0; t < cache.timesteps(); t++) {
        const auto &slice = cache.slice(t);
        for (int kind = 0; kind < 2; kind++) {
            const auto &sites = kind == 0 ? slice.fresh_qubits : slice.new_faces;
            for (int site : sites) {
                TrialHooks hooks;
                hooks.noise = [&](int tt, const SliceGeometry &s, const Bits &carried) {
                    ErrorState e = empty_errors(s);
                    e.x_errors = carried;
                    if (tt == t) {
                        if (kind == 0) {
                            e.x_errors.flip(static_cast<std::size_t>(site));
                        } else {
                            e.meas_flips.set(static_cast<std::size_t>(site));
                        }
                    }
                    return e;
                };
                bool failed = run_trial(cfg, 0, cache, &hooks);
                (kind == 0 ? out.qubit_faults : out.face_faults)++;
                if (failed) {
                    (kind == 0 ? out.qubit_failures : out.face_failures)++;
                    std::string what = "t=" + std::to_string(t);
                    if (kind == 0) {
                        what += " qubit " + slice.qubits[site].str();
                    } else {
                        const auto &f = slice.zfaces[site];
                        what += " face " + f.cells[0].str() + "|" + f.cells[1].str();
                    }
                    out.failing.push_back(what);
                }
            }
        }
    }
    return out;
}

}  // namespace jitslice::testing
