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

#include "jitslice/channel.h"

#include <cmath>
#include <stdexcept>

namespace jitslice {

TrialRng make_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32),
                      0x6a17u};
    return TrialRng(seq);
}

ErrorState empty_errors(const SliceGeometry &slice) {
    return {Bits(slice.qubits.size()), Bits(slice.zfaces.size())};
}

namespace {

/// Calls f(i) for each i in [0, n) hit by an independent Bernoulli(p) trial.
/// Gaps between hits are geometric, which needs one draw per hit.
template <typename F>
void bernoulli_hits(std::size_t n, double p, TrialRng &rng, F &&f) {
    if (p <= 0.0 || n == 0) {
        return;
    }
    if (p >= 1.0) {
        for (std::size_t i = 0; i < n; i++) {
            f(i);
        }
        return;
    }
    std::geometric_distribution<std::size_t> gap(p);
    std::size_t i = gap(rng);
    while (i < n) {
        f(i);
        i += 1 + gap(rng);
    }
}

}  // namespace

ErrorState sample_errors(const SliceGeometry &slice, const NoiseParams &params, TrialRng &rng,
                         const Bits *carried_bottom) {
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw std::invalid_argument("error probability must lie in [0, 1]");
    }
    ErrorState e = empty_errors(slice);
    if (carried_bottom) {
        for (auto q = carried_bottom->find_first(); q != Bits::npos; q = carried_bottom->find_next(q)) {
            if (slice.layer[q] != 0) {
                throw std::invalid_argument("carried errors must lie on the bottom layer");
            }
            e.x_errors.set(q);
        }
    }
    const auto &fresh = slice.fresh_qubits;
    bernoulli_hits(fresh.size(), params.p, rng, [&](std::size_t i) { e.x_errors.flip(fresh[i]); });
    const auto &faces = slice.new_faces;
    bernoulli_hits(faces.size(), params.p, rng, [&](std::size_t i) { e.meas_flips.set(faces[i]); });
    return e;
}

SyndromeState compute_syndrome(const SliceGeometry &slice, const ErrorState &errors) {
    SyndromeState s{Bits(slice.zfaces.size())};
    for (auto q = errors.x_errors.find_first(); q != Bits::npos; q = errors.x_errors.find_next(q)) {
        for (int f : slice.faces_of_qubit[q]) {
            s.flagged.flip(static_cast<std::size_t>(f));
        }
    }
    s.flagged ^= errors.meas_flips;
    for (std::size_t f = 0; f < slice.zfaces.size(); f++) {
        if (slice.zfaces[f].bottom) {
            s.flagged.reset(f);
        }
    }
    return s;
}

std::vector<int> extract_endpoints(const SyndromeState &syndrome, const SliceGeometry &slice) {
    const auto &d = slice.dual;
    std::vector<char> parity(static_cast<std::size_t>(d.num_real), 0);
    const auto &flagged = syndrome.flagged;
    for (auto f = flagged.find_first(); f != Bits::npos; f = flagged.find_next(f)) {
        const auto &ends = d.face_ends[f];
        if (ends[0] < 0) {
            continue;
        }
        if (ends[0] == ends[1]) {
            continue;
        }
        for (int v : ends) {
            if (v < d.num_real) {
                parity[v] ^= 1;
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < d.num_real; v++) {
        if (parity[v]) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace jitslice
