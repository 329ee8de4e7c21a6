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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "jitslice/channel.h"

namespace jitslice {
namespace {

TEST(Channel, ZeroNoiseIsEmpty) {
    auto s = build_slice(CodeLabel::B, 5, 0);
    auto rng = make_trial_rng(1, 0);
    auto e = sample_errors(*s, {0.0}, rng);
    EXPECT_TRUE(e.x_errors.none());
    EXPECT_TRUE(e.meas_flips.none());
    EXPECT_TRUE(extract_endpoints(compute_syndrome(*s, e), *s).empty());
}

TEST(Channel, UnitNoiseHitsExactlyFreshSites) {
    auto s = build_slice(CodeLabel::A, 5, 1);
    auto rng = make_trial_rng(1, 0);
    auto e = sample_errors(*s, {1.0}, rng);
    for (std::size_t q = 0; q < s->num_qubits(); q++) {
        EXPECT_EQ(e.x_errors.test(q), s->layer[q] != 0);
    }
    std::set<int> fresh_faces(s->new_faces.begin(), s->new_faces.end());
    for (std::size_t f = 0; f < s->num_faces(); f++) {
        EXPECT_EQ(e.meas_flips.test(f), fresh_faces.count(static_cast<int>(f)) == 1);
    }
}

TEST(Channel, CarriedErrorsStay) {
    auto s = build_slice(CodeLabel::C, 3, 1);
    Bits carried(s->num_qubits());
    auto bottom = s->layer_qubits(0);
    carried.set(static_cast<std::size_t>(bottom.front()));
    carried.set(static_cast<std::size_t>(bottom.back()));
    auto rng = make_trial_rng(3, 4);
    auto e = sample_errors(*s, {0.0}, rng, &carried);
    EXPECT_EQ(e.x_errors, carried);
}

TEST(Channel, FrequencyIsBinomial) {
    auto s = build_slice(CodeLabel::A, 5, 0);
    const double p = 0.05;
    const int samples = 2000;
    std::size_t sites = s->fresh_qubits.size() + s->new_faces.size();
    std::size_t hits = 0;
    for (int i = 0; i < samples; i++) {
        auto rng = make_trial_rng(11, static_cast<std::uint64_t>(i));
        auto e = sample_errors(*s, {p}, rng);
        hits += e.x_errors.count() + e.meas_flips.count();
    }
    double n = static_cast<double>(sites) * samples;
    double sigma = std::sqrt(n * p * (1 - p));
    EXPECT_LT(std::abs(static_cast<double>(hits) - n * p), 5 * sigma);
}

TEST(Channel, StreamsAreKeyedBySeedAndIndex) {
    auto a = make_trial_rng(5, 9);
    auto b = make_trial_rng(5, 9);
    auto c = make_trial_rng(5, 10);
    auto d = make_trial_rng(6, 9);
    auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
}

TEST(Channel, SyndromeIsLinear) {
    auto s = build_slice(CodeLabel::B, 5, 1);
    for (int i = 0; i < 50; i++) {
        auto r1 = make_trial_rng(21, static_cast<std::uint64_t>(2 * i));
        auto r2 = make_trial_rng(21, static_cast<std::uint64_t>(2 * i + 1));
        auto e1 = sample_errors(*s, {0.1}, r1);
        auto e2 = sample_errors(*s, {0.1}, r2);
        ErrorState sum{e1.x_errors ^ e2.x_errors, e1.meas_flips ^ e2.meas_flips};
        EXPECT_EQ(compute_syndrome(*s, sum).flagged,
                  compute_syndrome(*s, e1).flagged ^ compute_syndrome(*s, e2).flagged);
    }
}

TEST(Channel, EndpointsAreOddVertices) {
    auto s = build_slice(CodeLabel::C, 5, 0);
    const auto &d = s->dual;
    for (int i = 0; i < 50; i++) {
        auto rng = make_trial_rng(31, static_cast<std::uint64_t>(i));
        auto syn = compute_syndrome(*s, sample_errors(*s, {0.02}, rng));
        std::vector<int> deg(d.num_nodes(), 0);
        for (std::size_t f = 0; f < s->num_faces(); f++) {
            if (syn.flagged.test(f) && d.face_ends[f][0] >= 0) {
                deg[d.face_ends[f][0]] ^= 1;
                deg[d.face_ends[f][1]] ^= 1;
            }
        }
        std::vector<int> expected;
        for (int v = 0; v < d.num_real; v++) {
            if (deg[v]) {
                expected.push_back(v);
            }
        }
        EXPECT_EQ(extract_endpoints(syn, *s), expected);
    }
}

TEST(Channel, MiddleQubitErrorFlagsItsFaces) {
    auto s = build_slice(CodeLabel::A, 3, 0);
    int q = s->layer_qubits(1).front();
    ErrorState e = empty_errors(*s);
    e.x_errors.set(static_cast<std::size_t>(q));
    auto syn = compute_syndrome(*s, e);
    std::set<int> flagged;
    for (auto f = syn.flagged.find_first(); f != Bits::npos; f = syn.flagged.find_next(f)) {
        flagged.insert(static_cast<int>(f));
    }
    EXPECT_EQ(flagged, std::set<int>(s->faces_of_qubit[q].begin(), s->faces_of_qubit[q].end()));
}

}  // namespace
}  // namespace jitslice
