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

#include <fstream>
#include <map>
#include <sstream>

#include "jitslice/lattice.h"
#include "jitslice/validate.h"

namespace jitslice {
namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    char code;
    int L;
    int t;
};

class GoldenListing : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenListing, MatchesBoxEnumeration) {
    auto c = GetParam();
    std::string path = std::string(JITSLICE_GOLDEN_DIR) + "/slice_" + c.code + "_L" + std::to_string(c.L) + "_t" +
                       std::to_string(c.t) + ".txt";
    std::string expected = read_file(path);
    ASSERT_FALSE(expected.empty()) << path;
    auto slice = build_slice(parse_code(std::string(1, c.code)), c.L, c.t);
    EXPECT_EQ(golden_listing(*slice), expected);
}

INSTANTIATE_TEST_SUITE_P(Slices, GoldenListing,
                         ::testing::Values(GoldenCase{'A', 3, 0}, GoldenCase{'A', 3, 1}, GoldenCase{'A', 5, 0},
                                           GoldenCase{'A', 7, 0}, GoldenCase{'B', 3, 0}, GoldenCase{'B', 3, 1},
                                           GoldenCase{'B', 5, 0}, GoldenCase{'B', 7, 0}, GoldenCase{'C', 3, 0},
                                           GoldenCase{'C', 3, 1}, GoldenCase{'C', 5, 0}, GoldenCase{'C', 7, 0}),
                         [](const auto &info) {
                             return std::string(1, info.param.code) + "_L" + std::to_string(info.param.L) + "_t" +
                                    std::to_string(info.param.t);
                         });

class SliceValidity : public ::testing::TestWithParam<std::tuple<CodeLabel, int, int>> {};

TEST_P(SliceValidity, AllChecksPass) {
    auto [code, L, t] = GetParam();
    auto report = validate_slice(*build_slice(code, L, t));
    for (const auto &c : report.checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
    EXPECT_TRUE(report.passed());
}

INSTANTIATE_TEST_SUITE_P(Codes, SliceValidity,
                         ::testing::Combine(::testing::ValuesIn(kAllCodes), ::testing::Values(3, 5, 7),
                                            ::testing::Values(0, 1, 2)),
                         [](const auto &info) {
                             return std::string(1, code_char(std::get<0>(info.param))) + "_L" +
                                    std::to_string(std::get<1>(info.param)) + "_t" +
                                    std::to_string(std::get<2>(info.param));
                         });

TEST(LogicalWeights, DistanceThreeValues) {
    for (CodeLabel code : kAllCodes) {
        auto slice = build_slice(code, 3, 0);
        auto z = min_logical_weight(*slice, PauliType::Z);
        EXPECT_TRUE(z.exact);
        EXPECT_EQ(z.weight, 3u) << code_char(code);
        auto layer = build_layer(code, 3, 0);
        auto lx = min_logical_weight(*layer, PauliType::X);
        auto lz = min_logical_weight(*layer, PauliType::Z);
        bool c = code == CodeLabel::C;
        EXPECT_EQ(lx.weight, c ? 5u : 3u) << code_char(code);
        EXPECT_EQ(lz.weight, c ? 3u : 5u) << code_char(code);
    }
}

TEST(LogicalWeights, SliceXByEnumerationAtDistanceThree) {
    std::map<CodeLabel, std::size_t> expected = {{CodeLabel::A, 8}, {CodeLabel::B, 11}, {CodeLabel::C, 12}};
    for (CodeLabel code : kAllCodes) {
        auto x = min_logical_weight(*build_slice(code, 3, 0), PauliType::X);
        EXPECT_TRUE(x.exact);
        EXPECT_EQ(x.weight, expected[code]) << code_char(code);
    }
}

TEST(Geometry, SlicesAdvanceByDisplacement) {
    for (CodeLabel code : kAllCodes) {
        auto s0 = build_slice(code, 5, 0);
        auto s1 = build_slice(code, 5, 1);
        Coord d = slice_displacement(code);
        ASSERT_EQ(s0->num_qubits(), s1->num_qubits());
        for (std::size_t q = 0; q < s0->num_qubits(); q++) {
            int r = s1->find_qubit(s0->qubits[q] + d);
            ASSERT_GE(r, 0);
            EXPECT_EQ(s1->layer[r], s0->layer[q]);
        }
        auto top0 = s0->layer_qubits(2);
        for (int q : top0) {
            int r = s1->find_qubit(s0->qubits[q]);
            ASSERT_GE(r, 0);
            EXPECT_EQ(s1->layer[r], 0);
        }
    }
}

TEST(Geometry, RejectsBadDistance) {
    EXPECT_THROW(build_slice(CodeLabel::A, 4, 0), std::invalid_argument);
    EXPECT_THROW(build_slice(CodeLabel::A, 1, 0), std::invalid_argument);
    EXPECT_THROW(build_slice(CodeLabel::A, 3, -1), std::invalid_argument);
}

TEST(Geometry, FreshQubitsAndNewFaces) {
    for (CodeLabel code : kAllCodes) {
        auto s = build_slice(code, 3, 0);
        for (int q : s->fresh_qubits) {
            EXPECT_NE(s->layer[q], 0);
        }
        EXPECT_EQ(s->fresh_qubits.size() + s->layer_qubits(0).size(), s->num_qubits());
        for (int f : s->new_faces) {
            EXPECT_FALSE(s->zfaces[f].bottom);
        }
    }
}

TEST(Overlap, TriplesAndUniqueMembership) {
    for (int L : {3, 5, 7}) {
        auto central = cubic_overlap_sites(L);
        int steps = sweep_length(L);
        std::map<Coord, int> non_top;
        for (int t = 0; t <= steps; t++) {
            auto triples = overlap_triples(L, t);
            int base = slice_base_plane(t);
            for (const auto &[a, b, c] : triples) {
                EXPECT_EQ(a, b);
                EXPECT_EQ(b, c);
                if (!central.count(a)) {
                    continue;
                }
                if ((a.sum() - base) / 2 < 2) {
                    non_top[a]++;
                }
            }
            if (t == steps) {
                EXPECT_TRUE(triples.empty()) << "L=" << L;
            }
        }
        EXPECT_EQ(non_top.size(), central.size()) << "L=" << L;
        for (const auto &[site, count] : non_top) {
            EXPECT_EQ(count, 1) << site.str();
        }
    }
}

}  // namespace
}  // namespace jitslice
