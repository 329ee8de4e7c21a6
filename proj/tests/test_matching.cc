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

#include <functional>
#include <random>

#include "fixtures.h"
#include "jitslice/blossom.h"
#include "jitslice/decoder.h"

namespace jitslice {
namespace {

std::int64_t brute_force_perfect(const std::vector<std::vector<std::int64_t>> &w) {
    int n = static_cast<int>(w.size());
    std::vector<char> used(n, 0);
    std::int64_t best = INT64_MAX;
    std::function<void(std::int64_t)> rec = [&](std::int64_t acc) {
        int i = 0;
        while (i < n && used[i]) {
            i++;
        }
        if (i == n) {
            best = std::min(best, acc);
            return;
        }
        used[i] = 1;
        for (int j = i + 1; j < n; j++) {
            if (!used[j]) {
                used[j] = 1;
                rec(acc + w[i][j]);
                used[j] = 0;
            }
        }
        used[i] = 0;
    };
    rec(0);
    return best;
}

TEST(Blossom, PerfectMatchingIsOptimal) {
    std::mt19937 g(17);
    for (int it = 0; it < 2000; it++) {
        int n = 2 * (1 + static_cast<int>(g() % 5));
        std::int64_t range = it % 3 == 0 ? 3 : 40;
        std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                w[i][j] = w[j][i] = static_cast<std::int64_t>(g() % range);
            }
        }
        auto mate = min_weight_perfect_matching(w);
        std::int64_t total = 0;
        for (int i = 0; i < n; i++) {
            ASSERT_GE(mate[i], 0);
            ASSERT_EQ(mate[mate[i]], i);
            if (mate[i] > i) {
                total += w[i][mate[i]];
            }
        }
        ASSERT_EQ(total, brute_force_perfect(w)) << "instance " << it;
    }
}

TEST(Blossom, MaxWeightMatchingSmallCases) {
    EXPECT_TRUE(max_weight_matching(0, {}, false).empty());
    auto m = max_weight_matching(4, {{0, 1, 5}, {1, 2, 11}, {2, 3, 5}}, false);
    EXPECT_EQ(m[1], 2);
    EXPECT_EQ(m[0], -1);
    m = max_weight_matching(4, {{0, 1, 5}, {1, 2, 11}, {2, 3, 5}}, true);
    EXPECT_EQ(m[0], 1);
    EXPECT_EQ(m[2], 3);
    // Odd cycle forcing a blossom.
    m = max_weight_matching(6, {{0, 1, 9}, {0, 2, 8}, {1, 2, 10}, {0, 3, 5}, {3, 4, 4}, {0, 5, 3}}, false);
    EXPECT_EQ(m[1], 2);
    EXPECT_EQ(m[0], 5);
    EXPECT_EQ(m[3], 4);
}

TEST(BoundaryMatching, MatchesBruteForce) {
    std::mt19937 g(23);
    for (int it = 0; it < 1000; it++) {
        int k = 1 + static_cast<int>(g() % 8);
        std::vector<std::vector<std::int64_t>> pw(k, std::vector<std::int64_t>(k, 0));
        std::vector<std::int64_t> bw(k);
        for (int i = 0; i < k; i++) {
            bw[i] = 1 + static_cast<std::int64_t>(g() % 9);
            for (int j = i + 1; j < k; j++) {
                pw[i][j] = pw[j][i] = 1 + static_cast<std::int64_t>(g() % 12);
            }
        }
        auto partner = boundary_matching(pw, bw);
        ASSERT_EQ(testing::matching_weight(partner, pw, bw), testing::brute_force_boundary_matching(pw, bw));
    }
}

TEST(BoundaryMatching, EmptyInput) { EXPECT_TRUE(boundary_matching({}, {}).empty()); }

}  // namespace
}  // namespace jitslice
