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

#include <random>

#include "jitslice/css.h"
#include "jitslice/gf2.h"

namespace jitslice {
namespace {

Bits random_bits(std::size_t n, std::mt19937 &g, double density = 0.5) {
    std::bernoulli_distribution b(density);
    Bits out(n);
    for (std::size_t i = 0; i < n; i++) {
        if (b(g)) {
            out.set(i);
        }
    }
    return out;
}

/// Every x in GF(2)^n with A x = rhs, by enumeration.
std::vector<Bits> all_solutions(const std::vector<Bits> &eqs, const Bits &rhs, std::size_t n) {
    std::vector<Bits> out;
    for (std::uint64_t m = 0; m < (1ULL << n); m++) {
        Bits x(n, m);
        bool ok = true;
        for (std::size_t i = 0; i < eqs.size() && ok; i++) {
            ok = odd_overlap(eqs[i], x) == rhs.test(i);
        }
        if (ok) {
            out.push_back(x);
        }
    }
    return out;
}

TEST(Gf2, SolverAgreesWithEnumeration) {
    std::mt19937 g(11);
    for (int it = 0; it < 300; it++) {
        std::size_t n = 1 + g() % 10;
        std::size_t m = 1 + g() % 12;
        std::vector<Bits> eqs;
        for (std::size_t i = 0; i < m; i++) {
            eqs.push_back(random_bits(n, g, 0.4));
        }
        LinearSolver solver(eqs, n);
        Bits rhs = random_bits(m, g);
        auto sols = all_solutions(eqs, rhs, n);
        auto x = solver.solve(rhs);
        ASSERT_EQ(x.has_value(), !sols.empty());
        if (x) {
            EXPECT_NE(std::find(sols.begin(), sols.end(), *x), sols.end());
        }
        auto zero = all_solutions(eqs, Bits(m), n);
        EXPECT_EQ(std::size_t{1} << solver.kernel_basis().size(), zero.size());
        EXPECT_EQ(solver.rank(), n - solver.kernel_basis().size());
    }
}

TEST(Gf2, RankAndNullspace) {
    std::mt19937 g(5);
    for (int it = 0; it < 200; it++) {
        std::size_t n = 1 + g() % 9;
        std::vector<Bits> rows;
        for (int i = 0; i < 1 + static_cast<int>(g() % 8); i++) {
            rows.push_back(random_bits(n, g));
        }
        auto ns = nullspace(rows, n);
        auto zero = all_solutions(rows, Bits(rows.size()), n);
        EXPECT_EQ(std::size_t{1} << ns.size(), zero.size());
        EXPECT_EQ(gf2_rank(rows, n) + ns.size(), n);
        for (const auto &v : ns) {
            for (const auto &r : rows) {
                EXPECT_FALSE(odd_overlap(v, r));
            }
        }
    }
}

TEST(Gf2, CosetMinWeightByEnumeration) {
    std::mt19937 g(3);
    for (int it = 0; it < 100; it++) {
        std::size_t n = 4 + g() % 8;
        std::vector<Bits> rows;
        for (int i = 0; i < 1 + static_cast<int>(g() % 5); i++) {
            rows.push_back(random_bits(n, g));
        }
        Bits v = random_bits(n, g);
        std::size_t best = v.count();
        for (std::uint64_t m = 0; m < (1ULL << rows.size()); m++) {
            Bits w = v;
            for (std::size_t i = 0; i < rows.size(); i++) {
                if (m >> i & 1) {
                    w ^= rows[i];
                }
            }
            best = std::min(best, w.count());
        }
        EXPECT_EQ(coset_min_weight(v, rows, n), best);
    }
}

TEST(Css, RepetitionCodeLogicals) {
    // Three-qubit repetition code: Z stabilisers Z0Z1, Z1Z2; X logical XXX.
    CssCode code{3, {{0, 1}, {1, 2}}, {}};
    EXPECT_EQ(logical_qubit_count(code), 1);
    auto lx = min_weight_logical(code, PauliType::X);
    EXPECT_EQ(lx.weight, 3u);
    auto lz = min_weight_logical(code, PauliType::Z);
    EXPECT_EQ(lz.weight, 1u);
}

TEST(Css, MinCutOnParallelPaths) {
    // Three edge-disjoint paths between 0 and 4 plus a shortcut edge.
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}, {1, 2}};
    std::vector<std::vector<int>> paths;
    auto cut = min_edge_cut(5, edges, 0, 4, &paths);
    EXPECT_EQ(cut.size(), 3u);
    EXPECT_EQ(paths.size(), 3u);
}

}  // namespace
}  // namespace jitslice
