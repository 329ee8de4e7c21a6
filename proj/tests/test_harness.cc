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
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "jitslice/harness.h"

namespace jitslice {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_file(const std::string &name) {
    auto dir = fs::temp_directory_path() / ("jitslice_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
    fs::create_directories(dir);
    auto p = dir / name;
    fs::remove(p);
    return p;
}

TEST(AgrestiCoull, ReferenceValues) {
    auto zero = agresti_coull(0, 100);
    EXPECT_NEAR(zero.center, 2.0 / 104.0, 1e-12);
    EXPECT_NEAR(zero.halfwidth, 2.0 * std::sqrt((2.0 / 104.0) * (102.0 / 104.0) / 104.0), 1e-12);
    EXPECT_NEAR(zero.center, 0.019231, 5e-7);
    EXPECT_NEAR(zero.halfwidth, 0.026934, 5e-7);
    EXPECT_EQ(zero.lower_clamped(), 0.0);
    auto ten = agresti_coull(10, 100);
    EXPECT_NEAR(ten.center, 0.115385, 5e-7);
    EXPECT_NEAR(ten.halfwidth, 0.062656, 5e-7);
    EXPECT_THROW(agresti_coull(5, 4), std::invalid_argument);
}

TEST(AgrestiCoull, CoverageOfBinomialCells) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> log_p(std::log(1e-3), std::log(0.2));
    int covered = 0;
    const int cells = 1000;
    for (int i = 0; i < cells; i++) {
        double p = std::exp(log_p(rng));
        std::binomial_distribution<std::int64_t> draw(2000, p);
        auto ci = agresti_coull(draw(rng), 2000);
        covered += ci.lower() <= p && p <= ci.upper();
    }
    EXPECT_GE(covered, 900);
}

TEST(Trials, ConfigChecks) {
    TrialConfig cfg;
    EXPECT_NO_THROW(cfg.check());
    cfg.p = 1.5;
    EXPECT_THROW(cfg.check(), std::invalid_argument);
    cfg.p = 0.1;
    cfg.L = 4;
    EXPECT_THROW(cfg.check(), std::invalid_argument);
    cfg.L = 5;
    cfg.trials = 0;
    EXPECT_THROW(cfg.check(), std::invalid_argument);
    cfg.trials = 1;
    EXPECT_EQ(cfg.effective_timesteps(), 3);
}

TEST(Trials, NoiselessNeverFails) {
    for (CodeLabel code : kAllCodes) {
        TrialConfig cfg;
        cfg.code = code;
        cfg.L = 5;
        cfg.trials = 50;
        auto res = run_cell(cfg);
        EXPECT_EQ(res.stats.failures, 0);
        EXPECT_EQ(res.stats.trials, 50);
    }
}

TEST(Trials, ThreadCountDoesNotChangeOutcomes) {
    TrialConfig cfg;
    cfg.code = CodeLabel::C;
    cfg.L = 3;
    cfg.p = 0.02;
    cfg.trials = 400;
    cfg.seed = 77;
    SliceCache cache(cfg.code, cfg.L, cfg.effective_timesteps());
    auto one = run_cell(cfg, &cache);
    cfg.threads = 3;
    auto three = run_cell(cfg, &cache);
    EXPECT_EQ(one.stats.failures, three.stats.failures);
    EXPECT_GT(one.stats.failures, 0);
    std::int64_t direct = 0;
    for (std::int64_t i = 0; i < cfg.trials; i++) {
        direct += run_trial(cfg, i, cache);
    }
    EXPECT_EQ(direct, one.stats.failures);
}

TEST(Csv, RoundTrip) {
    CsvRow row{'B', 5, 3e-4, 3, 2, 2, 10000, 17, 0.0018992, 0.00086, 42, 1.25};
    auto parsed = parse_csv_row(format_csv_row(row));
    ASSERT_TRUE(parsed);
    EXPECT_EQ(parsed->code, 'B');
    EXPECT_EQ(parsed->L, 5);
    EXPECT_DOUBLE_EQ(parsed->p, 3e-4);
    EXPECT_EQ(parsed->timesteps, 3);
    EXPECT_EQ(parsed->trials, 10000);
    EXPECT_EQ(parsed->failures, 17);
    EXPECT_EQ(parsed->seed, 42u);
    EXPECT_NEAR(parsed->p_fail, 0.0018992, 1e-12);
    EXPECT_FALSE(parse_csv_row("B,5,not-a-number"));
    EXPECT_EQ(std::string(kCsvHeader), "code,L,p,timesteps,c,r,trials,failures,p_fail,ci_halfwidth,seed,wallclock_s");
}

SweepSpec small_sweep() {
    SweepSpec spec;
    spec.codes = {CodeLabel::A, CodeLabel::C};
    spec.distances = {3};
    spec.ps = {0.01, 0.03};
    spec.trials = 100;
    spec.seed = 5;
    spec.zero_wallclock = true;
    return spec;
}

TEST(Sweep, ResumesAndReproduces) {
    auto path = scratch_file("sweep.csv");
    auto spec = small_sweep();
    run_sweep(spec, path.string());
    std::string first = slurp(path);
    auto rows = read_csv(path.string());
    ASSERT_EQ(rows.size(), 4u);
    for (const auto &r : rows) {
        auto ci = agresti_coull(r.failures, r.trials);
        EXPECT_NEAR(r.p_fail, ci.center, 1e-10);
        EXPECT_EQ(r.wallclock_s, 0.0);
    }

    run_sweep(spec, path.string());
    EXPECT_EQ(slurp(path), first);

    std::istringstream lines(first);
    std::string header, keep, line;
    std::getline(lines, header);
    std::getline(lines, keep);
    {
        std::ofstream out(path, std::ios::trunc);
        out << header << "\n" << keep << "\n" << "C,3,0.0";
    }
    run_sweep(spec, path.string());
    EXPECT_EQ(slurp(path), first);
    fs::remove(path);
}

TEST(Sweep, EmptySpecWritesHeader) {
    auto path = scratch_file("empty.csv");
    SweepSpec spec;
    run_sweep(spec, path.string());
    EXPECT_EQ(slurp(path), std::string(kCsvHeader) + "\n");
    fs::remove(path);
}

TEST(Sweep, RejectsForeignHeader) {
    auto path = scratch_file("foreign.csv");
    {
        std::ofstream out(path);
        out << "a,b,c\n";
    }
    EXPECT_THROW(read_csv(path.string()), std::runtime_error);
    fs::remove(path);
}

TEST(Crossing, SyntheticPowerLaws) {
    const double threshold = 1e-3;
    std::vector<CsvRow> rows;
    for (int L : {3, 5, 7}) {
        for (double p : {2e-4, 5e-4, 8e-4, 1.5e-3, 3e-3}) {
            CsvRow r;
            r.code = 'A';
            r.L = L;
            r.p = p;
            r.p_fail = 0.05 * std::pow(p / threshold, (L + 1) / 2);
            rows.push_back(r);
        }
    }
    auto xs = pairwise_crossings(rows, 'A');
    ASSERT_EQ(xs.size(), 2u);
    for (double x : xs) {
        EXPECT_NEAR(x, threshold, 1e-12);
    }
    auto est = estimate_crossing(rows, 'A');
    ASSERT_TRUE(est);
    EXPECT_NEAR(est->median, threshold, 1e-12);
    EXPECT_EQ(est->count, 2u);
    EXPECT_FALSE(estimate_crossing(rows, 'B'));
}

TEST(Crossing, NoneWhenCurvesNeverMeet) {
    std::vector<CsvRow> rows;
    for (int L : {3, 5}) {
        for (double p : {1e-3, 2e-3}) {
            CsvRow r;
            r.code = 'C';
            r.L = L;
            r.p = p;
            r.p_fail = p * (L == 3 ? 2.0 : 1.0);
            rows.push_back(r);
        }
    }
    EXPECT_TRUE(pairwise_crossings(rows, 'C').empty());
}

TEST(Config, KeyValueFile) {
    auto path = scratch_file("run.cfg");
    {
        std::ofstream out(path);
        out << "# sweep\ncode = A\n  p=0.001   # inline\n\nL = 5\n";
    }
    auto kv = read_config_file(path.string());
    EXPECT_EQ(kv.size(), 3u);
    EXPECT_EQ(kv["code"], "A");
    EXPECT_EQ(kv["p"], "0.001");
    EXPECT_EQ(kv["L"], "5");
    {
        std::ofstream out(path);
        out << "no equals sign\n";
    }
    EXPECT_THROW(read_config_file(path.string()), std::runtime_error);
    fs::remove(path);
    EXPECT_THROW(read_config_file(path.string()), std::ios_base::failure);
}

}  // namespace
}  // namespace jitslice
