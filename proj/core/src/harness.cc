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

#include "jitslice/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "jitslice/errors.h"

namespace jitslice {

void TrialConfig::check() const {
    check_distance(L);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    if (timesteps < 0) {
        throw std::invalid_argument("timesteps must be positive");
    }
    if (trials < 1) {
        throw std::invalid_argument("trial count must be positive");
    }
    if (threads < 1) {
        throw std::invalid_argument("thread count must be positive");
    }
    decoder.check();
}

double CIEstimate::lower_clamped() const { return std::clamp(lower(), 0.0, 1.0); }
double CIEstimate::upper_clamped() const { return std::clamp(upper(), 0.0, 1.0); }

CIEstimate agresti_coull(std::int64_t failures, std::int64_t trials) {
    if (trials < 0 || failures < 0 || failures > trials) {
        throw std::invalid_argument("need 0 <= failures <= trials");
    }
    double nt = static_cast<double>(trials) + 4.0;
    double pt = (static_cast<double>(failures) + 2.0) / nt;
    double qt = (static_cast<double>(trials - failures) + 2.0) / nt;
    return {pt, 2.0 * std::sqrt(pt * qt / nt)};
}

SliceCache::SliceCache(CodeLabel code, int L, int timesteps) : code_(code), L_(L), timesteps_(timesteps) {
    check_distance(L);
    if (timesteps < 1) {
        throw std::invalid_argument("need at least one timestep");
    }
    for (int t = 0; t < timesteps; t++) {
        slices_.push_back(build_slice(code, L, t));
        pushers_.emplace_back(slices_.back());
    }
    for (int t = 0; t + 1 < timesteps; t++) {
        emergences_.emplace_back(*slices_[t], *slices_[t + 1]);
    }
    final_layer_ = build_layer(code, L, timesteps);
}

bool run_trial(const TrialConfig &config, std::int64_t trial_index, const SliceCache &cache,
               const TrialHooks *hooks) {
    int T = cache.timesteps();
    auto rng = make_trial_rng(config.seed, static_cast<std::uint64_t>(trial_index));
    NoiseParams noise{config.p};
    PseudoDistanceMap memory;
    Bits carried(cache.slice(0).num_qubits());
    for (int t = 0; t < T; t++) {
        const auto &slice = cache.slice(t);
        const SliceGeometry *next = t + 1 < T ? &cache.slice(t + 1) : nullptr;
        const TopEmergence *emergence = next ? &cache.emergence(t) : nullptr;
        ErrorState errors = hooks && hooks->noise ? hooks->noise(t, slice, carried)
                                                  : sample_errors(slice, noise, rng, &carried);
        auto syndrome = compute_syndrome(slice, errors);
        auto endpoints = extract_endpoints(syndrome, slice);
        auto result = delayed_match(endpoints, memory, config.decoder, slice, emergence, syndrome);
        if (!loop_check(result.repaired, slice)) {
            throw ContractViolation("decoder output is not a loop syndrome");
        }
        auto correction = cache.pusher(t).push(result.repaired);
#ifndef NDEBUG
        {
            auto check = compute_syndrome(slice, {correction.qubits, Bits(slice.num_faces())});
            for (int f : slice.new_faces) {
                if (check.flagged.test(f) != result.repaired.flagged.test(f)) {
                    throw ContractViolation("push_to_top correction does not reproduce the repaired syndrome");
                }
            }
        }
#endif
        if (hooks && hooks->trace) {
            hooks->trace(trace_record(static_cast<int>(trial_index), t, endpoints, slice, memory, result));
        }
        if (hooks && hooks->observe) {
            hooks->observe(t, result, correction);
        }
        auto record = collapse(slice, errors.x_errors ^ correction.qubits);
        memory = std::move(result.next);
        if (next) {
            carried = carry_forward(record, *next);
        } else {
            return layer_logical_failure(cache.final_layer(), residual_on_layer(record, cache.final_layer()));
        }
    }
    return false;
}

bool run_trial(const TrialConfig &config, std::int64_t trial_index) {
    config.check();
    SliceCache cache(config.code, config.L, config.effective_timesteps());
    return run_trial(config, trial_index, cache);
}

CellResult run_cell(const TrialConfig &config, const SliceCache *cache,
                    const std::function<void(std::int64_t)> &progress) {
    config.check();
    auto start = std::chrono::steady_clock::now();
    std::unique_ptr<SliceCache> own;
    if (!cache) {
        own = std::make_unique<SliceCache>(config.code, config.L, config.effective_timesteps());
        cache = own.get();
    }
    std::vector<char> failed(static_cast<std::size_t>(config.trials), 0);
    std::atomic<std::int64_t> next{0};
    std::atomic<std::int64_t> done{0};
    std::exception_ptr error;
    std::mutex mu;
    auto worker = [&] {
        while (true) {
            std::int64_t i = next.fetch_add(1);
            if (i >= config.trials) {
                return;
            }
            try {
                failed[static_cast<std::size_t>(i)] = run_trial(config, i, *cache) ? 1 : 0;
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(config.trials);
                return;
            }
            std::int64_t d = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard lock(mu);
                progress(d);
            }
        }
    };
    int nthreads = static_cast<int>(std::min<std::int64_t>(config.threads, config.trials));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < nthreads; i++) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    CellResult out;
    out.stats.trials = config.trials;
    out.stats.failures = std::count(failed.begin(), failed.end(), 1);
    out.ci = agresti_coull(out.stats.failures, out.stats.trials);
    out.wallclock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

const char *const kCsvHeader = "code,L,p,timesteps,c,r,trials,failures,p_fail,ci_halfwidth,seed,wallclock_s";

namespace {

std::string fmt(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

using CellKey = std::tuple<char, int, std::string, int, int, int, std::int64_t, std::uint64_t>;

CellKey key_of(const CsvRow &r) {
    return {r.code, r.L, fmt("%.10g", r.p), r.timesteps, r.c, r.r, r.trials, r.seed};
}

}  // namespace

std::string format_csv_row(const CsvRow &r) {
    std::ostringstream out;
    out << r.code << ',' << r.L << ',' << fmt("%.10g", r.p) << ',' << r.timesteps << ',' << r.c << ',' << r.r << ','
        << r.trials << ',' << r.failures << ',' << fmt("%.10g", r.p_fail) << ',' << fmt("%.10g", r.ci_halfwidth)
        << ',' << r.seed << ',' << fmt("%.3f", r.wallclock_s);
    return out.str();
}

std::optional<CsvRow> parse_csv_row(const std::string &line) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        f.push_back(item);
    }
    if (f.size() != 12 || f[0].size() != 1) {
        return std::nullopt;
    }
    try {
        CsvRow r;
        r.code = f[0][0];
        r.L = std::stoi(f[1]);
        r.p = std::stod(f[2]);
        r.timesteps = std::stoi(f[3]);
        r.c = std::stoi(f[4]);
        r.r = std::stoi(f[5]);
        r.trials = std::stoll(f[6]);
        r.failures = std::stoll(f[7]);
        r.p_fail = std::stod(f[8]);
        r.ci_halfwidth = std::stod(f[9]);
        r.seed = std::stoull(f[10]);
        r.wallclock_s = std::stod(f[11]);
        return r;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

std::vector<CsvRow> read_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error(path + ": unexpected CSV header");
    }
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (auto r = parse_csv_row(line)) {
            rows.push_back(*r);
        }
    }
    return rows;
}

void run_sweep(const SweepSpec &spec, const std::string &out_path, std::ostream *progress) {
    namespace fs = std::filesystem;
    std::vector<CsvRow> existing;
    if (fs::exists(out_path) && fs::file_size(out_path) > 0) {
        existing = read_csv(out_path);
    }
    {
        // Rewrite the file so that a partially written final line is dropped.
        std::string tmp = out_path + ".tmp";
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw std::ios_base::failure("cannot write " + tmp);
        }
        out << kCsvHeader << '\n';
        for (const auto &r : existing) {
            out << format_csv_row(r) << '\n';
        }
        out.close();
        if (!out) {
            throw std::ios_base::failure("write failed: " + tmp);
        }
        fs::rename(tmp, out_path);
    }
    std::set<CellKey> have;
    for (const auto &r : existing) {
        have.insert(key_of(r));
    }
    std::ofstream out(out_path, std::ios::app);
    if (!out) {
        throw std::ios_base::failure("cannot append to " + out_path);
    }
    for (CodeLabel code : spec.codes) {
        for (int L : spec.distances) {
            TrialConfig cfg;
            cfg.code = code;
            cfg.L = L;
            cfg.timesteps = spec.timesteps;
            cfg.decoder = spec.decoder;
            cfg.seed = spec.seed;
            cfg.trials = spec.trials;
            cfg.threads = spec.threads;
            std::unique_ptr<SliceCache> cache;
            for (double p : spec.ps) {
                cfg.p = p;
                cfg.check();
                CsvRow row;
                row.code = code_char(code);
                row.L = L;
                row.p = p;
                row.timesteps = cfg.effective_timesteps();
                row.c = spec.decoder.c;
                row.r = spec.decoder.r;
                row.trials = spec.trials;
                row.seed = spec.seed;
                if (have.count(key_of(row))) {
                    if (progress) {
                        *progress << "skip " << row.code << " L=" << L << " p=" << fmt("%g", p) << '\n';
                    }
                    continue;
                }
                if (!cache) {
                    cache = std::make_unique<SliceCache>(code, L, cfg.effective_timesteps());
                }
                auto res = run_cell(cfg, cache.get());
                row.failures = res.stats.failures;
                row.p_fail = res.ci.center;
                row.ci_halfwidth = res.ci.halfwidth;
                row.wallclock_s = spec.zero_wallclock ? 0.0 : res.wallclock_s;
                out << format_csv_row(row) << '\n';
                out.flush();
                if (!out) {
                    throw std::ios_base::failure("write failed: " + out_path);
                }
                have.insert(key_of(row));
                if (progress) {
                    *progress << "done " << row.code << " L=" << L << " p=" << fmt("%g", p) << " f=" << row.failures
                              << "/" << row.trials << " (" << fmt("%.1f", res.wallclock_s) << " s)\n";
                }
            }
        }
    }
}

std::vector<double> pairwise_crossings(const std::vector<CsvRow> &rows, char code) {
    std::map<int, std::map<double, double>> curves;
    for (const auto &r : rows) {
        if (r.code == code && r.p > 0.0 && r.p_fail > 0.0) {
            curves[r.L][r.p] = r.p_fail;
        }
    }
    std::vector<double> out;
    for (auto it = curves.begin(); it != curves.end(); ++it) {
        auto nx = std::next(it);
        if (nx == curves.end()) {
            break;
        }
        std::vector<std::pair<double, double>> diff;  // (log p, log ratio)
        for (const auto &[p, f1] : it->second) {
            auto f2 = nx->second.find(p);
            if (f2 != nx->second.end()) {
                diff.push_back({std::log(p), std::log(f2->second) - std::log(f1)});
            }
        }
        for (std::size_t i = 0; i + 1 < diff.size(); i++) {
            auto [x0, y0] = diff[i];
            auto [x1, y1] = diff[i + 1];
            if (y0 == 0.0) {
                out.push_back(std::exp(x0));
            } else if ((y0 < 0.0) != (y1 < 0.0) && y1 != 0.0) {
                out.push_back(std::exp(x0 + (x1 - x0) * y0 / (y0 - y1)));
            }
        }
        if (!diff.empty() && diff.back().second == 0.0) {
            out.push_back(std::exp(diff.back().first));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CrossingEstimate> estimate_crossing(const std::vector<CsvRow> &rows, char code) {
    auto xs = pairwise_crossings(rows, code);
    if (xs.empty()) {
        return std::nullopt;
    }
    CrossingEstimate e;
    std::size_t n = xs.size();
    e.median = n % 2 ? xs[n / 2] : std::sqrt(xs[n / 2 - 1] * xs[n / 2]);
    e.min = xs.front();
    e.max = xs.back();
    e.count = n;
    return e;
}

std::map<std::string, std::string> read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos || trim(line.substr(0, eq)).empty()) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

}  // namespace jitslice
