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

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "jitslice/errors.h"
#include "jitslice/harness.h"
#include "jitslice/validate.h"

using namespace jitslice;

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kIo = 2, kContract = 3 };

std::vector<CodeLabel> parse_codes(const std::vector<std::string> &names) {
    std::vector<CodeLabel> out;
    for (const auto &n : names) {
        if (n == "all") {
            out.assign(kAllCodes.begin(), kAllCodes.end());
            return out;
        }
        out.push_back(parse_code(n));
    }
    return out;
}

// Values from --config are inserted ahead of the command line for every key
// the command line does not already give, so flags take precedence.
std::vector<std::string> merge_config(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
            break;
        }
    }
    if (path.empty()) {
        return args;
    }
    auto kv = read_config_file(path);
    auto given = [&](const std::string &key) {
        std::string flag = "--" + key;
        return std::any_of(args.begin(), args.end(),
                           [&](const std::string &a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
    };
    auto sub = std::find_if(args.begin(), args.end(), [](const std::string &a) { return a.rfind("-", 0) != 0; });
    std::vector<std::string> extra;
    for (const auto &[key, value] : kv) {
        if (!given(key)) {
            extra.push_back("--" + key);
            extra.push_back(value);
        }
    }
    auto at = sub == args.end() ? args.end() : sub + 1;
    args.insert(at, extra.begin(), extra.end());
    return args;
}

struct RunArgs {
    std::string code = "A";
    int distance = 3;
    double p = 1e-3;
    std::int64_t trials = 1000;
    int c = 2;
    int r = 2;
    std::uint64_t seed = 1;
    int timesteps = 0;
    int threads = 1;
    std::string out;
    std::string debug_dump;
};

int cmd_validate(const std::vector<std::string> &codes, int distance, bool weights) {
    bool ok = true;
    for (CodeLabel code : parse_codes(codes)) {
        for (int t = 0; t < (distance + 1) / 2; t++) {
            auto slice = build_slice(code, distance, t);
            auto report = validate_slice(*slice);
            for (const auto &c : report.checks) {
                std::cout << code_char(code) << " L=" << distance << " t=" << t << " " << (c.passed ? "ok   " : "FAIL ")
                          << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
            }
            ok = ok && report.passed();
        }
        if (weights) {
            auto slice = build_slice(code, distance, 0);
            auto layer = build_layer(code, distance, 0);
            for (auto type : {PauliType::X, PauliType::Z}) {
                auto s = min_logical_weight(*slice, type);
                auto l = min_logical_weight(*layer, type);
                char pc = type == PauliType::X ? 'X' : 'Z';
                std::cout << code_char(code) << " L=" << distance << " slice " << pc << " weight " << s.weight
                          << (s.exact ? "" : " (bound)") << ", layer " << pc << " weight " << l.weight
                          << (l.exact ? "" : " (bound)") << "\n";
            }
        }
    }
    return ok ? kOk : kValidation;
}

int cmd_run(const RunArgs &a) {
    TrialConfig cfg;
    cfg.code = parse_code(a.code);
    cfg.L = a.distance;
    cfg.p = a.p;
    cfg.trials = a.trials;
    cfg.decoder = {a.c, a.r};
    cfg.seed = a.seed;
    cfg.timesteps = a.timesteps;
    cfg.threads = a.threads;
    cfg.check();
    SliceCache cache(cfg.code, cfg.L, cfg.effective_timesteps());

    CellResult res;
    if (!a.debug_dump.empty()) {
        std::ofstream dump(a.debug_dump);
        if (!dump) {
            throw std::ios_base::failure("cannot open " + a.debug_dump);
        }
        TrialHooks hooks;
        hooks.trace = [&](const std::string &line) { dump << line << '\n'; };
        auto start = std::chrono::steady_clock::now();
        for (std::int64_t i = 0; i < cfg.trials; i++) {
            res.stats.failures += run_trial(cfg, i, cache, &hooks);
        }
        res.stats.trials = cfg.trials;
        res.ci = agresti_coull(res.stats.failures, res.stats.trials);
        res.wallclock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!dump) {
            throw std::ios_base::failure("write failed on " + a.debug_dump);
        }
    } else {
        res = run_cell(cfg, &cache);
    }
    CsvRow row{code_char(cfg.code), cfg.L, cfg.p, cfg.effective_timesteps(), cfg.decoder.c, cfg.decoder.r,
               res.stats.trials, res.stats.failures, res.ci.center, res.ci.halfwidth, cfg.seed, res.wallclock_s};
    std::string text = std::string(kCsvHeader) + "\n" + format_csv_row(row) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.out);
        out << text;
        if (!out) {
            throw std::ios_base::failure("cannot write " + a.out);
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Delayed matching simulations on sliced 3D surface codes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    std::string config_note;
    app.add_option("--config", config_note, "key = value file; command-line flags take precedence");

    auto *validate = app.add_subcommand("validate", "Check slice validity for one or all codes");
    std::vector<std::string> vcodes = {"all"};
    int vdistance = 3;
    bool weights = false;
    validate->add_option("--code", vcodes, "A, B, C or all")->delimiter(',');
    validate->add_option("--distance", vdistance, "Odd distance >= 3");
    validate->add_flag("--weights", weights, "Also report minimum logical weights");

    auto *run = app.add_subcommand("run", "Monte Carlo trials for one (code, L, p) cell");
    RunArgs ra;
    run->add_option("--code", ra.code, "A, B or C");
    run->add_option("--distance", ra.distance, "Odd distance >= 3");
    run->add_option("--p", ra.p, "Error and measurement error rate");
    run->add_option("--trials", ra.trials, "Number of trials");
    run->add_option("--c", ra.c, "Join threshold");
    run->add_option("--r", ra.r, "Reduction per recurrence");
    run->add_option("--seed", ra.seed, "Master seed");
    run->add_option("--timesteps", ra.timesteps, "Cycles per trial, 0 for ceil(L/2)");
    run->add_option("--threads", ra.threads, "Worker threads");
    run->add_option("--out", ra.out, "CSV output (stdout if omitted)");
    run->add_option("--debug-dump", ra.debug_dump, "JSON-lines decoder trace");

    auto *sweep = app.add_subcommand("sweep", "Resumable sweep over codes, distances and rates");
    std::vector<std::string> scodes = {"all"};
    SweepSpec spec;
    spec.distances = {3, 5, 7};
    spec.ps = {3e-4, 5e-4, 1e-3, 2e-3, 3e-3};
    std::string sweep_out;
    bool quiet = false;
    sweep->add_option("--codes", scodes, "Comma separated, or all")->delimiter(',');
    sweep->add_option("--distances", spec.distances, "Comma separated")->delimiter(',');
    sweep->add_option("--p-list", spec.ps, "Comma separated")->delimiter(',');
    sweep->add_option("--trials", spec.trials, "Trials per cell");
    sweep->add_option("--seed", spec.seed, "Master seed");
    sweep->add_option("--timesteps", spec.timesteps, "Cycles per trial, 0 for ceil(L/2)");
    sweep->add_option("--c", spec.decoder.c, "Join threshold");
    sweep->add_option("--r", spec.decoder.r, "Reduction per recurrence");
    sweep->add_option("--threads", spec.threads, "Worker threads");
    sweep->add_flag("--zero-wallclock", spec.zero_wallclock, "Write 0 wallclock for byte-identical reruns");
    sweep->add_flag("--quiet", quiet, "No progress on stderr");
    sweep->add_option("--out", sweep_out, "CSV file, appended to and resumed")->required();

    auto *geometry = app.add_subcommand("geometry", "Canonical listing of one slice");
    std::string gcode = "A";
    int gdistance = 3;
    int gtimestep = 0;
    geometry->add_option("--code", gcode, "A, B or C");
    geometry->add_option("--distance", gdistance, "Odd distance >= 3");
    geometry->add_option("--timestep", gtimestep, "Timestep");

    try {
        auto args = merge_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kValidation;
    } catch (const std::ios_base::failure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::runtime_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }

    try {
        if (*validate) {
            return cmd_validate(vcodes, vdistance, weights);
        }
        if (*run) {
            return cmd_run(ra);
        }
        if (*sweep) {
            spec.codes = parse_codes(scodes);
            run_sweep(spec, sweep_out, quiet ? nullptr : &std::cerr);
            return kOk;
        }
        if (*geometry) {
            std::cout << golden_listing(*build_slice(parse_code(gcode), gdistance, gtimestep));
            return kOk;
        }
    } catch (const ContractViolation &e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kContract;
    } catch (const std::ios_base::failure &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kValidation;
    } catch (const std::logic_error &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kContract;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}
