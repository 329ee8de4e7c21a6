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

#ifndef JITSLICE_HARNESS_H
#define JITSLICE_HARNESS_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jitslice/channel.h"
#include "jitslice/correction.h"
#include "jitslice/decoder.h"

namespace jitslice {

struct TrialConfig {
    CodeLabel code = CodeLabel::A;
    int L = 3;
    double p = 0.0;
    int timesteps = 0;  // 0 selects ceil(L / 2)
    DecoderParams decoder;
    std::uint64_t seed = 1;
    std::int64_t trials = 1;
    int threads = 1;

    int effective_timesteps() const { return timesteps > 0 ? timesteps : (L + 1) / 2; }
    /// Throws std::invalid_argument on out-of-range fields.
    void check() const;
};

struct TrialStats {
    std::int64_t failures = 0;
    std::int64_t trials = 0;
};

struct CIEstimate {
    double center = 0.0;
    double halfwidth = 0.0;

    double lower() const { return center - halfwidth; }
    double upper() const { return center + halfwidth; }
    /// Interval edges clamped to [0, 1].
    double lower_clamped() const;
    double upper_clamped() const;
};

/// Agresti-Coull: p~ = (f + 2) / (n + 4), halfwidth 2 sqrt(p~ (1 - p~) / (n + 4)).
CIEstimate agresti_coull(std::int64_t failures, std::int64_t trials);

/// Slices, pushers and the final layer for one (code, L, T). Read-only and
/// shared across worker threads.
class SliceCache {
   public:
    SliceCache(CodeLabel code, int L, int timesteps);
    const SliceGeometry &slice(int t) const { return *slices_.at(t); }
    std::shared_ptr<const SliceGeometry> slice_ptr(int t) const { return slices_.at(t); }
    const TopPusher &pusher(int t) const { return pushers_.at(t); }
    /// Map from slice t to slice t + 1, for t < T - 1.
    const TopEmergence &emergence(int t) const { return emergences_.at(t); }
    const LayerGeometry &final_layer() const { return *final_layer_; }
    int timesteps() const { return timesteps_; }
    CodeLabel code() const { return code_; }
    int L() const { return L_; }

   private:
    CodeLabel code_;
    int L_;
    int timesteps_;
    std::vector<std::shared_ptr<const SliceGeometry>> slices_;  // t = 0..T-1
    std::vector<TopPusher> pushers_;                            // t = 0..T-1
    std::vector<TopEmergence> emergences_;                      // t = 0..T-2
    std::shared_ptr<const LayerGeometry> final_layer_;
};

/// Replaces the sampled noise of one timestep. Receives the carried bottom
/// errors and must return the full error state.
using NoiseOverride = std::function<ErrorState(int timestep, const SliceGeometry &slice, const Bits &carried)>;

struct TrialHooks {
    NoiseOverride noise;
    /// Receives one JSON line per decoder step.
    std::function<void(const std::string &)> trace;
    /// Called after each decoder step with the repaired syndrome and the
    /// correction, before collapse.
    std::function<void(int timestep, const DecodeResult &, const CorrectionOp &)> observe;
};

/// One trial. Returns true on logical failure. Contract violations propagate.
bool run_trial(const TrialConfig &config, std::int64_t trial_index, const SliceCache &cache,
               const TrialHooks *hooks = nullptr);

/// Convenience overload building its own cache.
bool run_trial(const TrialConfig &config, std::int64_t trial_index);

struct CellResult {
    TrialStats stats;
    CIEstimate ci;
    double wallclock_s = 0.0;
};

/// n independent trials spread over `config.threads` workers. Outcomes are
/// merged by trial index, so the result does not depend on the thread count.
CellResult run_cell(const TrialConfig &config, const SliceCache *cache = nullptr,
                    const std::function<void(std::int64_t done)> &progress = {});

struct SweepSpec {
    std::vector<CodeLabel> codes;
    std::vector<int> distances;
    std::vector<double> ps;
    std::int64_t trials = 1;
    std::uint64_t seed = 1;
    int timesteps = 0;
    DecoderParams decoder;
    int threads = 1;
    /// Write 0 in the wallclock column so that reruns are byte-identical.
    bool zero_wallclock = false;
};

extern const char *const kCsvHeader;

struct CsvRow {
    char code = 'A';
    int L = 0;
    double p = 0.0;
    int timesteps = 0;
    int c = 0;
    int r = 0;
    std::int64_t trials = 0;
    std::int64_t failures = 0;
    double p_fail = 0.0;
    double ci_halfwidth = 0.0;
    std::uint64_t seed = 0;
    double wallclock_s = 0.0;
};

std::string format_csv_row(const CsvRow &row);
/// Parses one data line; nullopt if malformed.
std::optional<CsvRow> parse_csv_row(const std::string &line);
/// Reads a sweep CSV. Throws std::runtime_error on a bad header.
std::vector<CsvRow> read_csv(const std::string &path);

/// Runs every (code, L, p) cell missing from `out_path` and appends its row.
/// Throws std::ios_base::failure on I/O errors.
void run_sweep(const SweepSpec &spec, const std::string &out_path, std::ostream *progress = nullptr);

/// Crossing point of p_fail curves for one code: for each pair of adjacent
/// distances, the points where the piecewise-linear log-log interpolants
/// intersect. Returns the sorted list of intersections.
std::vector<double> pairwise_crossings(const std::vector<CsvRow> &rows, char code);

struct CrossingEstimate {
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

/// Median of pairwise_crossings with its spread; nullopt if there are none.
std::optional<CrossingEstimate> estimate_crossing(const std::vector<CsvRow> &rows, char code);

/// key = value lines; '#' starts a comment. Throws on malformed lines.
std::map<std::string, std::string> read_config_file(const std::string &path);

}  // namespace jitslice

#endif
