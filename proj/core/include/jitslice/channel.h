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

#ifndef JITSLICE_CHANNEL_H
#define JITSLICE_CHANNEL_H

#include <cstdint>
#include <random>
#include <vector>

#include "jitslice/gf2.h"
#include "jitslice/lattice.h"

namespace jitslice {

struct NoiseParams {
    double p = 0.0;
};

/// Physical X errors over the slice qubits and measurement flips over its
/// zfaces. Flips are only ever set on new faces.
struct ErrorState {
    Bits x_errors;
    Bits meas_flips;
};

struct SyndromeState {
    Bits flagged;  // over zfaces
};

using TrialRng = std::mt19937_64;

/// Independent stream for one trial, keyed by the master seed and the trial
/// index only.
TrialRng make_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index);

ErrorState empty_errors(const SliceGeometry &slice);

/// Carried residual on the bottom layer plus fresh errors: each non-bottom
/// qubit and each new face independently with probability p.
ErrorState sample_errors(const SliceGeometry &slice, const NoiseParams &params, TrialRng &rng,
                         const Bits *carried_bottom = nullptr);

SyndromeState compute_syndrome(const SliceGeometry &slice, const ErrorState &errors);

/// Real dual vertices with an odd number of flagged incident faces, in
/// vertex order (which is sorted by cell centre).
std::vector<int> extract_endpoints(const SyndromeState &syndrome, const SliceGeometry &slice);

}  // namespace jitslice

#endif
