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

#ifndef JITSLICE_TESTS_FIXTURES_H
#define JITSLICE_TESTS_FIXTURES_H

#include <cstdint>
#include <string>
#include <vector>

#include "jitslice/harness.h"

namespace jitslice::testing {

/// Brute-force minimum over all matchings where every defect is paired with
/// another defect or sent to its own boundary copy.
std::int64_t brute_force_boundary_matching(const std::vector<std::vector<std::int64_t>> &pair_weight,
                                           const std::vector<std::int64_t> &boundary_weight);

/// Total weight of a partner vector as returned by boundary_matching.
std::int64_t matching_weight(const std::vector<int> &partner, const std::vector<std::vector<std::int64_t>> &pair_weight,
                             const std::vector<std::int64_t> &boundary_weight);

/// Two top-adjacent cells of the timestep-0 slice at the given dual distance,
/// far enough from the sides that MWPM pairs them, with measurement flips
/// along a shortest path between them.
struct DelayedPairScenario {
    Coord a;
    Coord b;
    std::vector<int> flipped_faces;
};

DelayedPairScenario find_delayed_pair(const SliceGeometry &slice, int distance);

struct StepRecord {
    std::vector<Coord> endpoints;
    DecodeResult result;
    PseudoDistanceMap before;
};

struct ScenarioRun {
    bool failed = false;
    std::vector<StepRecord> steps;
    /// Endpoints produced by the carried residual alone at the start of each
    /// timestep after the first.
    std::vector<std::size_t> carried_endpoints;
};

/// Runs a trial at p = 0 with the measurement flips of the scenario injected
/// at timestep 0.
ScenarioRun run_delayed_pair(const TrialConfig &config, const SliceCache &cache, const DelayedPairScenario &s);

struct SingleFaultSummary {
    std::int64_t qubit_faults = 0;
    std::int64_t face_faults = 0;
    std::int64_t qubit_failures = 0;
    std::int64_t face_failures = 0;
    std::vector<std::string> failing;  // "t=<t> qubit|face <site or cells>"
};

/// Every single X error on a fresh qubit and every single measurement flip
/// on a new face, in every timestep, each in its own noiseless trial.
SingleFaultSummary exhaustive_single_faults(const TrialConfig &config, const SliceCache &cache);

}  // namespace jitslice::testing

#endif
