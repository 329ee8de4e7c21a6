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

#ifndef JITSLICE_DECODER_H
#define JITSLICE_DECODER_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jitslice/channel.h"
#include "jitslice/dual.h"

namespace jitslice {

struct DecoderParams {
    int c = 2;  // join threshold
    int r = 2;  // reduction per recurrence

    /// Throws std::invalid_argument unless c >= 0 and r >= 1.
    void check() const;
};

using PseudoDistanceMap = std::map<PairKey, int>;

struct MatchedPair {
    PairKey key;
    int distance = 0;
};

/// Pairs in the order produced by the matcher, which is sorted by key.
using Matching = std::vector<MatchedPair>;

/// Minimum-weight perfect matching of k defects where each defect may
/// alternatively be matched to its own boundary copy. `pair_weight` is k x k;
/// `boundary_weight` has k entries. Returns partner[i] in [0, k) or -1 for a
/// boundary match.
std::vector<int> boundary_matching(const std::vector<std::vector<std::int64_t>> &pair_weight,
                                   const std::vector<std::int64_t> &boundary_weight);

/// Exact MWPM of the endpoints (real dual vertex ids) with the side X
/// boundaries available to every endpoint.
Matching mwpm(const std::vector<int> &endpoints, const SliceGeometry &slice);

struct DecodeResult {
    SyndromeState repaired;
    PseudoDistanceMap next;
    Matching matching;
    std::vector<PairKey> joined;
    std::vector<PairKey> deferred;
};

/// Delayed matching. `emergence` maps slice_t to the next slice; it may be
/// null in the last timestep, in which case deferred pairs are not carried
/// over.
DecodeResult delayed_match(const std::vector<int> &endpoints, const PseudoDistanceMap &memory,
                           const DecoderParams &params, const SliceGeometry &slice_t,
                           const TopEmergence *emergence, const SyndromeState &syndrome);

/// Same, building the emergence map from the next slice.
DecodeResult delayed_match(const std::vector<int> &endpoints, const PseudoDistanceMap &memory,
                           const DecoderParams &params, const SliceGeometry &slice_t,
                           const SliceGeometry &slice_next, const SyndromeState &syndrome);

/// True iff every real dual vertex has even flagged degree.
bool loop_check(const SyndromeState &syndrome, const SliceGeometry &slice);

/// One JSON object (single line) describing a decoder step.
std::string trace_record(int trial, int timestep, const std::vector<int> &endpoints, const SliceGeometry &slice,
                         const PseudoDistanceMap &before, const DecodeResult &result);

}  // namespace jitslice

#endif
