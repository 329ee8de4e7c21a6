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

#ifndef JITSLICE_CORRECTION_H
#define JITSLICE_CORRECTION_H

#include <array>
#include <memory>
#include <vector>

#include "jitslice/channel.h"
#include "jitslice/gf2.h"
#include "jitslice/lattice.h"

namespace jitslice {

struct CorrectionOp {
    Bits qubits;
    PauliType type = PauliType::X;
};

/// Inverts the face-incidence map of a slice restricted to non-bottom qubits.
/// The elimination is done once per slice and shared by all trials.
class TopPusher {
   public:
    explicit TopPusher(std::shared_ptr<const SliceGeometry> slice);

    /// X correction whose syndrome equals `repaired` on every new face.
    /// Throws ContractViolation if none exists.
    CorrectionOp push(const SyndromeState &repaired) const;

    const SliceGeometry &slice() const { return *slice_; }

   private:
    std::shared_ptr<const SliceGeometry> slice_;
    LinearSolver solver_;
};

/// One-off variant of TopPusher::push.
CorrectionOp push_to_top(const SyndromeState &repaired, const std::shared_ptr<const SliceGeometry> &slice);

struct CollapseRecord {
    /// Top-layer qubits of the slice (slice indices).
    std::vector<int> surviving;
    /// Global sites of top-layer qubits carrying an X error.
    std::vector<Coord> residual;
};

/// Measures out everything below the top layer. `x_errors` is the net X
/// error after correction.
CollapseRecord collapse(const SliceGeometry &slice, const Bits &x_errors);

/// Residual as bottom-layer errors of the next slice.
Bits carry_forward(const CollapseRecord &record, const SliceGeometry &next);

/// Residual as a bit vector over the qubits of a layer.
Bits residual_on_layer(const CollapseRecord &record, const LayerGeometry &layer);

/// Decodes a perfectly measured layer Z syndrome of `x_errors` by MWPM and
/// reports whether the net operator flips the layer's logical Z.
bool layer_logical_failure(const LayerGeometry &layer, const Bits &x_errors);

/// Minimal 3D code on the eight vertices of a cube. Qubits 1-4 form the top
/// face and qubit i + 4 sits below qubit i (indices here are zero-based, so
/// qubit 1 is index 0).
struct MinimalCube {
    static constexpr int kQubits = 8;
    static const std::array<std::array<int, 4>, 6> kZStabilisers;
    static const std::array<std::array<int, 4>, 4> kXStabilisers;
    /// Top-face code: X stabilisers X1X3, X2X4; logical Z = Z2Z4, logical
    /// X = X1X2.
    static const std::array<std::array<int, 2>, 2> kTopXStabilisers;
    static const std::array<int, 2> kTopLogicalZ;
    static const std::array<int, 2> kTopLogicalX;
};

/// Z correction on the top face from the X-basis outcomes (+1 or -1) of the
/// bottom qubits 5-8: Z on qubit i wherever qubit i + 4 reads -1.
CorrectionOp z_footprint(const std::array<int, 4> &bottom_outcomes);

}  // namespace jitslice

#endif
