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

#ifndef JITSLICE_COORD_H
#define JITSLICE_COORD_H

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace jitslice {

/// Integer point of the global frame. Qubit sites of the rectified lattice are
/// the triples with exactly one odd component (edge midpoints of the spacing-2
/// cubic lattice). Cube centres have three odd components, octahedron centres
/// (cubic vertices) none.
struct Coord {
    int x = 0;
    int y = 0;
    int z = 0;

    constexpr int operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
    constexpr int &operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }
    constexpr int sum() const { return x + y + z; }
    constexpr int dot(const Coord &o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr int odd_count() const { return (x & 1) + (y & 1) + (z & 1); }
    constexpr Coord operator+(const Coord &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Coord operator-(const Coord &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Coord operator*(int s) const { return {x * s, y * s, z * s}; }
    constexpr auto operator<=>(const Coord &) const = default;

    static constexpr Coord unit(int axis, int sign = 1) {
        Coord c;
        c[axis] = sign;
        return c;
    }
    std::string str() const;
};

std::ostream &operator<<(std::ostream &out, const Coord &c);

struct CoordHash {
    std::size_t operator()(const Coord &c) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(c.x);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(c.y);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(c.z);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

constexpr int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

/// Cubes (all-odd centres) are two-coloured along the (1,1,1) direction.
/// Green cubes carry the green triangles used by code C.
constexpr bool cube_is_green(const Coord &c) { return floor_mod((c.sum() - 3) / 2, 2) == 0; }

enum class CodeLabel : std::uint8_t { A, B, C };

constexpr std::array<CodeLabel, 3> kAllCodes = {CodeLabel::A, CodeLabel::B, CodeLabel::C};

char code_char(CodeLabel code);
CodeLabel parse_code(const std::string &text);

enum class Boundary : std::uint8_t { Bulk, Top, Bottom, SideX1, SideX2, SideZ1, SideZ2 };

const char *boundary_name(Boundary b);

enum class PauliType : std::uint8_t { X, Z };

/// Lowest kagome plane index (x+y+z) of the timestep-0 slice. Every slice
/// occupies three planes and each timestep moves the slab up by four.
constexpr int kBasePlane = -7;
constexpr int kPlanesPerStep = 4;

constexpr int slice_base_plane(int timestep) { return kBasePlane + kPlanesPerStep * timestep; }

/// Lattice vector carrying the slice of `code` at timestep t onto timestep t+1.
constexpr Coord slice_displacement(CodeLabel code) {
    switch (code) {
        case CodeLabel::A:
            return {0, 2, 2};
        case CodeLabel::B:
            return {2, 0, 2};
        default:
            return {2, 2, 0};
    }
}

void check_distance(int L);

}  // namespace jitslice

#endif
