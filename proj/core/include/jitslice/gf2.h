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

#ifndef JITSLICE_GF2_H
#define JITSLICE_GF2_H

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace jitslice {

using Bits = boost::dynamic_bitset<std::uint64_t>;

Bits bits_from_support(const std::vector<int> &support, std::size_t n);
std::vector<int> support_of(const Bits &b);
bool odd_overlap(const Bits &a, const Bits &b);

/// Incrementally built echelon basis. Rows are reduced on insertion so that
/// membership tests are a single reduction pass.
class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t n) : n_(n) {}
    /// Returns true if `v` was independent of the rows added so far.
    bool add(Bits v);
    Bits reduce(Bits v) const;
    bool contains(const Bits &v) const { return reduce(v).none(); }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Bits> &rows() const { return rows_; }
    const std::vector<std::size_t> &pivots() const { return pivot_col_; }

   private:
    std::size_t n_;
    std::vector<Bits> rows_;
    std::vector<std::size_t> pivot_col_;
};

std::size_t gf2_rank(const std::vector<Bits> &rows, std::size_t n);
bool in_span(const Bits &v, const std::vector<Bits> &rows, std::size_t n);

/// Basis of {v : <row, v> = 0 for every row}.
std::vector<Bits> nullspace(const std::vector<Bits> &rows, std::size_t n);

/// Solver for A x = b with A fixed. The elimination is done once; each solve
/// costs one pass over the recorded row operations.
class LinearSolver {
   public:
    LinearSolver() = default;
    LinearSolver(const std::vector<Bits> &equations, std::size_t num_vars);
    std::optional<Bits> solve(const Bits &rhs) const;
    std::size_t rank() const { return rank_; }
    std::size_t num_equations() const { return num_eq_; }
    std::size_t num_vars() const { return num_vars_; }
    /// Basis of the solution space of A x = 0.
    std::vector<Bits> kernel_basis() const;

   private:
    std::size_t num_eq_ = 0;
    std::size_t num_vars_ = 0;
    std::size_t rank_ = 0;
    std::vector<Bits> reduced_;       // rank_ rows in reduced echelon form
    std::vector<std::size_t> pivot_;  // pivot column of each reduced row
    std::vector<Bits> transform_;     // num_eq_ rows: combination of original equations
};

/// Minimum weight over the coset v + span(rows), by Gray-code enumeration.
/// Only feasible for small rank.
std::size_t coset_min_weight(const Bits &v, const std::vector<Bits> &rows, std::size_t n);

}  // namespace jitslice

#endif
