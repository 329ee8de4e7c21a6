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

#include "jitslice/gf2.h"

#include <stdexcept>

namespace jitslice {

Bits bits_from_support(const std::vector<int> &support, std::size_t n) {
    Bits b(n);
    for (int q : support) {
        b.flip(static_cast<std::size_t>(q));
    }
    return b;
}

std::vector<int> support_of(const Bits &b) {
    std::vector<int> out;
    out.reserve(b.count());
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
        out.push_back(static_cast<int>(i));
    }
    return out;
}

bool odd_overlap(const Bits &a, const Bits &b) { return ((a & b).count() & 1) != 0; }

Bits EchelonBasis::reduce(Bits v) const {
    for (std::size_t r = 0; r < rows_.size(); r++) {
        if (v.test(pivot_col_[r])) {
            v ^= rows_[r];
        }
    }
    return v;
}

bool EchelonBasis::add(Bits v) {
    if (v.size() != n_) {
        throw std::invalid_argument("EchelonBasis: vector length mismatch");
    }
    v = reduce(std::move(v));
    auto p = v.find_first();
    if (p == Bits::npos) {
        return false;
    }
    for (auto &row : rows_) {
        if (row.test(p)) {
            row ^= v;
        }
    }
    pivot_col_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
}

std::size_t gf2_rank(const std::vector<Bits> &rows, std::size_t n) {
    EchelonBasis basis(n);
    for (const auto &r : rows) {
        basis.add(r);
    }
    return basis.rank();
}

bool in_span(const Bits &v, const std::vector<Bits> &rows, std::size_t n) {
    EchelonBasis basis(n);
    for (const auto &r : rows) {
        basis.add(r);
    }
    return basis.contains(v);
}

std::vector<Bits> nullspace(const std::vector<Bits> &rows, std::size_t n) {
    EchelonBasis basis(n);
    for (const auto &r : rows) {
        basis.add(r);
    }
    const auto &pivots = basis.pivots();
    std::vector<int> pivot_of_col(n, -1);
    for (std::size_t r = 0; r < basis.rank(); r++) {
        pivot_of_col[pivots[r]] = static_cast<int>(r);
    }
    // Fully reduced rows: each pivot column appears in exactly one row.
    std::vector<Bits> out;
    for (std::size_t f = 0; f < n; f++) {
        if (pivot_of_col[f] >= 0) {
            continue;
        }
        Bits v(n);
        v.set(f);
        for (std::size_t r = 0; r < basis.rank(); r++) {
            if (basis.rows()[r].test(f)) {
                v.set(pivots[r]);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

LinearSolver::LinearSolver(const std::vector<Bits> &equations, std::size_t num_vars)
    : num_eq_(equations.size()), num_vars_(num_vars) {
    std::vector<Bits> rows = equations;
    transform_.assign(num_eq_, Bits(num_eq_));
    for (std::size_t i = 0; i < num_eq_; i++) {
        if (rows[i].size() != num_vars) {
            throw std::invalid_argument("LinearSolver: equation length mismatch");
        }
        transform_[i].set(i);
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < num_vars && r < num_eq_; col++) {
        std::size_t sel = r;
        while (sel < num_eq_ && !rows[sel].test(col)) {
            sel++;
        }
        if (sel == num_eq_) {
            continue;
        }
        std::swap(rows[sel], rows[r]);
        std::swap(transform_[sel], transform_[r]);
        for (std::size_t i = 0; i < num_eq_; i++) {
            if (i != r && rows[i].test(col)) {
                rows[i] ^= rows[r];
                transform_[i] ^= transform_[r];
            }
        }
        pivot_.push_back(col);
        r++;
    }
    rank_ = r;
    reduced_.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(rank_));
}

std::optional<Bits> LinearSolver::solve(const Bits &rhs) const {
    if (rhs.size() != num_eq_) {
        throw std::invalid_argument("LinearSolver: rhs length mismatch");
    }
    Bits x(num_vars_);
    if (rhs.none()) {
        return x;
    }
    for (std::size_t i = rank_; i < num_eq_; i++) {
        if (odd_overlap(transform_[i], rhs)) {
            return std::nullopt;
        }
    }
    for (std::size_t i = 0; i < rank_; i++) {
        if (odd_overlap(transform_[i], rhs)) {
            x.set(pivot_[i]);
        }
    }
    return x;
}

std::vector<Bits> LinearSolver::kernel_basis() const {
    std::vector<bool> is_pivot(num_vars_, false);
    for (auto p : pivot_) {
        is_pivot[p] = true;
    }
    std::vector<Bits> out;
    for (std::size_t f = 0; f < num_vars_; f++) {
        if (is_pivot[f]) {
            continue;
        }
        Bits v(num_vars_);
        v.set(f);
        for (std::size_t i = 0; i < rank_; i++) {
            if (reduced_[i].test(f)) {
                v.set(pivot_[i]);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t coset_min_weight(const Bits &v, const std::vector<Bits> &rows, std::size_t n) {
    EchelonBasis basis(n);
    std::vector<Bits> independent;
    for (const auto &r : rows) {
        if (basis.add(r)) {
            independent.push_back(r);
        }
    }
    if (independent.size() > 30) {
        throw std::invalid_argument("coset_min_weight: stabiliser rank too large to enumerate");
    }
    Bits cur = v;
    std::size_t best = cur.count();
    std::uint64_t total = std::uint64_t{1} << independent.size();
    for (std::uint64_t i = 1; i < total; i++) {
        int j = __builtin_ctzll(i);
        cur ^= independent[static_cast<std::size_t>(j)];
        best = std::min(best, cur.count());
    }
    return best;
}

}  // namespace jitslice
