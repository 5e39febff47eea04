/*
 * Copyright 2026 The ppmetrics Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ppm {

// Dense row-major matrix of nonnegative pairing costs.
class CostMatrix {
 public:
    CostMatrix() = default;
    CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    // Reshape in place, reusing the allocation when possible.
    void assign(std::size_t rows, std::size_t cols, double fill) {
        rows_ = rows;
        cols_ = cols;
        data_.assign(rows * cols, fill);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> data() const { return data_; }

    // Throws DomainError on NaN, infinite or negative entries and
    // DimensionError on an empty shape.
    void validate() const;

 private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct AssignmentResult {
    // permutation[i] is the column assigned to row i.
    std::vector<std::size_t> permutation;
    double total_cost = 0.0;
};

// Reusable O(n^3) shortest-augmenting-path (Jonker-Volgenant flavour of the
// Hungarian method) solver. Keeping one
// instance per thread avoids reallocating the work arrays when many small
// problems are solved in a row.
class AssignmentSolver {
 public:
    // Solves a validated square problem. Only the minimal total cost is
    // computed; the permutation is written to `permutation` if non-null.
    double solve(const CostMatrix& cost, std::vector<std::size_t>* permutation = nullptr);

 private:
    std::vector<double> v_, d_;
    std::vector<std::size_t> row_to_col_, col_to_row_, free_rows_, cols_, pred_;
    std::vector<char> unique_;
};

// Minimum-cost perfect matching of a square cost matrix. Ties are resolved by
// the solver's scanning order, so the result is deterministic.
AssignmentResult solve_assignment(const CostMatrix& cost);

struct TransportPlan {
    CostMatrix plan;  // plan(i, j) = mass moved from source i to target j
    double total_cost = 0.0;
};

// Largest supported side for solve_transportation.
inline constexpr std::size_t kMaxTransportSide = 500;

// Exact discrete optimal transport between two probability vectors via the
// transportation simplex (u-v potentials on a spanning-tree basis).
TransportPlan solve_transportation(std::span<const double> source_weights,
                                   std::span<const double> target_weights, const CostMatrix& cost);

}  // namespace ppm
