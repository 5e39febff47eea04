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
#include "ppmetrics/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ppmetrics/error.hpp"

namespace ppm {

void CostMatrix::validate() const {
    if (rows_ == 0 || cols_ == 0) throw DimensionError("cost matrix must have at least one row and column");
    for (double c : data_) {
        if (std::isnan(c)) throw DomainError("cost matrix contains NaN");
        if (!std::isfinite(c)) throw DomainError("cost matrix contains an infinite entry");
        if (c < 0.0) throw DomainError("cost matrix contains a negative entry");
    }
}

// Jonker-Volgenant: column reduction with reduction transfer, two rounds of
// augmenting row reduction, then Dijkstra-style shortest augmenting paths
// with lazily updated column prices for the rows still free.
double AssignmentSolver::solve(const CostMatrix& cost, std::vector<std::size_t>* permutation) {
    const std::size_t n = cost.rows();
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    auto c = [&](std::size_t i, std::size_t j) { return cost(i, j); };

    if (n == 1) {
        if (permutation) permutation->assign(1, 0);
        return cost(0, 0);
    }

    row_to_col_.assign(n, none);
    col_to_row_.assign(n, none);
    v_.assign(n, inf);
    free_rows_.clear();

    // Column reduction: v_j = min_i c_ij, tentatively assigning the argmin row.
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = cost.row(i).data();
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] < v_[j]) {
                v_[j] = row[j];
                col_to_row_[j] = i;
            }
        }
    }
    unique_.assign(n, 1);
    for (std::size_t j = n; j-- > 0;) {
        const std::size_t i = col_to_row_[j];
        if (row_to_col_[i] == none) {
            row_to_col_[i] = j;
        } else {
            unique_[i] = 0;
            col_to_row_[j] = none;
        }
    }
    // Reduction transfer for rows that own exactly one column.
    for (std::size_t i = 0; i < n; ++i) {
        if (row_to_col_[i] == none) {
            free_rows_.push_back(i);
        } else if (unique_[i]) {
            const std::size_t j = row_to_col_[i];
            double m = inf;
            for (std::size_t j2 = 0; j2 < n; ++j2) {
                if (j2 != j) m = std::min(m, c(i, j2) - v_[j2]);
            }
            v_[j] -= m;
        }
    }

    // Augmenting row reduction.
    for (int round = 0; round < 2 && !free_rows_.empty(); ++round) {
        std::size_t current = 0, next_free = 0, scans = 0;
        const std::size_t n_free = free_rows_.size();
        while (current < n_free) {
            ++scans;
            const std::size_t fi = free_rows_[current++];
            std::size_t j1 = 0, j2 = none;
            double v1 = c(fi, 0) - v_[0], v2 = inf;
            for (std::size_t j = 1; j < n; ++j) {
                const double h = c(fi, j) - v_[j];
                if (h < v2) {
                    if (h >= v1) {
                        v2 = h;
                        j2 = j;
                    } else {
                        v2 = v1;
                        v1 = h;
                        j2 = j1;
                        j1 = j;
                    }
                }
            }
            std::size_t i0 = col_to_row_[j1];
            const double v1_new = v_[j1] - (v2 - v1);
            const bool lowers = v1_new < v_[j1];
            if (scans < current * n) {
                if (lowers) {
                    v_[j1] = v1_new;
                } else if (i0 != none && j2 != none) {
                    j1 = j2;
                    i0 = col_to_row_[j2];
                }
                if (i0 != none) {
                    if (lowers) {
                        free_rows_[--current] = i0;
                    } else {
                        free_rows_[next_free++] = i0;
                    }
                }
            } else if (i0 != none) {
                free_rows_[next_free++] = i0;
            }
            row_to_col_[fi] = j1;
            col_to_row_[j1] = fi;
        }
        free_rows_.resize(next_free);
    }

    // Shortest augmenting paths for the remaining free rows.
    cols_.resize(n);
    d_.resize(n);
    pred_.resize(n);
    for (const std::size_t start : free_rows_) {
        for (std::size_t j = 0; j < n; ++j) {
            cols_[j] = j;
            d_[j] = c(start, j) - v_[j];
            pred_[j] = start;
        }
        std::size_t lo = 0, hi = 0, n_ready = 0, final_j = none;
        while (final_j == none) {
            if (lo == hi) {
                // Collect every column at the current minimum distance.
                n_ready = lo;
                hi = lo + 1;
                double mind = d_[cols_[lo]];
                for (std::size_t k = hi; k < n; ++k) {
                    const std::size_t j = cols_[k];
                    if (d_[j] <= mind) {
                        if (d_[j] < mind) {
                            hi = lo;
                            mind = d_[j];
                        }
                        cols_[k] = cols_[hi];
                        cols_[hi++] = j;
                    }
                }
                for (std::size_t k = lo; k < hi; ++k) {
                    if (col_to_row_[cols_[k]] == none) {
                        final_j = cols_[k];
                        break;
                    }
                }
            }
            if (final_j != none) break;
            // Scan the rows matched to the minimum-distance columns. `lo` is
            // only committed when the scan ends without reaching a free column.
            std::size_t scan = lo;
            while (scan != hi && final_j == none) {
                const std::size_t jl = cols_[scan++];
                const std::size_t i = col_to_row_[jl];
                const double mind = d_[jl];
                const double h = c(i, jl) - v_[jl] - mind;
                for (std::size_t k = hi; k < n; ++k) {
                    const std::size_t j = cols_[k];
                    const double reduced = c(i, j) - v_[j] - h;
                    if (reduced < d_[j]) {
                        d_[j] = reduced;
                        pred_[j] = i;
                        if (reduced == mind) {
                            if (col_to_row_[j] == none) {
                                final_j = j;
                                break;
                            }
                            cols_[k] = cols_[hi];
                            cols_[hi++] = j;
                        }
                    }
                }
            }
            if (final_j == none) lo = scan;
        }
        const double mind = d_[cols_[lo]];
        for (std::size_t k = 0; k < n_ready; ++k) {
            const std::size_t j = cols_[k];
            v_[j] += d_[j] - mind;
        }
        // Flip the path back to the start row.
        std::size_t j = final_j;
        for (;;) {
            const std::size_t i = pred_[j];
            col_to_row_[j] = i;
            std::swap(j, row_to_col_[i]);
            if (i == start) break;
        }
    }

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost(i, row_to_col_[i]);
    if (permutation) permutation->assign(row_to_col_.begin(), row_to_col_.end());
    return total;
}

AssignmentResult solve_assignment(const CostMatrix& cost) {
    cost.validate();
    if (!cost.square()) {
        throw DimensionError("assignment needs a square cost matrix, got " + std::to_string(cost.rows()) + "x" +
                             std::to_string(cost.cols()));
    }
    AssignmentResult result;
    AssignmentSolver solver;
    result.total_cost = solver.solve(cost, &result.permutation);
    return result;
}

namespace {

constexpr double kWeightTolerance = 1e-10;

void check_weights(std::span<const double> w, const char* name) {
    if (w.empty()) throw DimensionError(std::string(name) + " weights are empty");
    double sum = 0.0;
    for (double x : w) {
        if (!std::isfinite(x)) throw DomainError(std::string(name) + " weights must be finite");
        if (x < 0.0) throw DomainError(std::string(name) + " weights must be nonnegative");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kWeightTolerance) {
        throw DomainError(std::string(name) + " weights sum to " + std::to_string(sum) + ", expected 1");
    }
}

// Basis of the transportation simplex: k + l - 1 cells forming a spanning
// tree on the bipartite graph rows {0..k-1}, columns {k..k+l-1}.
class TransportBasis {
 public:
    TransportBasis(std::size_t k, std::size_t l) : k_(k), l_(l), adj_(k + l) {}

    void add(std::size_t cell) {
        adj_[cell / l_].push_back(cell);
        adj_[k_ + cell % l_].push_back(cell);
    }

    void remove(std::size_t cell) {
        auto drop = [cell](std::vector<std::size_t>& v) { v.erase(std::find(v.begin(), v.end(), cell)); };
        drop(adj_[cell / l_]);
        drop(adj_[k_ + cell % l_]);
    }

    // Potentials with u[0] = 0 and u_i + v_j = c_ij on every basic cell.
    void potentials(const CostMatrix& cost, std::vector<double>& u, std::vector<double>& v) {
        std::vector<double> pot(k_ + l_, 0.0);
        seen_.assign(k_ + l_, 0);
        stack_.assign(1, 0);
        seen_[0] = 1;
        while (!stack_.empty()) {
            const std::size_t node = stack_.back();
            stack_.pop_back();
            for (std::size_t cell : adj_[node]) {
                const std::size_t other = node < k_ ? k_ + cell % l_ : cell / l_;
                if (seen_[other]) continue;
                seen_[other] = 1;
                pot[other] = cost(cell / l_, cell % l_) - pot[node];
                stack_.push_back(other);
            }
        }
        u.assign(pot.begin(), pot.begin() + static_cast<std::ptrdiff_t>(k_));
        v.assign(pot.begin() + static_cast<std::ptrdiff_t>(k_), pot.end());
    }

    // Cells on the tree path from column node of `cell` to its row node,
    // in order starting at the column end.
    std::vector<std::size_t> path(std::size_t cell) {
        const std::size_t from = k_ + cell % l_;
        const std::size_t to = cell / l_;
        parent_cell_.assign(k_ + l_, kNone);
        seen_.assign(k_ + l_, 0);
        stack_.assign(1, from);
        seen_[from] = 1;
        while (!stack_.empty()) {
            const std::size_t node = stack_.back();
            stack_.pop_back();
            if (node == to) break;
            for (std::size_t c : adj_[node]) {
                const std::size_t other = node < k_ ? k_ + c % l_ : c / l_;
                if (seen_[other]) continue;
                seen_[other] = 1;
                parent_cell_[other] = c;
                stack_.push_back(other);
            }
        }
        std::vector<std::size_t> cells;
        for (std::size_t node = to; node != from;) {
            const std::size_t c = parent_cell_[node];
            cells.push_back(c);
            node = node < k_ ? k_ + c % l_ : c / l_;
        }
        std::reverse(cells.begin(), cells.end());
        return cells;
    }

 private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t k_, l_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> parent_cell_, stack_;
    std::vector<char> seen_;
};

}  // namespace

TransportPlan solve_transportation(std::span<const double> source_weights,
                                   std::span<const double> target_weights, const CostMatrix& cost) {
    check_weights(source_weights, "source");
    check_weights(target_weights, "target");
    const std::size_t k = source_weights.size();
    const std::size_t l = target_weights.size();
    if (cost.rows() != k || cost.cols() != l) {
        throw DimensionError("cost matrix is " + std::to_string(cost.rows()) + "x" + std::to_string(cost.cols()) +
                             " but weights have lengths " + std::to_string(k) + " and " + std::to_string(l));
    }
    cost.validate();
    if (k > kMaxTransportSide || l > kMaxTransportSide) {
        throw SizeError("transportation problem exceeds " + std::to_string(kMaxTransportSide) + " atoms per side");
    }

    std::vector<double> flow(k * l, 0.0);
    std::vector<char> basic(k * l, 0);
    TransportBasis basis(k, l);

    // North-west corner start; always advances exactly one index so the
    // basis has k + l - 1 cells even under degeneracy.
    {
        std::vector<double> ra(source_weights.begin(), source_weights.end());
        std::vector<double> rb(target_weights.begin(), target_weights.end());
        std::size_t i = 0, j = 0;
        for (;;) {
            const double x = std::min(ra[i], rb[j]);
            flow[i * l + j] = x;
            basic[i * l + j] = 1;
            basis.add(i * l + j);
            ra[i] -= x;
            rb[j] -= x;
            if (i == k - 1 && j == l - 1) break;
            if (i == k - 1) {
                ++j;
            } else if (j == l - 1 || ra[i] <= rb[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }

    double scale = 1.0;
    for (double c : cost.data()) scale = std::max(scale, c);
    const double tol = 1e-12 * scale;
    // Dantzig pricing first; Bland's rule after this many pivots rules out cycling.
    const std::size_t bland_after = 50 * (k + l) + 1000;

    std::vector<double> u, v;
    for (std::size_t iter = 0;; ++iter) {
        basis.potentials(cost, u, v);
        const bool bland = iter >= bland_after;
        std::size_t entering = k * l;
        double best = -tol;
        for (std::size_t i = 0; i < k && !(bland && entering < k * l); ++i) {
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t cell = i * l + j;
                if (basic[cell]) continue;
                const double rc = cost(i, j) - u[i] - v[j];
                if (rc < best) {
                    best = rc;
                    entering = cell;
                    if (bland) break;
                }
            }
        }
        if (entering == k * l) break;

        // Cycle: entering cell (+), then the tree path from its column back
        // to its row, alternating -, +, -, ...
        const std::vector<std::size_t> path = basis.path(entering);
        double theta = std::numeric_limits<double>::infinity();
        std::size_t leaving = k * l;
        for (std::size_t t = 0; t < path.size(); t += 2) {
            const std::size_t c = path[t];
            if (flow[c] < theta || (flow[c] == theta && c < leaving)) {
                theta = flow[c];
                leaving = c;
            }
        }
        for (std::size_t t = 0; t < path.size(); ++t) {
            flow[path[t]] += (t % 2 == 0) ? -theta : theta;
        }
        flow[entering] += theta;
        flow[leaving] = 0.0;
        basic[leaving] = 0;
        basis.remove(leaving);
        basic[entering] = 1;
        basis.add(entering);
    }

    TransportPlan result;
    result.plan = CostMatrix(k, l, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            const double x = std::max(0.0, flow[i * l + j]);
            result.plan(i, j) = x;
            total += x * cost(i, j);
        }
    }
    result.total_cost = total;
    return result;
}

}  // namespace ppm
