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
#include "ppmetrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppmetrics/error.hpp"
#include "ppmetrics/parallel.hpp"

namespace ppm {

void MetricParams::validate() const {
    if (!(order >= 1.0) || !std::isfinite(order)) throw DomainError("order p must be finite and >= 1");
    if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw DomainError("cut-off c must be finite and > 0");
}

std::optional<std::string> theory_warning(const MetricParams& params) {
    if (params.cutoff > 1.0) {
        return "cut-off c = " + std::to_string(params.cutoff) + " > 1: distances are no longer bounded by 1";
    }
    return std::nullopt;
}

namespace {

struct Workspace {
    AssignmentSolver solver;
    CostMatrix cost;
};

Workspace& workspace() {
    thread_local Workspace ws;
    return ws;
}

void check_same_dim(const PointPattern& a, const PointPattern& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("patterns have dimensions " + std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
    }
}

void check_theory(const GroundMetric& ground) {
    ground.validate();
    if (ground.theory_mode && ground.cap > 1.0) {
        throw DomainError("d1 and dbar1 need a ground metric cap <= 1 (got " + std::to_string(ground.cap) + ")");
    }
}

// Minimum over injections of the smaller pattern into the larger one of
// sum min(c, d0)^p + c^p * (n - m), via one square assignment whose rows
// beyond m are filled with c^p. `perm` (optional) receives row -> column.
double padded_assignment(const PointPattern& small, const PointPattern& large, double cutoff, double order,
                         double cap, std::vector<std::size_t>* perm) {
    const std::size_t m = small.size();
    const std::size_t n = large.size();
    const bool linear = order == 1.0;
    const double pad = linear ? cutoff : std::pow(cutoff, order);
    Workspace& ws = workspace();
    ws.cost.assign(n, n, pad);
    const double cut = std::min(cutoff, cap);
    for (std::size_t i = 0; i < m; ++i) {
        double* row = ws.cost.row(i).data();
        const Coords x = small[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double d = capped_distance(x, large[j], cut);
            row[j] = linear ? d : std::pow(d, order);
        }
    }
    return ws.solver.solve(ws.cost, perm);
}

// Common evaluation for dbar1_pc / d1_pc after validation.
double generalized_distance(const PointPattern& xi, const PointPattern& eta, PatternDistance kind,
                            const MetricParams& params, double cap, std::vector<std::size_t>* perm,
                            bool* xi_is_small) {
    const std::size_t m = std::min(xi.size(), eta.size());
    const std::size_t n = std::max(xi.size(), eta.size());
    if (n == 0) return 0.0;
    if (kind == PatternDistance::d1 && m != n) return params.cutoff;
    // Equal sizes: a fixed order of the two patterns keeps the value
    // bit-for-bit symmetric.
    bool swap = xi.size() > eta.size();
    if (m == n) {
        const auto a = xi.flat(), b = eta.flat();
        swap = std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
    if (xi_is_small) *xi_is_small = !swap;
    const PointPattern& small = swap ? eta : xi;
    const PointPattern& large = swap ? xi : eta;
    const double total = padded_assignment(small, large, params.cutoff, params.order, cap, perm);
    const double root = params.order == 1.0 ? total : std::pow(total, 1.0 / params.order);
    return root / double(n);
}

}  // namespace

double dbar1_pc(const PointPattern& xi, const PointPattern& eta, const MetricParams& params,
                const GroundMetric& ground) {
    params.validate();
    ground.validate();
    check_same_dim(xi, eta);
    return generalized_distance(xi, eta, PatternDistance::dbar1, params, ground.cap, nullptr, nullptr);
}

double d1_pc(const PointPattern& xi, const PointPattern& eta, const MetricParams& params,
             const GroundMetric& ground) {
    params.validate();
    ground.validate();
    check_same_dim(xi, eta);
    return generalized_distance(xi, eta, PatternDistance::d1, params, ground.cap, nullptr, nullptr);
}

double dbar1(const PointPattern& xi, const PointPattern& eta, const GroundMetric& ground) {
    check_theory(ground);
    check_same_dim(xi, eta);
    return generalized_distance(xi, eta, PatternDistance::dbar1, MetricParams{}, ground.cap, nullptr, nullptr);
}

double d1(const PointPattern& xi, const PointPattern& eta, const GroundMetric& ground) {
    check_theory(ground);
    check_same_dim(xi, eta);
    return generalized_distance(xi, eta, PatternDistance::d1, MetricParams{}, ground.cap, nullptr, nullptr);
}

void PatternMetric::validate() const {
    params.validate();
    ground.validate();
}

double PatternMetric::operator()(const PointPattern& xi, const PointPattern& eta) const {
    check_same_dim(xi, eta);
    return generalized_distance(xi, eta, kind, params, ground.cap, nullptr, nullptr);
}

PatternMatching match_patterns(const PointPattern& xi, const PointPattern& eta, const PatternMetric& metric) {
    metric.validate();
    check_same_dim(xi, eta);
    PatternMatching out;
    out.partner_of_xi.assign(xi.size(), std::nullopt);
    out.partner_of_eta.assign(eta.size(), std::nullopt);
    std::vector<std::size_t> perm;
    bool xi_is_small = true;
    out.value = generalized_distance(xi, eta, metric.kind, metric.params, metric.ground.cap, &perm, &xi_is_small);
    const std::size_t m = std::min(xi.size(), eta.size());
    for (std::size_t r = 0; r < m && r < perm.size(); ++r) {
        const std::size_t c = perm[r];
        const std::size_t xi_idx = xi_is_small ? r : c;
        const std::size_t eta_idx = xi_is_small ? c : r;
        out.partner_of_xi[xi_idx] = eta_idx;
        out.partner_of_eta[eta_idx] = xi_idx;
    }
    return out;
}

double dR(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw DomainError("counts must be nonnegative");
    const std::int64_t hi = std::max(m, n);
    if (hi == 0) return 0.0;
    return double(std::abs(m - n)) / double(hi);
}

CountCoupling dRW(const CountDistribution& mu, const CountDistribution& nu) {
    CostMatrix cost(mu.size(), nu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        for (std::size_t j = 0; j < nu.size(); ++j) {
            cost(i, j) = dR(std::int64_t(mu.support()[i]), std::int64_t(nu.support()[j]));
        }
    }
    CountCoupling out;
    out.coupling = solve_transportation(mu.probs(), nu.probs(), cost);
    out.value = out.coupling.total_cost;
    return out;
}

CostMatrix pairwise_distances(const PatternCollection& P, const PatternCollection& Q, const PatternMetric& metric) {
    metric.validate();
    if (P.empty() || Q.empty()) throw DimensionError("pattern collections must be non-empty");
    const std::size_t dim = P.front().dim();
    require_dimension(P, dim);
    require_dimension(Q, dim);
    CostMatrix out(P.size(), Q.size());
    const std::size_t cols = Q.size();
    parallel_for(P.size() * cols, [&](std::size_t cell) {
        out(cell / cols, cell % cols) = metric(P[cell / cols], Q[cell % cols]);
    });
    return out;
}

double dbar2_empirical(const PatternCollection& P, const PatternCollection& Q, const PatternMetric& metric) {
    if (P.size() != Q.size()) {
        throw DimensionError("collections have sizes " + std::to_string(P.size()) + " and " +
                             std::to_string(Q.size()) +
                             "; use dbar2_transport (transportation with uniform weights) for unequal sizes");
    }
    const CostMatrix cost = pairwise_distances(P, Q, metric);
    AssignmentSolver solver;
    return solver.solve(cost) / double(P.size());
}

double dbar2_transport(const PatternCollection& P, const PatternCollection& Q, const PatternMetric& metric) {
    if (P.size() * Q.size() > kMaxTransportCells) {
        throw SizeError("transportation fallback supports at most " + std::to_string(kMaxTransportCells) +
                        " pattern pairs");
    }
    const CostMatrix cost = pairwise_distances(P, Q, metric);
    const std::vector<double> a(P.size(), 1.0 / double(P.size()));
    const std::vector<double> b(Q.size(), 1.0 / double(Q.size()));
    return solve_transportation(a, b, cost).total_cost;
}

double dW_empirical(const PointPattern& xs, const PointPattern& ys, const GroundMetric& ground) {
    ground.validate();
    check_same_dim(xs, ys);
    if (xs.size() != ys.size()) throw DimensionError("samples must have equal size");
    if (xs.empty()) throw SizeError("samples must be non-empty");
    const std::size_t n = xs.size();
    CostMatrix cost(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost(i, j) = capped_distance(xs[i], ys[j], ground.cap);
    }
    AssignmentSolver solver;
    return solver.solve(cost) / double(n);
}

}  // namespace ppm
