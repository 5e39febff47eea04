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
#include "ppmetrics/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ppmetrics/error.hpp"
#include "ppmetrics/parallel.hpp"

namespace ppm {

void KernelSpec::validate(std::size_t dim) const {
    ground.validate();
    if (arity < 2) throw DomainError("kernel arity must be at least 2");
    if (kind == KernelKind::half_interpoint && arity != 2) {
        throw DomainError("the half-interpoint kernel has arity 2");
    }
    if (kind == KernelKind::minball_diameter && dim != 2) {
        throw DimensionError("the bounding-ball kernel supports dimension 2 only");
    }
}

double kernel_value(std::span<const Coords> points, const KernelSpec& kernel) {
    if (points.size() != kernel.arity) throw DimensionError("kernel evaluated on the wrong number of points");
    switch (kernel.kind) {
        case KernelKind::half_interpoint:
            return 0.5 * capped_distance(points[0], points[1], kernel.ground.cap);
        case KernelKind::minball_diameter:
            return std::min(2.0 * min_enclosing_radius(points), kernel.ground.cap) / double(kernel.arity);
    }
    return 0.0;
}

double ustat(const PointPattern& xi, const KernelSpec& kernel, std::optional<Point> anchor) {
    kernel.validate(xi.dim());
    const Point x0 = anchor ? *anchor : Point(std::vector<double>(xi.dim(), 0.5));
    if (x0.dim() != xi.dim()) throw DimensionError("anchor and pattern differ in dimension");

    PointPattern padded = xi;
    while (padded.size() < kernel.arity) padded.push_back(x0);

    const std::size_t m = padded.size();
    const std::size_t l = kernel.arity;
    std::vector<std::size_t> idx(l);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<Coords> pts(l);
    double sum = 0.0;
    std::size_t count = 0;
    for (;;) {
        for (std::size_t k = 0; k < l; ++k) pts[k] = padded[idx[k]];
        sum += kernel_value(pts, kernel);
        ++count;
        // Next combination in lexicographic order.
        std::size_t k = l;
        while (k > 0 && idx[k - 1] == m - l + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t t = k; t < l; ++t) idx[t] = idx[t - 1] + 1;
    }
    return sum / double(count);
}

double avg_nn_statistic(const PointPattern& xi, double alpha0, double alpha1, const GroundMetric& ground) {
    if (!(alpha0 >= 0.0 && alpha0 <= 1.0) || !(alpha1 >= 0.0 && alpha1 <= 1.0)) {
        throw DomainError("alpha0 and alpha1 must lie in [0, 1]");
    }
    if (xi.size() == 0) return alpha0;
    if (xi.size() == 1) return alpha1;
    const std::vector<double> nn = nn_distances(xi, ground);
    return std::accumulate(nn.begin(), nn.end(), 0.0) / double(nn.size());
}

double lipschitz_ratio(const PatternStatistic& statistic, std::span<const PatternPair> pairs,
                       const PatternMetric& metric) {
    if (pairs.empty()) throw DomainError("lipschitz_ratio needs at least one pair");
    metric.validate();
    double worst = 0.0;
    for (const auto& [a, b] : pairs) {
        const double d = metric(a, b);
        if (d <= 0.0) continue;
        worst = std::max(worst, std::abs(statistic(a) - statistic(b)) / d);
    }
    return worst;
}

namespace {

PatternCollection draw_poisson_collection(std::size_t n, double lambda, const Window& window, RngStream rng) {
    PatternCollection out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_poisson_homogeneous(lambda, window, rng));
    return out;
}

}  // namespace

TestResult homogeneity_test(const PatternCollection& data, const HomogeneityConfig& config, RngStream rng) {
    if (data.size() < 2) throw DomainError("the homogeneity test needs at least two patterns");
    if (config.n_null < 1) throw DomainError("at least one null statistic is required");
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    config.metric.validate();
    require_dimension(data, config.window.dim());

    TestResult out;
    if (config.lambda) {
        out.lambda = *config.lambda;
    } else {
        std::size_t total = 0;
        for (const PointPattern& p : data) total += p.size();
        out.lambda = double(total) / double(data.size());
    }
    if (!(out.lambda > 0.0) || !std::isfinite(out.lambda)) {
        throw DomainError("intensity lambda must be positive (all data patterns empty?)");
    }

    const std::size_t n = data.size();
    const PatternCollection comparison = draw_poisson_collection(n, out.lambda, config.window, rng.substream(0));
    out.statistic = dbar2_empirical(data, comparison, config.metric);

    out.null_statistics.assign(config.n_null, 0.0);
    parallel_for(config.n_null, [&](std::size_t j) {
        const RngStream s = rng.substream(1 + j);
        const PatternCollection simulated = draw_poisson_collection(n, out.lambda, config.window, s.substream(0));
        if (config.redraw_comparison) {
            const PatternCollection own = draw_poisson_collection(n, out.lambda, config.window, s.substream(1));
            out.null_statistics[j] = dbar2_empirical(simulated, own, config.metric);
        } else {
            out.null_statistics[j] = dbar2_empirical(simulated, comparison, config.metric);
        }
    });

    std::size_t greater = 0, ties = 0;
    for (double v : out.null_statistics) {
        if (v > out.statistic) ++greater;
        if (v == out.statistic) ++ties;
    }
    RngStream tie_rng = rng.substream(config.n_null + 1);
    const std::size_t tie_offset = ties == 0 ? 0 : std::size_t(tie_rng.uniform() * double(ties + 1));
    const std::size_t pooled = config.n_null + 1;
    out.rank = 1 + greater + std::min(tie_offset, ties);
    out.p_value = double(greater + ties + 1) / double(pooled);
    const auto critical = static_cast<std::size_t>(std::ceil(config.alpha * double(pooled) - 1e-9));
    out.reject = out.rank <= critical;
    return out;
}

PowerEstimate power_study(const PowerConfig& config, RngStream rng) {
    if (config.reps < 1) throw DomainError("reps must be at least 1");
    if (!(config.kappa >= 0.0) || !std::isfinite(config.kappa)) throw DomainError("kappa must be >= 0");
    if (!(config.lambda > 0.0)) throw DomainError("lambda must be positive");
    if (config.n_patterns < 2) throw DomainError("n_patterns must be at least 2");

    HomogeneityConfig test;
    test.metric.kind = config.distance;
    test.metric.params.cutoff = config.cutoff;
    test.metric.ground.cap = std::max(1.0, config.cutoff);
    test.n_null = config.n_null;
    test.alpha = config.alpha;
    if (!config.estimate_lambda) test.lambda = config.lambda;
    test.redraw_comparison = config.redraw_comparison;
    test.metric.validate();

    std::vector<char> rejected(config.reps, 0);
    parallel_for(config.reps, [&](std::size_t r) {
        const RngStream rep = rng.substream(r);
        RngStream data_rng = rep.substream(0);
        PatternCollection data;
        for (std::size_t i = 0; i < config.n_patterns; ++i) {
            data.push_back(config.kappa == 0.0 ? sample_poisson_homogeneous(config.lambda, test.window, data_rng)
                                               : sample_poisson_fkappa(config.lambda, config.kappa, data_rng));
        }
        rejected[r] = homogeneity_test(data, test, rep.substream(1)).reject ? 1 : 0;
    });

    PowerEstimate out;
    out.kappa = config.kappa;
    out.cutoff = config.cutoff;
    out.reps = config.reps;
    out.rejections = std::size_t(std::count(rejected.begin(), rejected.end(), 1));
    out.power = double(out.rejections) / double(out.reps);
    out.standard_error = std::sqrt(out.power * (1.0 - out.power) / double(out.reps));
    return out;
}

}  // namespace ppm
