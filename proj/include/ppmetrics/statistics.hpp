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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ppmetrics/geometry.hpp"
#include "ppmetrics/metrics.hpp"
#include "ppmetrics/processes.hpp"
#include "ppmetrics/rng.hpp"

namespace ppm {

enum class KernelKind {
    half_interpoint,   // K(u1, u2) = d0(u1, u2) / 2; arity 2 only
    minball_diameter,  // K(u1..ul) = min(2 r, cap) / l, r = smallest enclosing radius; D = 2 only
};

struct KernelSpec {
    KernelKind kind = KernelKind::half_interpoint;
    std::size_t arity = 2;
    GroundMetric ground;

    void validate(std::size_t dim) const;
};

double kernel_value(std::span<const Coords> points, const KernelSpec& kernel);

// U-statistic: mean of the kernel over all arity-subsets of the pattern.
// Patterns with fewer than `arity` points are first topped up with copies of
// `anchor` (default: centre of the unit cube), which extends the statistic
// to a dbar1-Lipschitz function on all patterns.
double ustat(const PointPattern& xi, const KernelSpec& kernel, std::optional<Point> anchor = std::nullopt);

// Mean nearest-neighbour distance; alpha0 / alpha1 for patterns of 0 / 1 points.
double avg_nn_statistic(const PointPattern& xi, double alpha0 = 1.0, double alpha1 = 1.0,
                        const GroundMetric& ground = {});

using PatternStatistic = std::function<double(const PointPattern&)>;
using PatternPair = std::pair<PointPattern, PointPattern>;

// max |F(xi) - F(eta)| / d(xi, eta) over pairs with d > 0 (0 if none).
double lipschitz_ratio(const PatternStatistic& statistic, std::span<const PatternPair> pairs,
                       const PatternMetric& metric);

struct HomogeneityConfig {
    std::optional<double> lambda;  // estimated as the mean count when absent
    PatternMetric metric;
    std::size_t n_null = 99;
    double alpha = 0.05;
    // false: every statistic is computed against one shared comparison
    // collection; true: each null statistic gets its own.
    bool redraw_comparison = false;
    Window window;
};

struct TestResult {
    double statistic = 0.0;
    std::vector<double> null_statistics;
    std::size_t rank = 0;  // 1 = largest of the pooled values
    double p_value = 1.0;  // (# pooled values >= statistic) / (n_null + 1)
    bool reject = false;
    double lambda = 0.0;   // intensity used for the simulated collections
};

// Monte Carlo test of H0: data are i.i.d. homogeneous Poisson(lambda Leb)
// patterns on the window. Statistic: empirical dbar2 between the data and a
// simulated comparison collection. Rejects when the statistic ranks among
// the ceil(alpha (n_null + 1)) largest pooled values; ties are ordered at random.
TestResult homogeneity_test(const PatternCollection& data, const HomogeneityConfig& config, RngStream rng);

struct PowerConfig {
    double kappa = 1.0;  // 0 means the homogeneous null itself
    std::size_t n_patterns = 12;
    double lambda = 30.0;
    double cutoff = 1.0;
    PatternDistance distance = PatternDistance::dbar1;
    std::size_t reps = 100;
    std::size_t n_null = 99;
    double alpha = 0.05;
    bool estimate_lambda = false;
    bool redraw_comparison = false;
};

struct PowerEstimate {
    double kappa = 0.0;
    double cutoff = 0.0;
    std::size_t reps = 0;
    std::size_t rejections = 0;
    double power = 0.0;
    double standard_error = 0.0;
};

// Rejection rate of homogeneity_test on Poisson(lambda f_kappa Leb) data.
// Replicate r uses rng.substream(r) and replicates run in parallel.
PowerEstimate power_study(const PowerConfig& config, RngStream rng);

}  // namespace ppm
