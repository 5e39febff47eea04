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
#include <span>
#include <vector>

#include "ppmetrics/count_distribution.hpp"
#include "ppmetrics/pattern.hpp"
#include "ppmetrics/rng.hpp"

namespace ppm {

// Axis-aligned box; defaults to the unit square.
class Window {
 public:
    Window() : Window({0.0, 0.0}, {1.0, 1.0}) {}
    Window(std::vector<double> lower, std::vector<double> upper);
    static Window unit(std::size_t dim);

    std::size_t dim() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double volume() const;
    Point center() const;
    bool contains(Coords p) const;

 private:
    std::vector<double> lower_, upper_;
};

std::size_t sample_poisson_count(double mean, RngStream& rng);

// `count` i.i.d. uniform points in the window.
PointPattern sample_uniform_points(std::size_t count, const Window& window, RngStream& rng);

// Homogeneous Poisson process with lambda_total expected points in the window.
PointPattern sample_poisson_homogeneous(double lambda_total, const Window& window, RngStream& rng);

// Poisson process on [0,1]^2 with intensity lambda_total * f_kappa(x, y),
// f_kappa(x, y) = kappa exp(-kappa x) / (1 - exp(-kappa)).
PointPattern sample_poisson_fkappa(double lambda_total, double kappa, RngStream& rng);

// Points on the grid {1/n, ..., 1}, each present independently with prob. p.
PointPattern sample_bernoulli_process(std::size_t n, double p, RngStream& rng);

// Binomial(n, p) many i.i.d. uniform points on [0, 1].
PointPattern sample_binomial_process(std::size_t n, double p, RngStream& rng);

// Writes one location into the span (length = dimension).
using LocationSampler = std::function<void(RngStream&, std::span<double>)>;

// Count from `counts`, then i.i.d. locations from `locations`.
PointPattern sample_iid_process(const CountDistribution& counts, std::size_t dim, const LocationSampler& locations,
                                RngStream& rng);

// Spatial immigration-death process with uniform immigration of total rate
// lambda_total on the window and unit per-capita death rate. Sampled from
// the exact time-t law: each initial point survives with prob. exp(-t),
// plus an independent Poisson(lambda_total (1 - exp(-t))) uniform pattern.
PointPattern evolve_immigration_death(const PointPattern& initial, double lambda_total, const Window& window,
                                      double t, RngStream& rng);

struct ImmigrationDeathState {
    PointPattern pattern;
    double time = 0.0;
    double lambda_total = 1.0;
};

// Moves the state forward by dt (Markov property of the exact marginal).
void advance(ImmigrationDeathState& state, const Window& window, double dt, RngStream& rng);

}  // namespace ppm
