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
#include "ppmetrics/processes.hpp"

#include <cmath>
#include <string>

#include <boost/random/binomial_distribution.hpp>
#include <boost/random/discrete_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>

#include "ppmetrics/error.hpp"

namespace ppm {

Window::Window(std::vector<double> lower, std::vector<double> upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size()) throw DimensionError("window corners must share a dimension >= 1");
    for (std::size_t k = 0; k < lower_.size(); ++k) {
        if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k]) || !(lower_[k] < upper_[k])) {
            throw DomainError("window needs finite lower < upper in every coordinate");
        }
    }
}

Window Window::unit(std::size_t dim) { return {std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0)}; }

double Window::volume() const {
    double v = 1.0;
    for (std::size_t k = 0; k < lower_.size(); ++k) v *= upper_[k] - lower_[k];
    return v;
}

Point Window::center() const {
    Point c;
    for (std::size_t k = 0; k < lower_.size(); ++k) c.coords.push_back(0.5 * (lower_[k] + upper_[k]));
    return c;
}

bool Window::contains(Coords p) const {
    if (p.size() != dim()) return false;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] < lower_[k] || p[k] > upper_[k]) return false;
    }
    return true;
}

namespace {

void check_lambda(double lambda_total) {
    if (!(lambda_total > 0.0) || !std::isfinite(lambda_total)) {
        throw DomainError("total intensity lambda must be positive and finite");
    }
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability p must lie in [0, 1]");
}

void check_grid_size(std::size_t n) {
    if (n == 0) throw DomainError("number of trials n must be at least 1");
}

}  // namespace

std::size_t sample_poisson_count(double mean, RngStream& rng) {
    if (mean == 0.0) return 0;
    check_lambda(mean);
    boost::random::poisson_distribution<long, double> dist(mean);
    return static_cast<std::size_t>(dist(rng));
}

PointPattern sample_uniform_points(std::size_t count, const Window& window, RngStream& rng) {
    const std::size_t d = window.dim();
    std::vector<double> flat(count * d);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const double lo = window.lower()[k], hi = window.upper()[k];
            flat[i * d + k] = lo + (hi - lo) * rng.uniform();
        }
    }
    return PointPattern(d, std::move(flat));
}

PointPattern sample_poisson_homogeneous(double lambda_total, const Window& window, RngStream& rng) {
    check_lambda(lambda_total);
    const std::size_t count = sample_poisson_count(lambda_total, rng);
    return sample_uniform_points(count, window, rng);
}

PointPattern sample_poisson_fkappa(double lambda_total, double kappa, RngStream& rng) {
    check_lambda(lambda_total);
    if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be positive and finite");
    const std::size_t count = sample_poisson_count(lambda_total, rng);
    const double mass = -std::expm1(-kappa);  // 1 - exp(-kappa)
    std::vector<double> flat(2 * count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = rng.uniform();
        flat[2 * i] = std::min(1.0, -std::log1p(-u * mass) / kappa);
        flat[2 * i + 1] = rng.uniform();
    }
    return PointPattern(2, std::move(flat));
}

PointPattern sample_bernoulli_process(std::size_t n, double p, RngStream& rng) {
    check_grid_size(n);
    check_probability(p);
    PointPattern out(1);
    for (std::size_t i = 1; i <= n; ++i) {
        if (rng.uniform() < p) {
            const double x = double(i) / double(n);
            out.push_back(Coords(&x, 1));
        }
    }
    return out;
}

PointPattern sample_binomial_process(std::size_t n, double p, RngStream& rng) {
    check_grid_size(n);
    check_probability(p);
    boost::random::binomial_distribution<long, double> dist(static_cast<long>(n), p);
    const auto count = static_cast<std::size_t>(dist(rng));
    return sample_uniform_points(count, Window::unit(1), rng);
}

PointPattern sample_iid_process(const CountDistribution& counts, std::size_t dim, const LocationSampler& locations,
                                RngStream& rng) {
    boost::random::discrete_distribution<std::size_t, double> pick(counts.probs().begin(), counts.probs().end());
    const std::size_t count = counts.support()[pick(rng)];
    std::vector<double> flat(count * dim);
    for (std::size_t i = 0; i < count; ++i) locations(rng, std::span<double>(flat.data() + i * dim, dim));
    return PointPattern(dim, std::move(flat));
}

PointPattern evolve_immigration_death(const PointPattern& initial, double lambda_total, const Window& window,
                                      double t, RngStream& rng) {
    check_lambda(lambda_total);
    if (!(t >= 0.0) || std::isnan(t)) throw DomainError("time t must be nonnegative");
    if (initial.dim() != window.dim()) throw DimensionError("initial pattern and window differ in dimension");
    if (t == 0.0) return initial;
    const double survive = std::exp(-t);
    PointPattern out(initial.dim());
    for (std::size_t i = 0; i < initial.size(); ++i) {
        if (rng.uniform() < survive) out.push_back(initial[i]);
    }
    const double immigrant_mean = -lambda_total * std::expm1(-t);
    out.append(sample_uniform_points(sample_poisson_count(immigrant_mean, rng), window, rng));
    return out;
}

void advance(ImmigrationDeathState& state, const Window& window, double dt, RngStream& rng) {
    state.pattern = evolve_immigration_death(state.pattern, state.lambda_total, window, dt, rng);
    state.time += dt;
}

}  // namespace ppm
