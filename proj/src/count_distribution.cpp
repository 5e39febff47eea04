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
#include "ppmetrics/count_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ppmetrics/error.hpp"

namespace ppm {

CountDistribution::CountDistribution(std::vector<std::size_t> support, std::vector<double> probs) {
    if (support.empty()) throw DomainError("count distribution needs at least one atom");
    if (support.size() != probs.size()) throw DimensionError("support and probability vectors differ in length");
    std::vector<std::size_t> order(support.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    double sum = 0.0;
    for (std::size_t idx : order) {
        const double p = probs[idx];
        if (!std::isfinite(p) || p < 0.0) throw DomainError("probabilities must be finite and nonnegative");
        if (!support_.empty() && support_.back() == support[idx]) {
            throw DomainError("duplicate atom " + std::to_string(support[idx]) + " in count distribution");
        }
        support_.push_back(support[idx]);
        probs_.push_back(p);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw DomainError("probabilities sum to " + std::to_string(sum) + ", expected 1");
}

CountDistribution CountDistribution::from_pmf(std::vector<double> pmf) {
    std::vector<std::size_t> support(pmf.size());
    std::iota(support.begin(), support.end(), std::size_t{0});
    return {std::move(support), std::move(pmf)};
}

CountDistribution CountDistribution::dirac(std::size_t k) { return {{k}, {1.0}}; }

CountDistribution CountDistribution::binomial(std::size_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binomial probability must lie in [0, 1]");
    std::vector<double> pmf(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double logc = std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
        const double a = k == 0 ? 0.0 : double(k) * std::log(p);
        const double b = k == n ? 0.0 : double(n - k) * std::log1p(-p);
        pmf[k] = std::exp(logc + a + b);
    }
    const double sum = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    for (double& x : pmf) x /= sum;
    return from_pmf(std::move(pmf));
}

CountDistribution CountDistribution::poisson(double mean, double tail) {
    if (!(mean > 0.0) || !std::isfinite(mean)) throw DomainError("Poisson mean must be positive and finite");
    if (!(tail > 0.0 && tail < 1.0)) throw DomainError("tail mass must lie in (0, 1)");
    std::vector<double> pmf;
    double cdf = 0.0;
    for (std::size_t k = 0;; ++k) {
        const double p = std::exp(double(k) * std::log(mean) - mean - std::lgamma(double(k) + 1));
        pmf.push_back(p);
        cdf += p;
        if (cdf >= 1.0 - tail && double(k) >= mean) break;
    }
    pmf.back() += 1.0 - cdf;
    return from_pmf(std::move(pmf));
}

double CountDistribution::prob_positive() const {
    double p = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i] > 0) p += probs_[i];
    }
    return p;
}

double CountDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) m += double(support_[i]) * probs_[i];
    return m;
}

}  // namespace ppm
