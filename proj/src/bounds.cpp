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
#include "ppmetrics/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>

#include "ppmetrics/error.hpp"

namespace ppm {

namespace {

void check_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
}

void check_open_probability(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1)");
}

double min_with_lambda(PatternSize n, double lambda) { return n ? std::min(double(*n), lambda) : lambda; }

double ln_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

// (1 - e^{-x}) / x, continuous at 0.
double one_minus_exp_over(double x) {
    if (x < 1e-8) return 1.0 - 0.5 * x;
    return -std::expm1(-x) / x;
}

}  // namespace

double stein_factor_delta1(PatternSize n, double lambda) {
    check_lambda(lambda);
    const double m = min_with_lambda(n, lambda);
    const double t2 = (0.95 + ln_plus(lambda)) / lambda;
    const double t3 = m == 0.0 ? 1.0 : -std::expm1(-m) / m;
    return std::min({1.0, t2, t3});
}

double stein_factor_delta2(PatternSize n, double lambda) {
    check_lambda(lambda);
    const double m = min_with_lambda(n, lambda);
    const double t2 = m == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / m;
    const double t3 = (n ? 1.09 / (double(*n) + 1.0) : 0.0) + 1.0 / lambda;
    const double t4 = lambda >= 1.76 ? 2.0 * std::log(lambda) / lambda : 0.75;
    return std::min({0.75, t2, t3, t4});
}

double bernoulli_binomial_bound(std::size_t n, double p) {
    if (n < 1) throw DomainError("n must be at least 1");
    check_open_probability(p);
    const double nd = double(n);
    return std::min(1.0 / (2.0 * nd) + p / 2.0, 1.0 / std::sqrt(3.0 * nd * p));
}

double binomial_poisson_bound(std::size_t n, double p) {
    if (n < 2) throw DomainError("n must be at least 2");
    check_open_probability(p);
    const double nd = double(n);
    return (0.95 + ln_plus(nd * p)) * p / std::max(0.5, std::sqrt((nd - 1.0) * p * (1.0 - p)));
}

double bernoulli_poisson_bound(std::size_t n, double p) {
    return bernoulli_binomial_bound(n, p) + binomial_poisson_bound(n, p);
}

IidBoundsResult iid_bounds(const CountDistribution& mu, const CountDistribution& nu, double dW_locations, double cap) {
    if (!(dW_locations >= 0.0 && dW_locations <= cap)) {
        throw DomainError("location distance dW must lie in [0, " + std::to_string(cap) + "]");
    }
    CountCoupling rw = dRW(mu, nu);
    IidBoundsResult out;
    out.dRW_value = rw.value;
    out.c1 = std::max(mu.prob_positive(), nu.prob_positive());
    double c2 = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        for (std::size_t j = 0; j < nu.size(); ++j) {
            const std::size_t m = mu.support()[i], n = nu.support()[j];
            const std::size_t hi = std::max(m, n);
            if (hi > 0) c2 += rw.coupling.plan(i, j) * double(std::min(m, n)) / double(hi);
        }
    }
    out.c2 = c2;
    out.lower = std::max(out.dRW_value, out.c1 * dW_locations);
    out.upper = out.dRW_value + out.c2 * dW_locations;
    out.coupling = std::move(rw.coupling);
    return out;
}

double poisson_poisson_bound(double mu_total, double nu_total, double dW_normalized) {
    if (!(mu_total > 0.0) || !(nu_total > 0.0) || !std::isfinite(mu_total) || !std::isfinite(nu_total)) {
        throw DomainError("Poisson totals must be positive and finite");
    }
    if (!(dW_normalized >= 0.0) || !std::isfinite(dW_normalized)) throw DomainError("dW must be nonnegative");
    const double hi = std::max(mu_total, nu_total), lo = std::min(mu_total, nu_total);
    return std::abs(mu_total - nu_total) / hi - std::expm1(-lo) * dW_normalized;
}

double dRW_poisson(double mu_total, double nu_total) {
    return dRW(CountDistribution::poisson(mu_total), CountDistribution::poisson(nu_total)).value;
}

double ein(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("Ein needs a finite nonnegative argument");
    if (x < 1.0) {
        // Alternating series sum_{k>=1} (-1)^{k+1} x^k / (k k!).
        double term = x, sum = x;
        for (int k = 2; k < 40; ++k) {
            term *= -x / double(k);
            sum += term / double(k);
        }
        return sum;
    }
    return boost::math::expint(1, x) + std::log(x) + std::numbers::egamma;
}

CounterexampleIntegrals counterexample_integrals(double lambda) {
    if (!(lambda > 1.0) || !std::isfinite(lambda)) throw DomainError("lambda must exceed 1");
    const double a = lambda - 1.0;
    using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
    constexpr double kAbsTol = 1e-10;

    auto integrate = [&](auto&& f, double& err_out) {
        // Split where the h(a s) factor changes scale so both pieces are smooth.
        const double knee = std::min(0.5, 20.0 / a);
        double e1 = 0.0, e2 = 0.0;
        const double v = Quad::integrate(f, 0.0, knee, 15, 1e-12, &e1) + Quad::integrate(f, knee, 1.0, 15, 1e-12, &e2);
        err_out = std::max(err_out, e1 + e2);
        return v;
    };

    CounterexampleIntegrals out;
    out.delta1_value =
        integrate([a](double s) { return one_minus_exp_over(a * s) * std::exp(-s); }, out.quadrature_error);
    out.delta2_value = integrate([a](double s) { return (1.0 - s) * one_minus_exp_over(a * s) * std::exp(-s); },
                                 out.quadrature_error);
    if (out.quadrature_error > kAbsTol) {
        throw DomainError("quadrature did not reach 1e-10 (error estimate " + std::to_string(out.quadrature_error) +
                          ")");
    }
    const double e1 = std::exp(-1.0);
    const double ein_a = ein(a);
    out.stated_lower_bound = e1 / a * ein_a;
    // int_0^a (1 - u/a) h(u) du = Ein(a) - 1 + (1 - e^{-a}) / a
    out.delta2_lower_bound = e1 / a * (ein_a - 1.0 + one_minus_exp_over(a));
    return out;
}

}  // namespace ppm
