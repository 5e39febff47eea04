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
#include <optional>

#include "ppmetrics/count_distribution.hpp"
#include "ppmetrics/metrics.hpp"

namespace ppm {

// Pattern size for the Stein factors; std::nullopt stands for an unbounded
// size, in which case n ^ lambda = lambda.
using PatternSize = std::optional<std::size_t>;

// Bound on the first difference of the Stein solution for dbar1-Lipschitz
// test functions:
//   min{1, (0.95 + ln+ lambda) / lambda, (1 - e^{-(n ^ lambda)}) / (n ^ lambda)}
// with (1 - e^0) / 0 := 1.
double stein_factor_delta1(PatternSize n, double lambda);

// Bound on the second difference:
//   min{0.75, 1 / (n ^ lambda), 1.09 / (n + 1) + 1 / lambda,
//       2 ln(lambda) / lambda if lambda >= 1.76 else 0.75}
// The 1 / (n ^ lambda) term is dropped when n ^ lambda = 0.
double stein_factor_delta2(PatternSize n, double lambda);

// Bernoulli process vs binomial process: (1/(2n) + p/2) ^ 1/sqrt(3np).
double bernoulli_binomial_bound(std::size_t n, double p);

// Binomial process vs Poisson process:
//   (0.95 + ln+(np)) p / max(1/2, sqrt((n-1) p (1-p))).
double binomial_poisson_bound(std::size_t n, double p);

// Sum of the two, bounding dbar2(Bernoulli process, Poisson(np Leb)).
double bernoulli_poisson_bound(std::size_t n, double p);

struct IidBoundsResult {
    double lower = 0.0;
    double upper = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double dRW_value = 0.0;
    TransportPlan coupling;  // the dRW coupling c2 was computed from
};

// Sandwich for dbar2 between processes of i.i.d. points with count laws mu,
// nu and location distance dW:
//   max(dRW, c1 dW) <= dbar2 <= dRW + c2 dW.
// c2 is evaluated on the optimal coupling returned by the transport solver;
// when several couplings are optimal this is one valid choice among them.
IidBoundsResult iid_bounds(const CountDistribution& mu, const CountDistribution& nu, double dW_locations,
                           double cap = 1.0);

// dbar2(Po(mu), Po(nu)) <= |mu - nu| / (mu v nu) + (1 - e^{-(mu ^ nu)}) dW.
double poisson_poisson_bound(double mu_total, double nu_total, double dW_normalized);

// dRW between two Poisson count laws, each truncated at its 1 - 1e-9 quantile.
double dRW_poisson(double mu_total, double nu_total);

// Ein(x) = int_0^x (1 - e^{-u}) / u du.
double ein(double x);

struct CounterexampleIntegrals {
    double delta1_value = 0.0;        // int_0^1 h((lambda-1)s) e^{-s} ds
    double delta2_value = 0.0;        // int_0^1 (1-s) h((lambda-1)s) e^{-s} ds
    double stated_lower_bound = 0.0;  // e^{-1} / (lambda-1) * Ein(lambda-1)
    double delta2_lower_bound = 0.0;  // e^{-1} / (lambda-1) * int_0^{lambda-1} (1 - u/(lambda-1)) h(u) du
    double quadrature_error = 0.0;    // largest error estimate of the two quadratures
};

// The two integrals showing the ln(lambda)/lambda rate of the Stein factors
// cannot be improved (two-point space, h(x) = (1 - e^{-x}) / x).
// Adaptive Gauss-Kronrod, absolute tolerance 1e-10.
CounterexampleIntegrals counterexample_integrals(double lambda);

}  // namespace ppm
