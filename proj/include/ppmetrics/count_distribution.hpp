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
#include <vector>

namespace ppm {

// Finitely supported law on the nonnegative integers.
class CountDistribution {
 public:
    // Support is sorted on construction; atoms must be distinct and the
    // probabilities nonnegative with sum 1 (within 1e-10).
    CountDistribution(std::vector<std::size_t> support, std::vector<double> probs);

    // pmf[k] = P[count = k] for k = 0..pmf.size()-1.
    static CountDistribution from_pmf(std::vector<double> pmf);
    static CountDistribution dirac(std::size_t k);
    static CountDistribution binomial(std::size_t n, double p);
    // Poisson(mean) truncated at the (1 - tail) quantile; the cut tail mass
    // is moved onto the last atom so the pmf sums to one.
    static CountDistribution poisson(double mean, double tail = 1e-9);

    const std::vector<std::size_t>& support() const { return support_; }
    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return support_.size(); }

    double prob_positive() const;
    double mean() const;

 private:
    std::vector<std::size_t> support_;
    std::vector<double> probs_;
};

}  // namespace ppm
