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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppmetrics/assignment.hpp"
#include "ppmetrics/count_distribution.hpp"
#include "ppmetrics/geometry.hpp"
#include "ppmetrics/pattern.hpp"

namespace ppm {

// Order p >= 1 and cut-off c > 0 of the generalized pattern distance.
struct MetricParams {
    double order = 1.0;
    double cutoff = 1.0;

    void validate() const;
};

// Non-empty when the parameters leave the regime where the distance is
// bounded by one (c > 1). Not an error.
std::optional<std::string> theory_warning(const MetricParams& params);

// d1: mean optimal matching distance for equal cardinalities, 1 otherwise.
double d1(const PointPattern& xi, const PointPattern& eta, const GroundMetric& ground = {});

// dbar1: the smaller pattern is padded with phantom points at distance 1 and
// the mean optimal matching distance of the padded pair is returned.
double dbar1(const PointPattern& xi, const PointPattern& eta, const GroundMetric& ground = {});

// (1/n) * (min over injections of sum min(c, d0)^p + c^p (n - m))^(1/p), with
// the 1/n factor outside the root.
double dbar1_pc(const PointPattern& xi, const PointPattern& eta, const MetricParams& params,
                const GroundMetric& ground = {});

// d1 analogue of dbar1_pc: same formula when cardinalities agree, c otherwise.
double d1_pc(const PointPattern& xi, const PointPattern& eta, const MetricParams& params,
             const GroundMetric& ground = {});

enum class PatternDistance { d1, dbar1 };

// A fully specified distance between point patterns.
struct PatternMetric {
    PatternDistance kind = PatternDistance::dbar1;
    MetricParams params;
    GroundMetric ground;

    void validate() const;
    double operator()(const PointPattern& xi, const PointPattern& eta) const;
};

// Value together with an optimal pairing. Points left without partner (the
// surplus of the larger pattern, or every point under d1 with unequal
// cardinalities) have std::nullopt.
struct PatternMatching {
    double value = 0.0;
    std::vector<std::optional<std::size_t>> partner_of_xi;
    std::vector<std::optional<std::size_t>> partner_of_eta;
};

PatternMatching match_patterns(const PointPattern& xi, const PointPattern& eta, const PatternMetric& metric);

// Relative difference |m - n| / max(m, n); dR(0, 0) = 0.
double dR(std::int64_t m, std::int64_t n);

struct CountCoupling {
    double value = 0.0;
    TransportPlan coupling;  // rows: atoms of mu, columns: atoms of nu
};

// Wasserstein distance between count laws with ground cost dR, and an
// optimal coupling attaining it.
CountCoupling dRW(const CountDistribution& mu, const CountDistribution& nu);

// N x M matrix of pattern distances, evaluated in parallel.
CostMatrix pairwise_distances(const PatternCollection& P, const PatternCollection& Q, const PatternMetric& metric);

// Wasserstein distance between two uniform empirical laws of equal size N:
// (1/N) * optimal assignment of the N x N pattern distance matrix.
double dbar2_empirical(const PatternCollection& P, const PatternCollection& Q, const PatternMetric& metric);

inline constexpr std::size_t kMaxTransportCells = 250'000;

// Same quantity for collections of unequal size, solved as a transportation
// problem with uniform weights (N * M <= 250 000 and each side <= 500).
double dbar2_transport(const PatternCollection& P, const PatternCollection& Q, const PatternMetric& metric);

// Empirical Wasserstein distance between two equally sized point samples.
double dW_empirical(const PointPattern& xs, const PointPattern& ys, const GroundMetric& ground = {});

}  // namespace ppm
