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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ppmetrics/pattern.hpp"

namespace ppm {

// Euclidean distance truncated at `cap`: d0(x, y) = min(|x - y|, cap).
// With theory_mode set, d1 and dbar1 insist on cap <= 1 so that both stay
// bounded by one.
struct GroundMetric {
    double cap = 1.0;
    bool theory_mode = true;

    void validate() const;
};

// Unchecked hot-loop version of ground_distance.
inline double capped_distance(Coords x, Coords y, double cap) {
    if (x.size() == 2) {
        const double dx = x[0] - y[0], dy = x[1] - y[1];
        return std::min(std::sqrt(dx * dx + dy * dy), cap);
    }
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - y[k];
        s += d * d;
    }
    return std::min(std::sqrt(s), cap);
}

double ground_distance(Coords x, Coords y, const GroundMetric& metric = {});

struct Ball {
    Point center;
    double radius = 0.0;
};

// Smallest enclosing disc of planar points (randomized incremental / Welzl,
// fixed internal seed). Only D = 2 is supported.
Ball min_enclosing_ball(std::span<const Point> points);
Ball min_enclosing_ball(const PointPattern& points);

// Radius of the smallest disc around the given planar points; the hot path
// used by the bounding-ball kernel.
double min_enclosing_radius(std::span<const Coords> points);

// i-th entry: min over j != i of d0(x_i, x_j). Needs at least two points.
std::vector<double> nn_distances(const PointPattern& pattern, const GroundMetric& metric = {});

}  // namespace ppm
