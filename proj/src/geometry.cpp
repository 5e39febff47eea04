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
#include "ppmetrics/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "ppmetrics/error.hpp"

namespace ppm {

void GroundMetric::validate() const {
    if (!(cap > 0.0) || std::isnan(cap)) throw DomainError("ground metric cap must be positive");
}

double ground_distance(Coords x, Coords y, const GroundMetric& metric) {
    metric.validate();
    if (x.size() != y.size()) {
        throw DimensionError("points of dimension " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    if (x.empty()) throw DimensionError("points must have dimension at least 1");
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!std::isfinite(x[k]) || !std::isfinite(y[k])) throw DomainError("point coordinates must be finite");
    }
    return capped_distance(x, y, metric.cap);
}

namespace {

using Vec2 = std::array<double, 2>;

struct Disc {
    Vec2 c{0.0, 0.0};
    double r = 0.0;
};

double dist(const Vec2& a, const Vec2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

Disc disc_from(const Vec2& a, const Vec2& b) {
    return {{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])}, 0.5 * dist(a, b)};
}

Disc disc_from(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double bx = b[0] - a[0], by = b[1] - a[1];
    const double cx = c[0] - a[0], cy = c[1] - a[1];
    const double d = 2.0 * (bx * cy - by * cx);
    const double scale = std::max({std::abs(bx), std::abs(by), std::abs(cx), std::abs(cy), 1e-300});
    if (std::abs(d) <= 1e-14 * scale * scale) {
        // Collinear: the farthest pair spans the disc.
        Disc best = disc_from(a, b);
        for (const Disc& cand : {disc_from(a, c), disc_from(b, c)}) {
            if (cand.r > best.r) best = cand;
        }
        return best;
    }
    const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const double ux = (cy * b2 - by * c2) / d;
    const double uy = (bx * c2 - cx * b2) / d;
    Disc out{{a[0] + ux, a[1] + uy}, 0.0};
    out.r = std::max({dist(out.c, a), dist(out.c, b), dist(out.c, c)});
    return out;
}

bool outside(const Disc& d, const Vec2& p) { return dist(d.c, p) > d.r * (1.0 + 1e-12) + 1e-15; }

Disc welzl(std::vector<Vec2> pts) {
    std::mt19937 shuffle_rng(0x5eedu);
    std::shuffle(pts.begin(), pts.end(), shuffle_rng);
    Disc d{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!outside(d, pts[i])) continue;
        d = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (!outside(d, pts[j])) continue;
            d = disc_from(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (outside(d, pts[k])) d = disc_from(pts[i], pts[j], pts[k]);
            }
        }
    }
    return d;
}

std::vector<Vec2> planar(std::size_t n, auto&& coords_of) {
    if (n == 0) throw SizeError("enclosing ball of an empty point set");
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        Coords c = coords_of(i);
        if (c.size() != 2) {
            throw DimensionError("enclosing ball supports dimension 2 only, got " + std::to_string(c.size()));
        }
        if (!std::isfinite(c[0]) || !std::isfinite(c[1])) throw DomainError("point coordinates must be finite");
        pts[i] = {c[0], c[1]};
    }
    return pts;
}

Ball to_ball(const Disc& d) { return {Point{d.c[0], d.c[1]}, d.r}; }

}  // namespace

Ball min_enclosing_ball(std::span<const Point> points) {
    return to_ball(welzl(planar(points.size(), [&](std::size_t i) { return Coords(points[i].coords); })));
}

Ball min_enclosing_ball(const PointPattern& points) {
    return to_ball(welzl(planar(points.size(), [&](std::size_t i) { return points[i]; })));
}

double min_enclosing_radius(std::span<const Coords> points) {
    switch (points.size()) {
        case 1:
            return 0.0;
        case 2:
            return 0.5 * std::hypot(points[0][0] - points[1][0], points[0][1] - points[1][1]);
        default:
            return welzl(planar(points.size(), [&](std::size_t i) { return points[i]; })).r;
    }
}

std::vector<double> nn_distances(const PointPattern& pattern, const GroundMetric& metric) {
    metric.validate();
    const std::size_t n = pattern.size();
    if (n < 2) throw SizeError("nearest-neighbour distances need at least two points");
    std::vector<double> nn(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = capped_distance(pattern[i], pattern[j], metric.cap);
            nn[i] = std::min(nn[i], d);
            nn[j] = std::min(nn[j], d);
        }
    }
    return nn;
}

}  // namespace ppm
