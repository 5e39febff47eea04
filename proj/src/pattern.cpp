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
#include "ppmetrics/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppmetrics/error.hpp"

namespace ppm {

namespace {

void check_finite(Coords p) {
    for (double c : p) {
        if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");
    }
}

}  // namespace

PointPattern::PointPattern(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DimensionError("point dimension must be at least 1");
}

PointPattern::PointPattern(std::size_t dim, std::vector<double> flat_coords)
    : dim_(dim), coords_(std::move(flat_coords)) {
    if (dim == 0) throw DimensionError("point dimension must be at least 1");
    if (coords_.size() % dim != 0) throw DimensionError("flat coordinate count is not a multiple of the dimension");
    check_finite(coords_);
}

PointPattern::PointPattern(std::initializer_list<Point> points)
    : PointPattern(from_points({points.begin(), points.size()}, points.size() ? points.begin()->dim() : 2)) {}

PointPattern PointPattern::from_points(std::span<const Point> points, std::size_t dim) {
    PointPattern out(dim);
    out.reserve(points.size());
    for (const Point& p : points) out.push_back(p);
    return out;
}

void PointPattern::push_back(Coords p) {
    if (p.size() != dim_) {
        throw DimensionError("point of dimension " + std::to_string(p.size()) + " added to pattern of dimension " +
                             std::to_string(dim_));
    }
    check_finite(p);
    coords_.insert(coords_.end(), p.begin(), p.end());
}

void PointPattern::append(const PointPattern& other) {
    if (other.dim_ != dim_) throw DimensionError("cannot append patterns of different dimensions");
    coords_.insert(coords_.end(), other.coords_.begin(), other.coords_.end());
}

bool same_multiset(const PointPattern& a, const PointPattern& b) {
    if (a.dim_ != b.dim_ || a.size() != b.size()) return false;
    auto sorted = [](const PointPattern& p) {
        std::vector<std::vector<double>> pts;
        for (std::size_t i = 0; i < p.size(); ++i) pts.emplace_back(p[i].begin(), p[i].end());
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    return sorted(a) == sorted(b);
}

void require_dimension(const PatternCollection& patterns, std::size_t dim) {
    for (const PointPattern& p : patterns) {
        if (p.dim() != dim) {
            throw DimensionError("pattern of dimension " + std::to_string(p.dim()) + " in a collection of dimension " +
                                 std::to_string(dim));
        }
    }
}

}  // namespace ppm
