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
#include <initializer_list>
#include <span>
#include <vector>

namespace ppm {

using Coords = std::span<const double>;

// A single location in R^D.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    explicit Point(Coords c) : coords(c.begin(), c.end()) {}

    std::size_t dim() const { return coords.size(); }
    operator Coords() const { return coords; }
    bool operator==(const Point&) const = default;
};

// Finite counting measure on R^D: an unordered list of points where
// multiplicities matter. Stored flat, one point after the other.
class PointPattern {
 public:
    explicit PointPattern(std::size_t dim = 2);
    PointPattern(std::size_t dim, std::vector<double> flat_coords);
    PointPattern(std::initializer_list<Point> points);
    static PointPattern from_points(std::span<const Point> points, std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return coords_.size() / dim_; }
    bool empty() const { return coords_.empty(); }

    Coords operator[](std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    std::span<const double> flat() const { return coords_; }

    void push_back(Coords p);
    void append(const PointPattern& other);
    void reserve(std::size_t n) { coords_.reserve(n * dim_); }

    // Multiset equality (order-insensitive, exact coordinates).
    friend bool same_multiset(const PointPattern& a, const PointPattern& b);

 private:
    std::size_t dim_;
    std::vector<double> coords_;
};

// Equally weighted list of patterns, the empirical law (1/N) sum delta_{xi_i}.
using PatternCollection = std::vector<PointPattern>;

// Throws DimensionError unless every pattern has dimension `dim`.
void require_dimension(const PatternCollection& patterns, std::size_t dim);

}  // namespace ppm
