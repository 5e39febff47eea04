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
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ppmetrics/error.hpp"
#include "ppmetrics/geometry.hpp"

using namespace ppm;

TEST_CASE("ground distance") {
    CHECK(ground_distance(Point{0.2, 0.3}, Point{0.2, 0.3}) == 0.0);
    CHECK(ground_distance(Point{0, 0}, Point{3, 4}) == 1.0);
    CHECK(ground_distance(Point{0, 0}, Point{0.3, 0.4}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ground_distance(Point{0, 0}, Point{3, 4}, {10.0}) == doctest::Approx(5.0));
    CHECK(ground_distance(Point{0.0}, Point{0.25}) == 0.25);
    CHECK_THROWS_AS(ground_distance(Point{0, 0}, Point{0.0}), DimensionError);
    CHECK_THROWS_AS(ground_distance(Point{0, NAN}, Point{0, 0}), DomainError);
    CHECK_THROWS_AS(ground_distance(Point{0, 0}, Point{0, 0}, {0.0}), DomainError);
}

TEST_CASE("ground distance is a metric on random triples") {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    for (int t = 0; t < 100000; ++t) {
        const Point x{u(gen), u(gen)}, y{u(gen), u(gen)}, z{u(gen), u(gen)};
        const double xy = ground_distance(x, y), yz = ground_distance(y, z), xz = ground_distance(x, z);
        REQUIRE(xz <= xy + yz + 1e-12);
        REQUIRE(xy == ground_distance(y, x));
        REQUIRE(xy <= 1.0);
    }
}

TEST_CASE("min enclosing ball simple cases") {
    auto b = min_enclosing_ball(std::vector<Point>{{0.3, 0.7}});
    CHECK(b.radius == 0.0);
    CHECK(b.center == Point{0.3, 0.7});
    b = min_enclosing_ball(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(b.center.coords[0] == doctest::Approx(0.5));
    CHECK(b.center.coords[1] == doctest::Approx(0.5));
    CHECK(b.radius == doctest::Approx(std::sqrt(2.0) / 2));
    b = min_enclosing_ball(std::vector<Point>{{0, 0}, {0.5, 0}, {1, 0}, {0.5, 0}});
    CHECK(b.radius == doctest::Approx(0.5));
    CHECK_THROWS_AS(min_enclosing_ball(std::vector<Point>{}), SizeError);
    CHECK_THROWS_AS(min_enclosing_ball(std::vector<Point>{{0.0, 0.0, 0.0}}), DimensionError);
}

TEST_CASE("min enclosing ball matches the support-set oracle") {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = oracle::random_size(gen, 1, 12);
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back({u(gen), u(gen)});
        const Ball b = min_enclosing_ball(pts);
        CHECK(std::abs(b.radius - oracle::brute_enclosing_radius(pts)) < 1e-9);
        for (const auto& p : pts) CHECK(oracle::euclid(p, b.center) <= b.radius + 1e-9);
        std::vector<Coords> view(pts.begin(), pts.end());
        CHECK(std::abs(min_enclosing_radius(view) - b.radius) < 1e-12);
    }
}

TEST_CASE("min enclosing ball invariant under permutation and translation") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = oracle::random_size(gen, 1, 20);
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back({u(gen), u(gen)});
        const Ball b = min_enclosing_ball(pts);
        auto shuffled = pts;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        CHECK(std::abs(min_enclosing_ball(shuffled).radius - b.radius) < 1e-9);
        const double tx = u(gen) * 5 - 2, ty = u(gen) * 5 - 2;
        auto moved = pts;
        for (auto& p : moved) {
            p.coords[0] += tx;
            p.coords[1] += ty;
        }
        const Ball bm = min_enclosing_ball(moved);
        CHECK(std::abs(bm.radius - b.radius) < 1e-9);
        CHECK(std::abs(bm.center.coords[0] - b.center.coords[0] - tx) < 1e-9);
        CHECK(std::abs(bm.center.coords[1] - b.center.coords[1] - ty) < 1e-9);
    }
}

TEST_CASE("nearest neighbour distances") {
    PointPattern dup{{0.4, 0.4}, {0.4, 0.4}};
    CHECK(nn_distances(dup) == std::vector<double>{0.0, 0.0});
    PointPattern line{{0.0}, {0.3}, {1.0}};
    const auto d = nn_distances(line);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == doctest::Approx(0.3));
    CHECK(d[1] == doctest::Approx(0.3));
    CHECK(d[2] == doctest::Approx(0.7));
    CHECK_THROWS_AS(nn_distances(PointPattern{{0.1, 0.1}}), SizeError);

    std::mt19937_64 gen(4);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = oracle::random_size(gen, 2, 15);
        auto p = oracle::random_pattern(gen, n);
        const auto nn = nn_distances(p, {0.2});
        double s = 0.0;
        for (double x : nn) {
            CHECK(x <= 0.2);
            s += x;
        }
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.emplace_back(p[i]);
        std::shuffle(pts.begin(), pts.end(), gen);
        const auto nn2 = nn_distances(PointPattern::from_points(pts, 2), {0.2});
        double s2 = 0.0;
        for (double x : nn2) s2 += x;
        CHECK(std::abs(s - s2) < 1e-12);
    }
}
