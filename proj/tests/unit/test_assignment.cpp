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
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ppmetrics/assignment.hpp"
#include "ppmetrics/error.hpp"

using namespace ppm;

namespace {

CostMatrix to_cost(const oracle::Matrix& m) {
    CostMatrix c(m.size(), m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) c(i, j) = m[i][j];
    return c;
}

oracle::Matrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c, bool ties = false) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> small(0, 3);
    oracle::Matrix m(r, std::vector<double>(c));
    for (auto& row : m)
        for (auto& v : row) v = ties ? small(gen) * 0.25 : u(gen);
    return m;
}

bool is_bijection(const std::vector<std::size_t>& p) {
    std::vector<char> seen(p.size(), 0);
    for (auto j : p) {
        if (j >= p.size() || seen[j]) return false;
        seen[j] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("assignment trivial cases") {
    auto r = solve_assignment(to_cost({{0, 1}, {1, 0}}));
    CHECK(r.permutation == std::vector<std::size_t>{0, 1});
    CHECK(r.total_cost == 0.0);
    r = solve_assignment(to_cost({{1}}));
    CHECK(r.permutation == std::vector<std::size_t>{0});
    CHECK(r.total_cost == 1.0);
}

TEST_CASE("assignment matches exhaustive search on 6x6") {
    std::mt19937_64 gen(11);
    for (int t = 0; t < 50; ++t) {
        const auto m = random_matrix(gen, 6, 6);
        const auto r = solve_assignment(to_cost(m));
        CHECK(std::abs(r.total_cost - oracle::brute_assignment(m)) < 1e-12);
    }
}

TEST_CASE("assignment: 1000 random matrices n in 1..7, with and without ties") {
    std::mt19937_64 gen(12);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = oracle::random_size(gen, 1, 7);
        const auto m = random_matrix(gen, n, n, t % 2 == 1);
        const auto r = solve_assignment(to_cost(m));
        REQUIRE(is_bijection(r.permutation));
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += m[i][r.permutation[i]];
        CHECK(std::abs(s - r.total_cost) < 1e-12);
        CHECK(std::abs(r.total_cost - oracle::brute_assignment(m)) < 1e-12);
    }
}

TEST_CASE("assignment: row permutation and constant shift") {
    std::mt19937_64 gen(13);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = oracle::random_size(gen, 1, 12);
        const auto m = random_matrix(gen, n, n);
        const auto base = solve_assignment(to_cost(m));

        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), gen);
        oracle::Matrix permuted(n);
        for (std::size_t i = 0; i < n; ++i) permuted[i] = m[order[i]];
        const auto r = solve_assignment(to_cost(permuted));
        CHECK(std::abs(r.total_cost - base.total_cost) < 1e-12);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += m[order[i]][r.permutation[i]];
        CHECK(std::abs(s - base.total_cost) < 1e-12);

        auto shifted = m;
        for (auto& row : shifted)
            for (auto& v : row) v += 0.375;
        const auto rs = solve_assignment(to_cost(shifted));
        CHECK(std::abs(rs.total_cost - (base.total_cost + 0.375 * double(n))) < 1e-12);
    }
}

TEST_CASE("assignment solver reuse across sizes") {
    std::mt19937_64 gen(14);
    AssignmentSolver solver;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = oracle::random_size(gen, 1, 7);
        const auto m = random_matrix(gen, n, n, true);
        CHECK(std::abs(solver.solve(to_cost(m)) - oracle::brute_assignment(m)) < 1e-12);
    }
}

TEST_CASE("assignment input validation") {
    CHECK_THROWS_AS(solve_assignment(CostMatrix(2, 3, 0.0)), DimensionError);
    CHECK_THROWS_AS(solve_assignment(CostMatrix(0, 0, 0.0)), DimensionError);
    CHECK_THROWS_AS(solve_assignment(to_cost({{0, std::nan("")}, {1, 1}})), DomainError);
    CHECK_THROWS_AS(solve_assignment(to_cost({{0, -1}, {1, 1}})), DomainError);
    CHECK_THROWS_AS(solve_assignment(to_cost({{0, INFINITY}, {1, 1}})), DomainError);
}

TEST_CASE("transportation trivial cases") {
    const std::vector<double> one{1.0}, half{0.5, 0.5};
    auto tp = solve_transportation(one, one, to_cost({{0}}));
    CHECK(tp.plan(0, 0) == doctest::Approx(1.0));
    CHECK(tp.total_cost == doctest::Approx(0.0));
    tp = solve_transportation(one, half, to_cost({{0, 1}}));
    CHECK(tp.plan(0, 0) == doctest::Approx(0.5));
    CHECK(tp.plan(0, 1) == doctest::Approx(0.5));
    CHECK(tp.total_cost == doctest::Approx(0.5));
}

namespace {

std::vector<double> random_weights(std::mt19937_64& gen, std::size_t k, bool sparse = false) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(k);
    for (auto& x : w) x = (sparse && u(gen) < 0.3) ? 0.0 : u(gen);
    if (std::accumulate(w.begin(), w.end(), 0.0) == 0.0) w[0] = 1.0;
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= s;
    return w;
}

void check_marginals(const TransportPlan& tp, const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            CHECK(tp.plan(i, j) >= 0.0);
            s += tp.plan(i, j);
        }
        CHECK(std::abs(s - a[i]) < 1e-10);
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += tp.plan(i, j);
        CHECK(std::abs(s - b[j]) < 1e-10);
    }
}

}  // namespace

TEST_CASE("transportation matches vertex enumeration on 4x5") {
    std::mt19937_64 gen(21);
    for (int t = 0; t < 40; ++t) {
        const auto a = random_weights(gen, 4, t % 3 == 0);
        const auto b = random_weights(gen, 5, t % 4 == 0);
        const auto m = random_matrix(gen, 4, 5, t % 2 == 1);
        const auto tp = solve_transportation(a, b, to_cost(m));
        check_marginals(tp, a, b);
        double s = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) s += tp.plan(i, j) * m[i][j];
        CHECK(std::abs(s - tp.total_cost) < 1e-10);
        CHECK(std::abs(tp.total_cost - oracle::vertex_transport(a, b, m)) < 1e-9);
    }
}

TEST_CASE("transportation with uniform weights equals assignment / n") {
    std::mt19937_64 gen(22);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = oracle::random_size(gen, 1, 15);
        const auto m = random_matrix(gen, n, n, t % 2 == 1);
        const std::vector<double> w(n, 1.0 / double(n));
        const auto tp = solve_transportation(w, w, to_cost(m));
        check_marginals(tp, w, w);
        CHECK(std::abs(tp.total_cost - solve_assignment(to_cost(m)).total_cost / double(n)) < 1e-10);
    }
}

TEST_CASE("transportation on larger degenerate instances stays feasible") {
    std::mt19937_64 gen(23);
    const std::size_t k = 60, l = 45;
    const auto a = random_weights(gen, k, true);
    const auto b = random_weights(gen, l, true);
    const auto m = random_matrix(gen, k, l, true);
    const auto tp = solve_transportation(a, b, to_cost(m));
    check_marginals(tp, a, b);
}

TEST_CASE("transportation input validation") {
    const std::vector<double> ok{0.5, 0.5}, bad_sum{0.5, 0.6}, negative{1.5, -0.5};
    const CostMatrix c(2, 2, 1.0);
    CHECK_THROWS_AS(solve_transportation(bad_sum, ok, c), DomainError);
    CHECK_THROWS_AS(solve_transportation(negative, ok, c), DomainError);
    CHECK_THROWS_AS(solve_transportation(ok, std::vector<double>{1.0}, c), DimensionError);
    const std::vector<double> big(kMaxTransportSide + 1, 1.0 / double(kMaxTransportSide + 1));
    CHECK_THROWS_AS(solve_transportation(big, ok, CostMatrix(big.size(), 2, 1.0)), SizeError);
}
