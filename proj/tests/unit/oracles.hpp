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

// Slow reference implementations. None of these share code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "ppmetrics/pattern.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline double euclid(ppm::Coords a, ppm::Coords b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

// Exhaustive minimum over all n! permutations.
inline double brute_assignment(const Matrix& c) {
    const std::size_t n = c.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += c[i][perm[i]];
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// dbar1^(p,c) straight from the definition: every injection of the smaller
// pattern into the larger one, unmatched points cost c^p each.
inline double brute_dbar1(const ppm::PointPattern& a, const ppm::PointPattern& b, double p = 1.0, double c = 1.0) {
    const ppm::PointPattern& s = a.size() <= b.size() ? a : b;
    const ppm::PointPattern& l = a.size() <= b.size() ? b : a;
    const std::size_t m = s.size(), n = l.size();
    if (n == 0) return 0.0;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    // Permutations of the larger pattern; the first m entries form the injection.
    do {
        double sum = double(n - m) * std::pow(c, p);
        for (std::size_t i = 0; i < m; ++i) sum += std::pow(std::min(c, euclid(s[i], l[idx[i]])), p);
        best = std::min(best, sum);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return std::pow(best, 1.0 / p) / double(n);
}

inline double brute_d1(const ppm::PointPattern& a, const ppm::PointPattern& b) {
    if (a.size() != b.size()) return 1.0;
    return brute_dbar1(a, b);
}

// Dense linear solve with partial pivoting on an over-determined but
// consistent system; returns false when the columns are dependent or the
// system is inconsistent.
inline bool solve_consistent(Matrix a, std::vector<double> rhs, std::vector<double>& x) {
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t best = r;
        for (std::size_t i = r; i < rows; ++i)
            if (std::abs(a[i][col]) > std::abs(a[best][col])) best = i;
        if (std::abs(a[best][col]) < 1e-12) return false;
        std::swap(a[best], a[r]);
        std::swap(rhs[best], rhs[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = a[i][col] / a[r][col];
            for (std::size_t k = col; k < cols; ++k) a[i][k] -= f * a[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (r < cols) return false;
    for (std::size_t i = r; i < rows; ++i)
        if (std::abs(rhs[i]) > 1e-9) return false;
    x.assign(cols, 0.0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / a[i][pivot_col[i]];
    return true;
}

// Optimal transport by enumerating every basic feasible solution: all sets
// of k + l - 1 cells whose marginal system has a unique nonnegative solution.
inline double vertex_transport(const std::vector<double>& src, const std::vector<double>& tgt, const Matrix& cost) {
    const std::size_t k = src.size(), l = tgt.size(), cells = k * l, basis = k + l - 1;
    std::vector<double> rhs(src);
    rhs.insert(rhs.end(), tgt.begin(), tgt.end());
    std::vector<bool> chosen(cells, false);
    std::fill(chosen.begin(), chosen.begin() + long(basis), true);
    double best = std::numeric_limits<double>::infinity();
    do {
        std::vector<std::size_t> picked;
        for (std::size_t c = 0; c < cells; ++c)
            if (chosen[c]) picked.push_back(c);
        Matrix a(k + l, std::vector<double>(basis, 0.0));
        for (std::size_t t = 0; t < basis; ++t) {
            a[picked[t] / l][t] = 1.0;
            a[k + picked[t] % l][t] = 1.0;
        }
        std::vector<double> x;
        if (!solve_consistent(a, rhs, x)) continue;
        if (*std::min_element(x.begin(), x.end()) < -1e-12) continue;
        double total = 0.0;
        for (std::size_t t = 0; t < basis; ++t) total += x[t] * cost[picked[t] / l][picked[t] % l];
        best = std::min(best, total);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return best;
}

inline double circumradius_center(const std::vector<ppm::Point>& s, double& cx, double& cy) {
    if (s.size() == 2) {
        cx = 0.5 * (s[0].coords[0] + s[1].coords[0]);
        cy = 0.5 * (s[0].coords[1] + s[1].coords[1]);
        return 0.5 * euclid(s[0], s[1]);
    }
    const double ax = s[0].coords[0], ay = s[0].coords[1];
    const double bx = s[1].coords[0] - ax, by = s[1].coords[1] - ay;
    const double qx = s[2].coords[0] - ax, qy = s[2].coords[1] - ay;
    const double d = 2.0 * (bx * qy - by * qx);
    if (std::abs(d) < 1e-14) return std::numeric_limits<double>::infinity();
    const double b2 = bx * bx + by * by, c2 = qx * qx + qy * qy;
    cx = ax + (qy * b2 - by * c2) / d;
    cy = ay + (bx * c2 - qx * b2) / d;
    return std::hypot(cx - ax, cy - ay);
}

// Smallest disc: try every disc through 2 or 3 of the points, keep the
// smallest one that covers everything.
inline double brute_enclosing_radius(const std::vector<ppm::Point>& pts) {
    const std::size_t n = pts.size();
    if (n == 1) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](const std::vector<ppm::Point>& support) {
        double cx = 0, cy = 0;
        const double r = circumradius_center(support, cx, cy);
        if (!std::isfinite(r) || r >= best) return;
        for (const auto& p : pts)
            if (std::hypot(p.coords[0] - cx, p.coords[1] - cy) > r + 1e-12) return;
        best = r;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            consider({pts[i], pts[j]});
            for (std::size_t k = j + 1; k < n; ++k) consider({pts[i], pts[j], pts[k]});
        }
    return best;
}

inline ppm::PointPattern random_pattern(std::mt19937_64& gen, std::size_t size, std::size_t dim = 2) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ppm::PointPattern p(dim);
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < size; ++i) {
        for (auto& v : x) v = u(gen);
        p.push_back(x);
    }
    return p;
}

inline std::size_t random_size(std::mt19937_64& gen, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

}  // namespace oracle
