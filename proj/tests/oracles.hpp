/*
 * Copyright 2026 The frechet-ann Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#pragma once

// Reference oracles used only by tests. They share no code with the library's
// distance kernels beyond the Curve container.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "frechet_ann/geometry.hpp"

namespace frechet_ann::testing {

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

inline std::vector<double> vertex_of(const Curve& c, std::size_t i) {
    auto v = c.vertex(i);
    return {v.begin(), v.end()};
}

inline std::vector<double> lerp(const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
}

/// Minimum over all monotone couplings (steps (1,0), (0,1), (1,1)) of the
/// maximal coupled vertex distance, by explicit path enumeration.
inline double enumerate_discrete_frechet(const Curve& p, const Curve& q) {
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j, double worst) {
        worst = std::max(worst, euclid(vertex_of(p, i), vertex_of(q, j)));
        if (worst >= best) return;
        if (i + 1 == p.size() && j + 1 == q.size()) {
            best = worst;
            return;
        }
        if (i + 1 < p.size()) walk(i + 1, j, worst);
        if (j + 1 < q.size()) walk(i, j + 1, worst);
        if (i + 1 < p.size() && j + 1 < q.size()) walk(i + 1, j + 1, worst);
    };
    walk(0, 0, 0.0);
    return best;
}

/// Curve resampled so that every edge is split into pieces of length <= h.
inline std::vector<std::vector<double>> resample(const Curve& c, double h) {
    std::vector<std::vector<double>> out{vertex_of(c, 0)};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const auto a = vertex_of(c, i), b = vertex_of(c, i + 1);
        const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(euclid(a, b) / h)));
        for (std::size_t s = 1; s <= pieces; ++s) out.push_back(lerp(a, b, static_cast<double>(s) / pieces));
    }
    return out;
}

/// Dense-grid monotone matching: the coupling distance of the curves
/// resampled at spacing h. Brackets the continuous distance:
/// d_F <= result <= d_F + h.
inline double dense_grid_frechet(const Curve& p, const Curve& q, double h) {
    const auto a = resample(p, h), b = resample(q, h);
    const std::size_t n = a.size(), m = b.size();
    std::vector<double> t(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double d = euclid(a[i], b[j]);
            double prev = 0.0;
            if (i > 0 && j > 0) prev = std::min({t[(i - 1) * m + j], t[i * m + j - 1], t[(i - 1) * m + j - 1]});
            else if (i > 0) prev = t[(i - 1) * m];
            else if (j > 0) prev = t[j - 1];
            t[i * m + j] = std::max(prev, d);
        }
    return t.back();
}

/// Parameter-grid minimization of the distance between two segments followed
/// by local refinement around the best grid cell.
inline double grid_segment_distance(const std::vector<double>& a0, const std::vector<double>& a1,
                                    const std::vector<double>& b0, const std::vector<double>& b1, int steps = 400) {
    double best = std::numeric_limits<double>::infinity();
    double bs = 0, bt = 0;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j) {
            const double s = double(i) / steps, t = double(j) / steps;
            const double d = euclid(lerp(a0, a1, s), lerp(b0, b1, t));
            if (d < best) best = d, bs = s, bt = t;
        }
    double w = 1.0 / steps;
    for (int round = 0; round < 30; ++round) {
        const double s0 = bs, t0 = bt;
        for (int i = -10; i <= 10; ++i)
            for (int j = -10; j <= 10; ++j) {
                const double s = std::clamp(s0 + i * w / 10, 0.0, 1.0), t = std::clamp(t0 + j * w / 10, 0.0, 1.0);
                const double d = euclid(lerp(a0, a1, s), lerp(b0, b1, t));
                if (d < best) best = d, bs = s, bt = t;
            }
        w /= 5;
    }
    return best;
}

/// Upper estimate of the arc length of c inside B_r(center): sums every
/// sub-piece (of length <= h) whose closest point lies within r.
inline double sampled_length_in_ball_upper(const Curve& c, const std::vector<double>& center, double r, double h) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const auto a = vertex_of(c, i), b = vertex_of(c, i + 1);
        const double len = euclid(a, b);
        if (len == 0.0) continue;
        const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / h)));
        for (std::size_t s = 0; s < pieces; ++s) {
            const auto x = lerp(a, b, double(s) / pieces), y = lerp(a, b, double(s + 1) / pieces);
            // closest point of the piece to the center
            double vv = 0, wv = 0;
            for (std::size_t k = 0; k < x.size(); ++k) {
                vv += (y[k] - x[k]) * (y[k] - x[k]);
                wv += (center[k] - x[k]) * (y[k] - x[k]);
            }
            const double t = vv > 0 ? std::clamp(wv / vv, 0.0, 1.0) : 0.0;
            if (euclid(lerp(x, y, t), center) <= r) total += len / pieces;
        }
    }
    return total;
}

/// Lower estimate: sums sub-pieces with both endpoints inside the ball.
inline double sampled_length_in_ball_lower(const Curve& c, const std::vector<double>& center, double r, double h) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const auto a = vertex_of(c, i), b = vertex_of(c, i + 1);
        const double len = euclid(a, b);
        if (len == 0.0) continue;
        const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / h)));
        for (std::size_t s = 0; s < pieces; ++s) {
            const auto x = lerp(a, b, double(s) / pieces), y = lerp(a, b, double(s + 1) / pieces);
            if (euclid(x, center) <= r && euclid(y, center) <= r) total += len / pieces;
        }
    }
    return total;
}

inline Curve random_curve(std::mt19937_64& rng, std::size_t dim, std::size_t k, double extent = 4.0) {
    std::uniform_real_distribution<double> u(-extent, extent);
    std::vector<double> flat(dim * k);
    for (auto& x : flat) x = u(rng);
    return Curve(dim, std::move(flat));
}

/// Copy of q with its first and last vertex replaced by those of p, so the
/// endpoint lower bound is zero and the distance comes from the interior.
inline Curve pin_endpoints(const Curve& q, const Curve& p) {
    auto flat = q.flat();
    const std::size_t d = q.dim();
    for (std::size_t j = 0; j < d; ++j) {
        flat[j] = p.front()[j];
        flat[flat.size() - d + j] = p.back()[j];
    }
    return Curve(d, std::move(flat));
}

} // namespace frechet_ann::testing
