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

// Dataset-level quantities: maximal edge length, minimal pairwise Fréchet
// distance, bundledness, spread of the vertex/edge set, and a lower-bound
// estimator for c-packedness.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "dedup.hpp"
#include "frechet.hpp"
#include "geometry.hpp"
#include "parallel.hpp"

namespace frechet_ann {

struct DatasetStats {
    double lambda_max = 0.0;   ///< longest edge over all curves
    double delta_min = 0.0;    ///< min pairwise d_F over distinct curves
    double bundledness = 0.0;  ///< delta_min / lambda_max; +inf when lambda_max == 0
    double spread = 1.0;       ///< max / min non-zero distance among vertices and edges
    std::size_t n = 0;         ///< distinct curves
    std::size_t k_max = 0;     ///< max vertex count
    bool delta_min_supplied = false;

    bool bundledness_defined() const { return lambda_max > 0.0; }

    /// (1 / bundledness) / spread; bounded by a constant on well-behaved inputs.
    double inverse_bundledness_over_spread() const {
        return bundledness_defined() ? (lambda_max / delta_min) / spread : 0.0;
    }
};

/// Min and max non-zero set distance over all vertices and edges of `curves`.
/// Distances at or below kGeomTolerance count as zero (shared points).
inline double vertex_edge_spread(const std::vector<Curve>& curves) {
    struct Object {
        Coords a, b;
        bool is_edge;
    };
    std::vector<Object> objects;
    for (const auto& c : curves) {
        for (std::size_t i = 0; i < c.size(); ++i) objects.push_back({c.vertex(i), c.vertex(i), false});
        for (std::size_t i = 0; i + 1 < c.size(); ++i) objects.push_back({c.vertex(i), c.vertex(i + 1), true});
    }
    auto dist = [](const Object& x, const Object& y) {
        if (!x.is_edge && !y.is_edge) return detail::distance(x.a, y.a);
        if (!x.is_edge) return detail::point_segment_distance(x.a, y.a, y.b);
        if (!y.is_edge) return detail::point_segment_distance(y.a, x.a, x.b);
        return detail::segment_segment_distance(x.a, x.b, y.a, y.b);
    };
    const std::size_t n = objects.size();
    std::vector<double> row_min(n, std::numeric_limits<double>::infinity()), row_max(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist(objects[i], objects[j]);
            if (d <= kGeomTolerance) continue;
            row_min[i] = std::min(row_min[i], d);
            row_max[i] = std::max(row_max[i], d);
        }
    });
    const double lo = n ? *std::min_element(row_min.begin(), row_min.end()) : 0.0;
    const double hi = n ? *std::max_element(row_max.begin(), row_max.end()) : 0.0;
    if (!std::isfinite(lo) || hi <= 0.0) return 1.0;
    return hi / lo;
}

/// Exact minimum over all pairs of frechet_distance. Requires >= 2 curves.
inline double min_pairwise_frechet(const std::vector<Curve>& curves, const FrechetConfig& cfg) {
    const std::size_t n = curves.size();
    if (n < 2) throw ConstraintViolation("min_pairwise_frechet: need at least two curves");
    std::vector<double> row_min(n, std::numeric_limits<double>::infinity());
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j)
            row_min[i] = std::min(row_min[i], frechet_distance(curves[i], curves[j], cfg));
    });
    return *std::min_element(row_min.begin(), row_min.end());
}

/// Computes DatasetStats over the distinct (canonicalized, deduplicated)
/// curves of `curves`. `delta_min_override` replaces the O(n^2) pairwise pass
/// with a caller-supplied value.
inline DatasetStats dataset_stats(const std::vector<Curve>& curves, const FrechetConfig& cfg = {},
                                  std::optional<double> delta_min_override = std::nullopt) {
    cfg.validate();
    for (const auto& c : curves) detail::require_same_dim(curves.front().dim(), c.dim());
    const auto distinct = dedup(curves).curves;
    if (distinct.size() < 2) throw ConstraintViolation("dataset_stats: fewer than 2 distinct curves");

    DatasetStats s;
    s.n = distinct.size();
    for (const auto& c : distinct) {
        s.lambda_max = std::max(s.lambda_max, c.max_edge_length());
        s.k_max = std::max(s.k_max, c.size());
    }
    if (delta_min_override) {
        if (!(*delta_min_override > 0.0)) throw ConstraintViolation("dataset_stats: delta_min override must be > 0");
        s.delta_min = *delta_min_override;
        s.delta_min_supplied = true;
    } else {
        s.delta_min = min_pairwise_frechet(distinct, cfg);
    }
    if (!(s.delta_min > 0.0)) throw ConstraintViolation("dataset_stats: distinct curves at Fréchet distance 0");
    s.bundledness = s.lambda_max > 0.0 ? s.delta_min / s.lambda_max : std::numeric_limits<double>::infinity();
    s.spread = vertex_edge_spread(distinct);
    return s;
}

/// Length of the part of segment a-b inside the closed ball B_r(c).
inline double clipped_length(Coords c, double r, Coords a, Coords b) {
    double A = 0.0, B = 0.0, D = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double v = b[i] - a[i];
        const double w = a[i] - c[i];
        A += v * v;
        B += w * v;
        D += w * w;
    }
    if (A <= 0.0) return 0.0;
    const double disc = B * B - A * (D - r * r);
    if (disc <= 0.0) return 0.0;
    const double root = std::sqrt(disc);
    const double lo = std::max(0.0, (-B - root) / A);
    const double hi = std::min(1.0, (-B + root) / A);
    return hi > lo ? (hi - lo) * std::sqrt(A) : 0.0;
}

/// Arc length of `p` inside B_r(center).
inline double length_in_ball(const Curve& p, const Point& center, double r) {
    detail::require_same_dim(p.dim(), center.dim());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) total += clipped_length(center.coords(), r, p.vertex(i), p.vertex(i + 1));
    return total;
}

/// max over (center, radius) of length(p ∩ B_r(center)) / r. Every tested
/// pair witnesses the ratio, so the result lower-bounds the packedness c.
inline double c_packedness_lower_bound(const Curve& p, const std::vector<Point>& centers,
                                       const std::vector<double>& radii) {
    if (centers.empty() || radii.empty()) throw ConstraintViolation("c_packedness_lower_bound: empty candidate set");
    for (double r : radii)
        if (!(r > 0.0)) throw ConstraintViolation("c_packedness_lower_bound: radii must be positive");
    double best = 0.0;
    for (const auto& c : centers)
        for (double r : radii) best = std::max(best, length_in_ball(p, c, r) / r);
    return best;
}

struct PackednessCandidates {
    std::vector<Point> centers;
    std::vector<double> radii;
};

/// Vertices as centers; distinct non-zero vertex-pair distances as radii.
inline PackednessCandidates default_packedness_candidates(const Curve& p) {
    PackednessCandidates out;
    out.centers = p.points();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const double d = detail::distance(p.vertex(i), p.vertex(j));
            if (d > kGeomTolerance) out.radii.push_back(d);
        }
    std::sort(out.radii.begin(), out.radii.end());
    out.radii.erase(std::unique(out.radii.begin(), out.radii.end()), out.radii.end());
    return out;
}

/// Lower bound over the default candidate family; 0 for curves without a
/// non-degenerate vertex pair.
inline double c_packedness_estimate(const Curve& p) {
    auto cand = default_packedness_candidates(p);
    if (cand.radii.empty()) return 0.0;
    return c_packedness_lower_bound(p, cand.centers, cand.radii);
}

} // namespace frechet_ann
