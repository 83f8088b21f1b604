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

// Discrete Fréchet distance, the free-space decision procedure for the
// continuous Fréchet distance, its value by bisection, and the Δ-stabber test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"

namespace frechet_ann {

/// Numeric controls shared by every continuous Fréchet evaluation.
struct FrechetConfig {
    double tol_abs = 1e-7; ///< width of the final bisection bracket
    int max_iter = 200;

    void validate() const {
        if (!(tol_abs > 0.0) || !std::isfinite(tol_abs)) throw ConstraintViolation("tol_abs must be positive");
        if (max_iter < 1) throw ConstraintViolation("max_iter must be >= 1");
    }
};

/// The bisection could not shrink its bracket to tol_abs within max_iter steps.
class ToleranceUnreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr double kParamTolerance = 1e-9;

struct Interval {
    double lo = 1.0;
    double hi = 0.0;
    bool empty() const { return lo > hi; }
};

inline constexpr Interval kEmpty{};

// Parameters t in [0,1] with |a + t(b-a) - c| <= delta.
inline Interval free_interval(Coords c, Coords a, Coords b, double delta) {
    double A = 0.0, B = 0.0, D = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double v = b[i] - a[i];
        const double w = a[i] - c[i];
        A += v * v;
        B += w * v;
        D += w * w;
    }
    if (A <= 1e-300) {
        return std::sqrt(D) <= delta + kGeomTolerance ? Interval{0.0, 1.0} : kEmpty;
    }
    const double t_star = std::clamp(-B / A, 0.0, 1.0);
    if (point_segment_distance(c, a, b) > delta + kGeomTolerance) return kEmpty;
    const double disc = B * B - A * (D - delta * delta);
    if (disc <= 0.0) return {t_star, t_star};
    const double r = std::sqrt(disc);
    Interval out{std::max(0.0, (-B - r) / A), std::min(1.0, (-B + r) / A)};
    if (out.empty()) return {t_star, t_star};
    return out;
}

// Part of `free_space` reachable from a monotone entry at parameter >= from.
inline Interval clip_from(Interval free_space, double from) {
    if (free_space.empty()) return kEmpty;
    const double lo = std::max(free_space.lo, from);
    if (lo > free_space.hi + kParamTolerance) return kEmpty;
    return {std::min(lo, free_space.hi), free_space.hi};
}

inline bool reaches_end(Interval i) { return !i.empty() && i.hi >= 1.0 - kParamTolerance; }

// d_F between a single point and a curve is the farthest vertex.
inline double point_curve_frechet(Coords p, const Curve& c) {
    double m = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) m = std::max(m, distance(p, c.vertex(i)));
    return m;
}

inline double endpoint_lower_bound(const Curve& p, const Curve& q) {
    return std::max(distance(p.front(), q.front()), distance(p.back(), q.back()));
}

} // namespace detail

/// Exact discrete Fréchet distance by the O(nm) coupling dynamic program.
inline double discrete_frechet(const Curve& p, const Curve& q) {
    detail::require_same_dim(p.dim(), q.dim());
    const std::size_t n = p.size(), m = q.size();
    std::vector<double> prev(m), cur(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double d = detail::distance(p.vertex(i), q.vertex(j));
            double reach;
            if (i == 0 && j == 0) reach = d;
            else if (i == 0) reach = cur[j - 1];
            else if (j == 0) reach = prev[0];
            else reach = std::min({prev[j], prev[j - 1], cur[j - 1]});
            cur[j] = std::max(reach, d);
        }
        std::swap(prev, cur);
    }
    return prev[m - 1];
}

/// Decides d_F(p, q) <= delta by monotone reachability in the free-space
/// diagram (Alt-Godau). Cell-boundary intervals are widened by kGeomTolerance,
/// so the answer is exact up to that slack. Zero-length edges are legal.
inline bool frechet_decide(const Curve& p, const Curve& q, double delta) {
    detail::require_same_dim(p.dim(), q.dim());
    if (!(delta >= 0.0)) throw ConstraintViolation("frechet_decide: delta must be >= 0");
    using detail::Interval;
    const double slack = delta + kGeomTolerance;
    if (p.size() == 1) return detail::point_curve_frechet(p.front(), q) <= slack;
    if (q.size() == 1) return detail::point_curve_frechet(q.front(), p) <= slack;
    if (detail::distance(p.front(), q.front()) > slack || detail::distance(p.back(), q.back()) > slack)
        return false;

    const std::size_t n = p.size() - 1; // segments of p, index i
    const std::size_t m = q.size() - 1; // segments of q, index j

    // Reachable part of q-segment j while p sits at its current vertex.
    std::vector<Interval> column(m);
    column[0] = detail::free_interval(p.vertex(0), q.vertex(0), q.vertex(1), delta);
    for (std::size_t j = 1; j < m; ++j) {
        column[j] = detail::reaches_end(column[j - 1])
                        ? detail::free_interval(p.vertex(0), q.vertex(j), q.vertex(j + 1), delta)
                        : detail::kEmpty;
    }

    Interval bottom_row = detail::free_interval(q.vertex(0), p.vertex(0), p.vertex(1), delta);
    Interval top{};
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            bottom_row = detail::reaches_end(bottom_row)
                             ? detail::free_interval(q.vertex(0), p.vertex(i), p.vertex(i + 1), delta)
                             : detail::kEmpty;
        }
        Interval bottom = bottom_row;
        for (std::size_t j = 0; j < m; ++j) {
            const Interval left = column[j];
            const Interval free_top = detail::free_interval(q.vertex(j + 1), p.vertex(i), p.vertex(i + 1), delta);
            const Interval free_right = detail::free_interval(p.vertex(i + 1), q.vertex(j), q.vertex(j + 1), delta);
            if (!left.empty()) top = free_top;
            else if (!bottom.empty()) top = detail::clip_from(free_top, bottom.lo);
            else top = detail::kEmpty;

            Interval right;
            if (!bottom.empty()) right = free_right;
            else if (!left.empty()) right = detail::clip_from(free_right, left.lo);
            else right = detail::kEmpty;

            column[j] = right;
            bottom = top;
        }
    }
    return detail::reaches_end(top) || detail::reaches_end(column[m - 1]);
}

/// Continuous Fréchet distance by bisection on frechet_decide between the
/// endpoint lower bound and the discrete Fréchet upper bound. The result v
/// satisfies d_F <= v <= d_F + cfg.tol_abs (up to kGeomTolerance).
inline double frechet_distance(const Curve& p, const Curve& q, const FrechetConfig& cfg = {}) {
    detail::require_same_dim(p.dim(), q.dim());
    cfg.validate();
    if (p.size() == 1) return detail::point_curve_frechet(p.front(), q);
    if (q.size() == 1) return detail::point_curve_frechet(q.front(), p);

    double lo = detail::endpoint_lower_bound(p, q);
    double hi = discrete_frechet(p, q);
    if (frechet_decide(p, q, lo)) return lo;
    int iter = 0;
    while (hi - lo > cfg.tol_abs) {
        const double mid = lo + 0.5 * (hi - lo);
        if (++iter > cfg.max_iter || mid <= lo || mid >= hi)
            throw ToleranceUnreachable("frechet_distance: bracket cannot reach tol_abs");
        if (frechet_decide(p, q, mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

/// True iff the segment a->b admits monotone parameters 0 <= t_1 <= ... <= t_n <= 1
/// with |l(t_i) - pts[i]| <= delta. Greedy: take the earliest feasible t_i.
inline bool is_delta_stabber(const Point& a, const Point& b, const std::vector<Point>& pts, double delta) {
    detail::require_same_dim(a.dim(), b.dim());
    if (pts.empty()) throw ConstraintViolation("is_delta_stabber: point list is empty");
    if (!(delta >= 0.0)) throw ConstraintViolation("is_delta_stabber: delta must be >= 0");
    double t = 0.0;
    for (const auto& p : pts) {
        detail::require_same_dim(a.dim(), p.dim());
        const auto range = detail::clip_from(detail::free_interval(p.coords(), a.coords(), b.coords(), delta), t);
        if (range.empty()) return false;
        t = range.lo;
    }
    return true;
}

} // namespace frechet_ann
