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

// Euclidean primitives in arbitrary dimension: points, segments, polygonal
// curves, set distances between them, and curve canonicalization.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frechet_ann {

/// Absolute tolerance used by on-segment and interval-endpoint predicates.
inline constexpr double kGeomTolerance = 1e-9;

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Thrown when a numeric argument is outside its documented domain.
class ConstraintViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Coords = std::span<const double>;

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionMismatch(a, b);
}

inline double dot(Coords a, Coords b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double squared_distance(Coords a, Coords b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

inline double distance(Coords a, Coords b) { return std::sqrt(squared_distance(a, b)); }

// Distance from p to the segment a-b. Works for zero-length segments.
inline double point_segment_distance(Coords p, Coords a, Coords b) {
    double vv = 0.0, wv = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double v = b[i] - a[i];
        vv += v * v;
        wv += (p[i] - a[i]) * v;
    }
    const double t = vv > 0.0 ? std::clamp(wv / vv, 0.0, 1.0) : 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double c = a[i] + t * (b[i] - a[i]) - p[i];
        s += c * c;
    }
    return std::sqrt(s);
}

// Closest points of two segments p1-q1 and p2-q2 via the clamped normal equations
// (Ericson, Real-Time Collision Detection, 5.1.9); only dot products are used so
// any dimension works.
inline double segment_segment_distance(Coords p1, Coords q1, Coords p2, Coords q2) {
    const std::size_t dim = p1.size();
    double a = 0, e = 0, f = 0, c = 0, b = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double d1 = q1[i] - p1[i];
        const double d2 = q2[i] - p2[i];
        const double r = p1[i] - p2[i];
        a += d1 * d1;
        e += d2 * d2;
        f += d2 * r;
        c += d1 * r;
        b += d1 * d2;
    }
    constexpr double tiny = 1e-300;
    double s = 0.0, t = 0.0;
    if (a <= tiny && e <= tiny) {
        return distance(p1, p2);
    }
    if (a <= tiny) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else if (e <= tiny) {
        s = std::clamp(-c / a, 0.0, 1.0);
    } else {
        const double denom = a * e - b * b;
        s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
        t = (b * s + f) / e;
        if (t < 0.0) {
            t = 0.0;
            s = std::clamp(-c / a, 0.0, 1.0);
        } else if (t > 1.0) {
            t = 1.0;
            s = std::clamp((b - c) / a, 0.0, 1.0);
        }
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double x = p1[i] + s * (q1[i] - p1[i]) - (p2[i] + t * (q2[i] - p2[i]));
        sq += x * x;
    }
    return std::sqrt(sq);
}

} // namespace detail

/// A point of R^d with finite coordinates.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { check(); }
    Point(std::initializer_list<double> coords) : coords_(coords) { check(); }
    explicit Point(Coords coords) : coords_(coords.begin(), coords.end()) { check(); }

    std::size_t dim() const { return coords_.size(); }
    Coords coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    void check() const {
        if (coords_.empty()) throw ConstraintViolation("point must have dimension >= 1");
        for (double x : coords_)
            if (!std::isfinite(x)) throw ConstraintViolation("point coordinates must be finite");
    }

    std::vector<double> coords_;
};

struct Segment {
    Point a;
    Point b;

    Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
        detail::require_same_dim(a.dim(), b.dim());
    }
};

/// Ordered vertex list of a polygonal curve, stored as one flat coordinate
/// buffer. Complexity k = number of vertices >= 1; a single vertex is the
/// degenerate point curve.
class Curve {
public:
    Curve() = default;

    Curve(std::size_t dim, std::vector<double> flat) : dim_(dim), data_(std::move(flat)) {
        if (dim_ == 0) throw ConstraintViolation("curve dimension must be >= 1");
        if (data_.empty() || data_.size() % dim_ != 0)
            throw ConstraintViolation("curve coordinate count must be a positive multiple of its dimension");
        for (double x : data_)
            if (!std::isfinite(x)) throw ConstraintViolation("curve coordinates must be finite");
    }

    explicit Curve(const std::vector<Point>& points) {
        if (points.empty()) throw ConstraintViolation("curve needs at least one vertex");
        dim_ = points.front().dim();
        data_.reserve(dim_ * points.size());
        for (const auto& p : points) {
            detail::require_same_dim(dim_, p.dim());
            data_.insert(data_.end(), p.coords().begin(), p.coords().end());
        }
    }

    Curve(std::initializer_list<Point> points) : Curve(std::vector<Point>(points)) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::size_t edge_count() const { return size() == 0 ? 0 : size() - 1; }

    Coords vertex(std::size_t i) const { return Coords(data_).subspan(i * dim_, dim_); }
    Point point(std::size_t i) const { return Point(vertex(i)); }
    Coords front() const { return vertex(0); }
    Coords back() const { return vertex(size() - 1); }
    const std::vector<double>& flat() const { return data_; }

    double edge_length(std::size_t i) const { return detail::distance(vertex(i), vertex(i + 1)); }

    double max_edge_length() const {
        double m = 0.0;
        for (std::size_t i = 0; i + 1 < size(); ++i) m = std::max(m, edge_length(i));
        return m;
    }

    std::vector<Point> points() const {
        std::vector<Point> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
        return out;
    }

    /// Every vertex moved by `offset`.
    Curve translated(Coords offset) const {
        detail::require_same_dim(dim_, offset.size());
        auto out = data_;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += offset[i % dim_];
        return Curve(dim_, std::move(out));
    }

    Curve scaled(double factor) const {
        auto out = data_;
        for (auto& x : out) x *= factor;
        return Curve(dim_, std::move(out));
    }

    friend bool operator==(const Curve&, const Curve&) = default;
    /// Lexicographic order on (dimension, vertex sequence).
    friend bool operator<(const Curve& a, const Curve& b) {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

inline double distance(const Point& a, const Point& b) {
    detail::require_same_dim(a.dim(), b.dim());
    return detail::distance(a.coords(), b.coords());
}

inline double point_segment_distance(const Point& p, const Segment& s) {
    detail::require_same_dim(p.dim(), s.a.dim());
    return detail::point_segment_distance(p.coords(), s.a.coords(), s.b.coords());
}

inline double segment_segment_distance(const Segment& s1, const Segment& s2) {
    detail::require_same_dim(s1.a.dim(), s2.a.dim());
    return detail::segment_segment_distance(s1.a.coords(), s1.b.coords(), s2.a.coords(), s2.b.coords());
}

/// Drops exact duplicates and interior vertices lying on the segment joining
/// their neighbours. The Fréchet distance to the input is zero and both
/// endpoints are kept.
inline Curve canonicalize(const Curve& c) {
    const std::size_t dim = c.dim();
    std::vector<double> out;
    out.reserve(c.flat().size());
    auto vertex = [&](std::size_t i) { return Coords(out).subspan(i * dim, dim); };
    std::size_t kept = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Coords v = c.vertex(i);
        if (kept > 0 && std::equal(v.begin(), v.end(), vertex(kept - 1).begin())) continue;
        while (kept >= 2 &&
               detail::point_segment_distance(vertex(kept - 1), vertex(kept - 2), v) <= kGeomTolerance) {
            out.resize(out.size() - dim);
            --kept;
        }
        // A popped run may expose a duplicate of v.
        if (kept > 0 && std::equal(v.begin(), v.end(), vertex(kept - 1).begin())) continue;
        out.insert(out.end(), v.begin(), v.end());
        ++kept;
    }
    return Curve(dim, std::move(out));
}

} // namespace frechet_ann
