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

// Projection of curves onto (mu, eps)-curves: polygonal curves whose edge
// lengths are integer multiples of eps, at most mu * eps.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "geometry.hpp"

namespace frechet_ann {

struct SnappedCurve {
    Curve curve;
    double eps = 0.0;
    std::int64_t mu = 0;          ///< largest realized edge multiplier
    std::size_t origin_id = 0;
};

/// True iff every edge length is within kGeomTolerance of m * eps for an
/// integer m with m * eps <= mu * eps (+ tolerance). Zero-length edges count
/// as multiple zero.
inline bool validate_snapped(const Curve& c, double eps, std::int64_t mu) {
    if (!(eps > 0.0) || mu < 0) return false;
    const double cap = static_cast<double>(mu) * eps + kGeomTolerance;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const double len = c.edge_length(i);
        const double m = std::nearbyint(len / eps);
        if (std::abs(len - m * eps) > kGeomTolerance) return false;
        if (len > cap) return false;
    }
    return true;
}

/// Walks the vertices, rounding the distance from the last snapped vertex to
/// the next input vertex to the nearest multiple of eps (ties to even) and
/// stepping that far towards it. Each vertex moves by at most eps/2, so the
/// Fréchet distance to the input is at most eps/2 and the result is a
/// (ceil(Lambda/eps)+1, eps)-curve of the same complexity.
inline SnappedCurve snap_curve(const Curve& p, double eps, std::size_t origin_id = 0) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ConstraintViolation("snap_curve: eps must be positive");
    const std::size_t dim = p.dim();
    std::vector<double> out(p.flat().begin(), p.flat().begin() + static_cast<std::ptrdiff_t>(dim));
    out.reserve(p.flat().size());
    std::int64_t mu = 0;
    std::vector<double> prev(out);
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Coords target = p.vertex(i);
        const double len = detail::distance(target, prev);
        const double multiple = std::nearbyint(len / eps);
        mu = std::max(mu, static_cast<std::int64_t>(multiple));
        if (len == 0.0 || multiple == 0.0) {
            // direction undefined or rounded away: zero-length edge
        } else if (std::abs(len - multiple * eps) <= kGeomTolerance) {
            prev.assign(target.begin(), target.end());
        } else {
            const double scale = multiple * eps / len;
            for (std::size_t k = 0; k < dim; ++k) prev[k] += scale * (target[k] - prev[k]);
        }
        out.insert(out.end(), prev.begin(), prev.end());
    }
    return SnappedCurve{Curve(dim, std::move(out)), eps, mu, origin_id};
}

/// Multiplier cap guaranteed by the construction for edge-length bound Lambda.
inline std::int64_t snap_mu_bound(double lambda, double eps) {
    return static_cast<std::int64_t>(std::ceil(lambda / eps)) + 1;
}

} // namespace frechet_ann
