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

// Empirical probes of the doubling behaviour of curve sets: the adversarial
// one-dimensional family of zig-zag (mu, 1)-curves around a straight center
// curve, and greedy packing counts under the Fréchet distance.
//
// For reference, the space of (mu, eps)-curves with k vertices in R^d has
// doubling constant O(43^d k mu)^k, and O(43^d c mu)^k when restricted to
// c-packed curves. These bounds are existential and only probed here from
// below: the family built by generate_lower_bound_family has binom(L-1, m)
// members pairwise more than 1/4 apart inside a ball of radius 1/2, giving
// doubling dimension Omega(k log mu).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "frechet.hpp"
#include "geometry.hpp"
#include "snap.hpp"

namespace frechet_ann {

struct LowerBoundMember {
    std::vector<std::int64_t> cuts; ///< strictly increasing cut positions n_1 < ... < n_m
    Curve curve;

    std::string name() const {
        std::string s = "G";
        for (auto c : cuts) s += "_" + std::to_string(c);
        return s;
    }
};

struct LowerBoundFamily {
    std::int64_t mu = 0;
    std::int64_t k = 0; ///< edge budget of every member
    std::int64_t m = 0; ///< number of cuts
    Curve center;       ///< vertices 0, mu, 2 mu, ..., (k - 2m) mu
    std::vector<LowerBoundMember> members;
    std::uint64_t total_tuples = 0; ///< binom((k - 2m) mu - 1, m), saturating
    std::size_t skipped = 0;        ///< tuples whose curve exceeded k edges
};

/// binom(n, r), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i; // exact: binom(n - r + i, i)
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace detail {

// Zig-zag curve: follow the center to n_1 + 1, step back to n_1, follow to
// n_2 + 1, step back to n_2, ..., then run to the end.
inline std::vector<double> zigzag_vertices(std::int64_t mu, std::int64_t length, const std::vector<std::int64_t>& cuts) {
    std::vector<double> out;
    auto run = [&](std::int64_t from, std::int64_t to) {
        // center vertices strictly inside (from, to), then `to`
        for (std::int64_t v = (from / mu + 1) * mu; v < to; v += mu) out.push_back(static_cast<double>(v));
        out.push_back(static_cast<double>(to));
    };
    out.push_back(0.0);
    std::int64_t pos = 0;
    for (auto n : cuts) {
        run(pos, n + 1);
        out.push_back(static_cast<double>(n));
        pos = n;
    }
    run(pos, length);
    return out;
}

} // namespace detail

/// Builds the center curve and one member per strictly increasing cut tuple
/// drawn from {1, ..., (k - 2m) mu - 1}, in lexicographic order, stopping
/// after `limit` members when given. Every member is a (mu, 1)-curve with at
/// most k edges and Fréchet distance exactly 1/2 to the center.
inline LowerBoundFamily generate_lower_bound_family(std::int64_t mu, std::int64_t k, std::int64_t m,
                                                    std::optional<std::size_t> limit = std::nullopt) {
    if (mu <= 1) throw ConstraintViolation("generate_lower_bound_family: mu must exceed 1");
    if (m < 0 || 2 * m > k) throw ConstraintViolation("generate_lower_bound_family: need 0 <= m <= k/2");
    if (k - 2 * m < 1) throw ConstraintViolation("generate_lower_bound_family: need k - 2m >= 1");

    LowerBoundFamily fam;
    fam.mu = mu;
    fam.k = k;
    fam.m = m;
    const std::int64_t length = (k - 2 * m) * mu;
    {
        std::vector<double> c;
        for (std::int64_t i = 0; i <= k - 2 * m; ++i) c.push_back(static_cast<double>(i * mu));
        fam.center = Curve(1, std::move(c));
    }
    fam.total_tuples = binomial(static_cast<std::uint64_t>(length - 1), static_cast<std::uint64_t>(m));

    const std::int64_t lo = 1, hi = length - 1; // cut values
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(m));
    std::iota(cuts.begin(), cuts.end(), lo);
    if (m > 0 && cuts.back() > hi) return fam;
    while (true) {
        if (limit && fam.members.size() >= *limit) break;
        auto verts = detail::zigzag_vertices(mu, length, cuts);
        if (static_cast<std::int64_t>(verts.size()) - 1 > k) {
            ++fam.skipped;
        } else {
            Curve g(1, std::move(verts));
            if (!validate_snapped(g, 1.0, mu))
                throw std::logic_error("generate_lower_bound_family: member is not a (mu,1)-curve");
            fam.members.push_back({cuts, std::move(g)});
        }
        // next tuple in lexicographic order
        std::int64_t i = m - 1;
        while (i >= 0 && cuts[static_cast<std::size_t>(i)] == hi - (m - 1 - i)) --i;
        if (i < 0) break;
        ++cuts[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < m; ++j) cuts[static_cast<std::size_t>(j)] = cuts[static_cast<std::size_t>(j - 1)] + 1;
    }
    return fam;
}

struct PackingReport {
    Curve center;
    double radius = 0.0;
    double net_separation = 0.0;
    std::size_t in_ball = 0;       ///< curves with d_F(center, s) <= r + tol
    std::size_t packing_count = 0; ///< size of the greedy separated subset
    double log2_count = 0.0;
    std::vector<std::size_t> kept; ///< input indices of the subset, in acceptance order
};

/// Greedy net inside B_r(center): scans S (in input order, or shuffled by
/// `seed`) and keeps every curve within r + tol of the center whose Fréchet
/// distance to all kept curves exceeds sep - tol. Any such separated subset
/// needs one ball of radius sep/2 per member to cover, so the count
/// lower-bounds the covering number.
inline PackingReport packing_estimate(const std::vector<Curve>& s, const Curve& center, double r, double sep,
                                      const FrechetConfig& cfg = {}, std::optional<std::uint64_t> seed = std::nullopt) {
    cfg.validate();
    if (!(r > 0.0)) throw ConstraintViolation("packing_estimate: r must be positive");
    if (!(sep > 0.0) || sep > r) throw ConstraintViolation("packing_estimate: need 0 < sep <= r");
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    PackingReport rep;
    rep.center = center;
    rep.radius = r;
    rep.net_separation = sep;
    const double tol = cfg.tol_abs;
    const double close = std::max(0.0, sep - tol);
    std::vector<const Curve*> kept;
    for (auto idx : order) {
        const Curve& c = s[idx];
        if (!frechet_decide(center, c, r + tol)) continue;
        ++rep.in_ball;
        const bool separated = std::none_of(kept.begin(), kept.end(),
                                            [&](const Curve* other) { return frechet_decide(*other, c, close); });
        if (!separated) continue;
        kept.push_back(&c);
        rep.kept.push_back(idx);
    }
    rep.packing_count = kept.size();
    rep.log2_count = rep.packing_count ? std::log2(static_cast<double>(rep.packing_count)) : 0.0;
    return rep;
}

} // namespace frechet_ann
