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
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frechet_ann/frechet.hpp"
#include "oracles.hpp"

namespace frechet_ann {
namespace {

const FrechetConfig kCfg{};
const double kTol = kCfg.tol_abs;

TEST(DiscreteFrechet, Examples) {
    const Curve p{{0, 0}, {1, 0}};
    EXPECT_DOUBLE_EQ(discrete_frechet(p, p), 0.0);
    EXPECT_DOUBLE_EQ(discrete_frechet(p, Curve{{0, 1}, {1, 1}}), 1.0);
    // The coupling oracle gives sqrt(2) here: (1,1) must pair with (0,0) or (2,0).
    const Curve a{{0, 0}, {2, 0}}, b{{0, 0}, {1, 1}, {2, 0}};
    EXPECT_NEAR(testing::enumerate_discrete_frechet(a, b), std::sqrt(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(discrete_frechet(a, b), std::sqrt(2.0));
}

TEST(DiscreteFrechet, MatchesCouplingEnumeration) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const Curve p = testing::random_curve(rng, d, 1 + trial % 5);
        const Curve q = testing::random_curve(rng, d, 1 + (trial / 5) % 5);
        EXPECT_EQ(discrete_frechet(p, q), testing::enumerate_discrete_frechet(p, q)) << "trial " << trial;
    }
}

TEST(DiscreteFrechet, DimensionMismatch) {
    EXPECT_THROW(discrete_frechet(Curve{{0}}, Curve{{0, 0}}), DimensionMismatch);
}

TEST(FrechetDecide, Examples) {
    const Curve p{{0, 0}, {1, 0}}, q{{0, 1}, {1, 1}};
    EXPECT_TRUE(frechet_decide(p, p, 0.0));
    EXPECT_FALSE(frechet_decide(p, q, 0.99));
    EXPECT_TRUE(frechet_decide(p, q, 1.01));
    const Curve a{{0, 0}, {2, 0}}, b{{0, 0}, {1, 0.5}, {2, 0}};
    EXPECT_TRUE(frechet_decide(a, b, 0.5));
    EXPECT_FALSE(frechet_decide(a, b, 0.49));
}

TEST(FrechetDecide, Errors) {
    const Curve p{{0, 0}, {1, 0}};
    EXPECT_THROW(frechet_decide(p, p, -0.1), ConstraintViolation);
    EXPECT_THROW(frechet_decide(p, Curve{{0, 0, 0}}, 1.0), DimensionMismatch);
}

TEST(FrechetDecide, Monotone) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Curve p = testing::random_curve(rng, 2, 2 + trial % 5);
        const Curve q = testing::random_curve(rng, 2, 2 + trial % 4);
        bool seen_true = false;
        for (double delta = 0.0; delta < 12.0; delta += 0.05) {
            const bool r = frechet_decide(p, q, delta);
            if (seen_true) {
                EXPECT_TRUE(r) << "trial " << trial << " delta " << delta;
            }
            seen_true = seen_true || r;
        }
        EXPECT_TRUE(seen_true);
    }
}

TEST(FrechetDistance, Examples) {
    const Curve p{{0, 0}, {1, 0}};
    EXPECT_LE(frechet_distance(p, p, kCfg), kTol);
    EXPECT_NEAR(frechet_distance(p, Curve{{0, 1}, {1, 1}}, kCfg), 1.0, kTol);
    EXPECT_NEAR(frechet_distance(Curve{{0, 0}, {2, 0}}, Curve{{0, 0}, {1, 0.5}, {2, 0}}, kCfg), 0.5, kTol);
}

TEST(FrechetDistance, BacktrackingNeedsContinuousMatching) {
    // P goes 0 -> 3, Q goes 0 -> 2 -> 1 -> 3: the leash must cover the back-step.
    const Curve p{{0}, {3}}, q{{0}, {2}, {1}, {3}};
    EXPECT_NEAR(frechet_distance(p, q, kCfg), 0.5, kTol);
    EXPECT_NEAR(testing::dense_grid_frechet(p, q, 1e-3), 0.5, 1e-3);
}

TEST(FrechetDistance, SinglePointCurves) {
    const Curve pt{{0, 0}};
    EXPECT_DOUBLE_EQ(frechet_distance(pt, Curve{{3, 4}}, kCfg), 5.0);
    EXPECT_DOUBLE_EQ(frechet_distance(pt, Curve{{1, 0}, {0, 2}}, kCfg), 2.0);
    EXPECT_TRUE(frechet_decide(Curve{{1, 0}, {0, 2}}, pt, 2.0));
    EXPECT_FALSE(frechet_decide(Curve{{1, 0}, {0, 2}}, pt, 1.9));
}

TEST(FrechetDistance, ZeroLengthEdges) {
    const Curve p{{0, 0}, {0, 0}, {2, 0}, {2, 0}}, q{{0, 0}, {2, 0}};
    EXPECT_LE(frechet_distance(p, q, kCfg), kTol);
    const Curve r{{0, 1}, {0, 1}, {2, 1}};
    EXPECT_NEAR(frechet_distance(p, r, kCfg), 1.0, kTol);
}

TEST(FrechetDistance, MatchesDenseGridOracle) {
    std::mt19937_64 rng(77);
    const double h = 2e-3;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + trial % 2;
        const Curve p = testing::random_curve(rng, d, 2 + trial % 3, 1.0);
        Curve q = testing::random_curve(rng, d, 2 + (trial / 3) % 3, 1.0);
        if (trial % 2) q = testing::pin_endpoints(q, p);
        const double got = frechet_distance(p, q, kCfg);
        const double oracle = testing::dense_grid_frechet(p, q, h);
        EXPECT_GE(got, oracle - h - 2 * kTol) << "trial " << trial;
        EXPECT_LE(got, oracle + 2 * kTol) << "trial " << trial;
    }
}

TEST(FrechetDistance, PseudoMetricAndDiscreteUpperBound) {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const Curve p = testing::random_curve(rng, d, 1 + trial % 6);
        Curve q = testing::random_curve(rng, d, 1 + (trial / 2) % 6);
        Curve r = testing::random_curve(rng, d, 1 + (trial / 3) % 6);
        if (trial % 2) q = testing::pin_endpoints(q, p), r = testing::pin_endpoints(r, p);
        const double pq = frechet_distance(p, q, kCfg), qp = frechet_distance(q, p, kCfg);
        const double qr = frechet_distance(q, r, kCfg), pr = frechet_distance(p, r, kCfg);
        EXPECT_LE(frechet_distance(p, p, kCfg), kTol);
        EXPECT_NEAR(pq, qp, 2 * kTol);
        EXPECT_LE(pr, pq + qr + 3 * kTol);
        EXPECT_LE(pq, discrete_frechet(p, q) + kTol);
        EXPECT_GE(pq, std::max(testing::euclid(testing::vertex_of(p, 0), testing::vertex_of(q, 0)),
                               testing::euclid(testing::vertex_of(p, p.size() - 1),
                                               testing::vertex_of(q, q.size() - 1))) -
                          kGeomTolerance);
    }
}

TEST(FrechetDistance, TranslationAndScale) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const Curve p = testing::random_curve(rng, 2, 2 + trial % 5);
        const Curve q = testing::pin_endpoints(testing::random_curve(rng, 2, 2 + trial % 3), p);
        const double base = frechet_distance(p, q, kCfg);
        const std::vector<double> v{3.5, -1.25};
        EXPECT_NEAR(frechet_distance(p.translated(v), q.translated(v), kCfg), base, 2 * kTol);
        EXPECT_NEAR(frechet_distance(p.scaled(3.0), q.scaled(3.0), kCfg), 3.0 * base, 4 * kTol);
    }
}

TEST(FrechetDistance, SharedEndpointsNeedBisection) {
    std::mt19937_64 rng(303);
    int interior = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Curve p = testing::random_curve(rng, 2, 3 + trial % 4, 1.0);
        const Curve q = testing::pin_endpoints(testing::random_curve(rng, 2, 3 + trial % 3, 1.0), p);
        const double got = frechet_distance(p, q, kCfg);
        if (got > 0.05) ++interior;
        const double oracle = testing::dense_grid_frechet(p, q, 2e-3);
        EXPECT_GE(got, oracle - 2e-3 - 2 * kTol) << "trial " << trial;
        EXPECT_LE(got, oracle + 2 * kTol) << "trial " << trial;
    }
    EXPECT_GT(interior, 50);
}

TEST(FrechetDistance, ToleranceUnreachable) {
    const Curve a{{0, 0}, {2, 0}}, b{{0, 0}, {1, 0.5}, {2, 0}};
    FrechetConfig cfg;
    cfg.tol_abs = 1e-12;
    cfg.max_iter = 3;
    EXPECT_THROW(frechet_distance(a, b, cfg), ToleranceUnreachable);
    cfg.tol_abs = 0.0;
    EXPECT_THROW(frechet_distance(a, b, cfg), ConstraintViolation);
}

TEST(DeltaStabber, Examples) {
    const Point a{0, 0}, b{2, 0};
    EXPECT_TRUE(is_delta_stabber(a, b, {Point{0, 0}, Point{1, 0}, Point{2, 0}}, 0.0));
    EXPECT_FALSE(is_delta_stabber(a, b, {Point{1, 0}, Point{0, 0}}, 0.4));
    EXPECT_TRUE(is_delta_stabber(a, b, {Point{0.5, 0.3}, Point{1.5, -0.3}}, 0.3));
}

TEST(DeltaStabber, Errors) {
    EXPECT_THROW(is_delta_stabber(Point{0, 0}, Point{1, 0}, {}, 1.0), ConstraintViolation);
    EXPECT_THROW(is_delta_stabber(Point{0, 0}, Point{1, 0}, {Point{1}}, 1.0), DimensionMismatch);
}

TEST(DeltaStabber, ImpliedByFrechetDecision) {
    std::mt19937_64 rng(31);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Curve e = testing::random_curve(rng, 2, 2, 2.0);
        const Curve p = testing::random_curve(rng, 2, 1 + trial % 5, 2.0);
        const double delta = 0.5 + 0.01 * (trial % 300);
        if (!frechet_decide(e, p, delta)) continue;
        ++positives;
        EXPECT_TRUE(is_delta_stabber(e.point(0), e.point(1), p.points(), delta)) << "trial " << trial;
    }
    EXPECT_GT(positives, 50);
}

} // namespace
} // namespace frechet_ann
