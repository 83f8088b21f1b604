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

#include <algorithm>
#include <cmath>

#include "frechet_ann/doubling.hpp"
#include "frechet_ann/frechet.hpp"

namespace frechet_ann {
namespace {

const FrechetConfig kCfg{};

std::vector<double> coords_of(const Curve& c) { return c.flat(); }

const LowerBoundMember* find_member(const LowerBoundFamily& f, std::vector<std::int64_t> cuts) {
    for (const auto& m : f.members)
        if (m.cuts == cuts) return &m;
    return nullptr;
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(14, 3), 364u);
    EXPECT_EQ(binomial(5, 0), 1u);
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
    EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(LowerBoundFamily, CountAndCenter) {
    const auto f = generate_lower_bound_family(5, 9, 3);
    EXPECT_EQ(f.center, (Curve{{0}, {5}, {10}, {15}}));
    EXPECT_EQ(f.total_tuples, 364u);
    EXPECT_EQ(f.members.size(), 364u);
    EXPECT_EQ(f.skipped, 0u);
    EXPECT_EQ(f.members.front().cuts, (std::vector<std::int64_t>{1, 2, 3}));
    EXPECT_EQ(f.members.back().cuts, (std::vector<std::int64_t>{12, 13, 14}));
    for (std::size_t i = 1; i < f.members.size(); ++i) EXPECT_LT(f.members[i - 1].cuts, f.members[i].cuts);
}

TEST(LowerBoundFamily, NamedMembers) {
    const auto f = generate_lower_bound_family(5, 9, 3);
    const auto* g = find_member(f, {2, 6, 10});
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(g->name(), "G_2_6_10");
    EXPECT_EQ(coords_of(g->curve), (std::vector<double>{0, 3, 2, 5, 7, 6, 10, 11, 10, 15}));
    const auto* h = find_member(f, {5, 7, 12});
    ASSERT_NE(h, nullptr);
    EXPECT_EQ(coords_of(h->curve), (std::vector<double>{0, 5, 6, 5, 8, 7, 10, 13, 12, 15}));
}

TEST(LowerBoundFamily, MembersAreSnappedCurvesAtHalf) {
    const auto f = generate_lower_bound_family(5, 9, 3);
    for (const auto& g : f.members) {
        EXPECT_TRUE(validate_snapped(g.curve, 1.0, 5));
        EXPECT_LE(g.curve.edge_count(), 9u);
        EXPECT_NEAR(frechet_distance(f.center, g.curve, kCfg), 0.5, 1e-6) << g.name();
    }
}

TEST(LowerBoundFamily, PairwiseBeyondQuarter) {
    const auto f = generate_lower_bound_family(4, 7, 2);
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            EXPECT_FALSE(frechet_decide(f.members[i].curve, f.members[j].curve, 0.25))
                << f.members[i].name() << " vs " << f.members[j].name();
}

TEST(LowerBoundFamily, NoCutsAndLimit) {
    const auto f = generate_lower_bound_family(3, 4, 0);
    ASSERT_EQ(f.members.size(), 1u);
    EXPECT_EQ(f.members[0].curve, f.center);
    EXPECT_EQ(f.total_tuples, 1u);

    const auto capped = generate_lower_bound_family(5, 9, 3, 10);
    EXPECT_EQ(capped.members.size(), 10u);
    EXPECT_EQ(capped.total_tuples, 364u);
}

TEST(LowerBoundFamily, ParameterErrors) {
    EXPECT_THROW(generate_lower_bound_family(1, 9, 3), ConstraintViolation);
    EXPECT_THROW(generate_lower_bound_family(5, 5, 3), ConstraintViolation);
    EXPECT_THROW(generate_lower_bound_family(5, 6, 3), ConstraintViolation);
    EXPECT_THROW(generate_lower_bound_family(5, 6, -1), ConstraintViolation);
}

std::vector<Curve> singletons(const std::vector<double>& xs) {
    std::vector<Curve> out;
    for (double x : xs) out.push_back(Curve{{x}});
    return out;
}

TEST(PackingEstimate, Examples) {
    const Curve c{{0, 0}, {1, 1}};
    EXPECT_EQ(packing_estimate({c}, c, 1.0, 0.5, kCfg).packing_count, 1u);

    const auto line = singletons({-4, -3, -2, -1, 0, 1, 2, 3, 4});
    const auto rep = packing_estimate(line, Curve{{0}}, 2.0, 1.0, kCfg);
    EXPECT_EQ(rep.in_ball, 5u);
    EXPECT_EQ(rep.packing_count, 5u);
    EXPECT_EQ(rep.kept, (std::vector<std::size_t>{2, 3, 4, 5, 6}));
    EXPECT_DOUBLE_EQ(rep.log2_count, std::log2(5.0));
}

TEST(PackingEstimate, LowerBoundFamilyFullyKept) {
    const auto f = generate_lower_bound_family(5, 9, 3);
    std::vector<Curve> s;
    for (const auto& g : f.members) s.push_back(g.curve);
    const auto rep = packing_estimate(s, f.center, 0.5 + 1e-6, 0.25, kCfg);
    EXPECT_EQ(rep.packing_count, s.size());
}

TEST(PackingEstimate, MonotoneUnderAppending) {
    std::vector<double> xs;
    for (int i = 0; i < 40; ++i) xs.push_back(std::sin(1.7 * i) * 3.0);
    std::size_t prev = 0;
    for (std::size_t n = 1; n <= xs.size(); ++n) {
        const auto s = singletons({xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n)});
        const auto count = packing_estimate(s, Curve{{0}}, 2.0, 0.5, kCfg).packing_count;
        EXPECT_GE(count, prev);
        prev = count;
    }
}

TEST(PackingEstimate, SeededOrderIsDeterministic) {
    const auto s = singletons({0, 0.3, 0.6, 0.9, 1.2, 1.5, 1.8});
    const auto a = packing_estimate(s, Curve{{0.9}}, 1.0, 0.5, kCfg, 7);
    const auto b = packing_estimate(s, Curve{{0.9}}, 1.0, 0.5, kCfg, 7);
    EXPECT_EQ(a.kept, b.kept);
    EXPECT_GE(a.packing_count, 3u);
}

TEST(PackingEstimate, ParameterErrors) {
    const Curve c{{0}};
    EXPECT_THROW(packing_estimate({c}, c, 0.0, 0.0, kCfg), ConstraintViolation);
    EXPECT_THROW(packing_estimate({c}, c, 1.0, 2.0, kCfg), ConstraintViolation);
    EXPECT_THROW(packing_estimate({c}, c, 1.0, 0.0, kCfg), ConstraintViolation);
}

TEST(PackingEstimate, SubsetDoublingOnLine) {
    // {±(1 + 2^-i)} accumulates at ±1; its packing counts stay within the
    // square of the ambient line's count for the same ball.
    std::vector<double> xs;
    for (int i = 0; i < 30; ++i) {
        xs.push_back(1.0 + std::ldexp(1.0, -i));
        xs.push_back(-(1.0 + std::ldexp(1.0, -i)));
    }
    const auto subset = singletons(xs);
    for (double center : {1.0, -1.0, 1.5, 2.0}) {
        for (double r : {0.01, 0.1, 0.5, 1.0, 3.0}) {
            std::vector<double> grid;
            for (int i = -2000; i <= 2000; ++i) grid.push_back(center + r * i / 2000.0);
            const auto ambient = packing_estimate(singletons(grid), Curve{{center}}, r, r / 2, kCfg).packing_count;
            const auto sub = packing_estimate(subset, Curve{{center}}, r, r / 2, kCfg).packing_count;
            EXPECT_LE(sub, ambient * ambient) << "center " << center << " r " << r;
            EXPECT_LE(ambient, 5u);
        }
    }
}

} // namespace
} // namespace frechet_ann
