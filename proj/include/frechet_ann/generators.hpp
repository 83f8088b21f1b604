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

// Seeded random curve generators shared by the CLI benchmarks and tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "geometry.hpp"

namespace frechet_ann {

/// Random walk: first vertex uniform in [0, extent]^d, then k-1 steps with
/// coordinates uniform in [-step, step].
inline Curve random_walk_curve(std::mt19937_64& rng, std::size_t dim, std::size_t k, double extent = 10.0,
                               double step = 1.0) {
    std::uniform_real_distribution<double> start(0.0, extent), delta(-step, step);
    std::vector<double> flat(dim * k);
    for (std::size_t j = 0; j < dim; ++j) flat[j] = start(rng);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 0; j < dim; ++j) flat[i * dim + j] = flat[(i - 1) * dim + j] + delta(rng);
    return Curve(dim, std::move(flat));
}

/// n random walks with vertex counts uniform in [k_min, k_max].
inline std::vector<Curve> random_walk_dataset(std::uint64_t seed, std::size_t n, std::size_t dim, std::size_t k_min,
                                              std::size_t k_max, double extent = 10.0, double step = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> kdist(k_min, k_max);
    std::vector<Curve> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_walk_curve(rng, dim, kdist(rng), extent, step));
    return out;
}

/// n single-vertex curves uniform in [0, extent]^d.
inline std::vector<Curve> uniform_point_dataset(std::uint64_t seed, std::size_t n, std::size_t dim,
                                                double extent = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, extent);
    std::vector<Curve> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> p(dim);
        for (auto& x : p) x = u(rng);
        out.emplace_back(dim, std::move(p));
    }
    return out;
}

} // namespace frechet_ann
