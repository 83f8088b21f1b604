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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "geometry.hpp"

namespace frechet_ann {

struct DedupResult {
    /// Surviving canonical curves in lexicographic order.
    std::vector<Curve> curves;
    /// survivor_of[i] = input index of the representative kept for input i.
    std::vector<std::size_t> survivor_of;
    /// Input index of each survivor, parallel to `curves`.
    std::vector<std::size_t> source_index;
};

/// Canonicalizes every curve, sorts the canonical vertex sequences
/// lexicographically and merges exact duplicates. The representative of a
/// group is its lowest input index. Curves at Fréchet distance zero whose
/// canonical sequences still differ are not merged.
inline DedupResult dedup(const std::vector<Curve>& input) {
    std::vector<Curve> canon;
    canon.reserve(input.size());
    for (const auto& c : input) canon.push_back(canonicalize(c));
    std::vector<std::size_t> order(input.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return canon[a] < canon[b]; });

    DedupResult out;
    out.survivor_of.assign(input.size(), 0);
    for (std::size_t pos = 0; pos < order.size();) {
        std::size_t end = pos + 1;
        while (end < order.size() && canon[order[end]] == canon[order[pos]]) ++end;
        // stable sort keeps the lowest input index first within a group
        const std::size_t rep = order[pos];
        out.curves.push_back(canon[rep]);
        out.source_index.push_back(rep);
        for (std::size_t k = pos; k < end; ++k) out.survivor_of[order[k]] = rep;
        pos = end;
    }
    return out;
}

} // namespace frechet_ann
