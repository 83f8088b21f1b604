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

// JSON container for FrechetIndex: parameters, original and snapped vertex
// arrays, net-tree topology (node id, level, parent) and the snapped-to-
// original back map. Coordinates round-trip bit-exactly.

#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "io.hpp"
#include "pipeline.hpp"

namespace frechet_ann {

inline constexpr const char* kIndexFormat = "frechet-ann-index";
inline constexpr int kIndexVersion = 1;

namespace detail {

using nlohmann::json;

inline json curve_to_json(const Curve& c) { return c.flat(); }

inline Curve curve_from_json(const json& j, std::size_t dim) {
    return Curve(dim, j.get<std::vector<double>>());
}

inline json stats_to_json(const DatasetStats& s) {
    return {{"lambda_max", s.lambda_max}, {"delta_min", s.delta_min},  {"bundledness", s.bundledness_defined() ? json(s.bundledness) : json(nullptr)},
            {"spread", s.spread},         {"n", s.n},                  {"k_max", s.k_max},
            {"delta_min_supplied", s.delta_min_supplied}};
}

inline DatasetStats stats_from_json(const json& j) {
    DatasetStats s;
    s.lambda_max = j.at("lambda_max").get<double>();
    s.delta_min = j.at("delta_min").get<double>();
    s.bundledness = j.at("bundledness").is_null() ? std::numeric_limits<double>::infinity()
                                                  : j.at("bundledness").get<double>();
    s.spread = j.at("spread").get<double>();
    s.n = j.at("n").get<std::size_t>();
    s.k_max = j.at("k_max").get<std::size_t>();
    s.delta_min_supplied = j.at("delta_min_supplied").get<bool>();
    return s;
}

} // namespace detail

inline nlohmann::json index_to_json(const FrechetIndex& idx) {
    using nlohmann::json;
    const auto& p = idx.params();
    json params = {{"mode", to_string(p.mode)}, {"eps", p.eps},         {"eps_prime", p.eps_prime},
                   {"eps_add", p.eps_add},      {"eps_hat", p.eps_hat}, {"mu", p.mu},
                   {"lambda_max", p.lambda_max}, {"degenerate", p.degenerate}};
    params["stats"] = p.stats ? detail::stats_to_json(*p.stats) : json(nullptr);

    const auto& dd = idx.dedup_info();
    json originals = json::array();
    for (std::size_t i = 0; i < idx.originals().size(); ++i)
        originals.push_back({{"source", dd.source_index[i]}, {"vertices", detail::curve_to_json(idx.originals()[i])}});

    const auto& tree = idx.tree();
    json nodes = json::array();
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const auto& n = tree.nodes()[i];
        nodes.push_back({{"id", i},
                         {"level", n.level},
                         {"parent", n.parent == NetTree<Curve>::npos ? json(-1) : json(n.parent)},
                         {"vertices", detail::curve_to_json(tree.item(i))}});
    }
    json merges = json::array();
    for (const auto& m : idx.inner().merges()) merges.push_back({m.original, m.kept});

    return {{"format", kIndexFormat},
            {"version", kIndexVersion},
            {"dim", idx.dim()},
            {"config", {{"tol_abs", idx.config().tol_abs}, {"max_iter", idx.config().max_iter}}},
            {"params", params},
            {"input_count", idx.input_count()},
            {"survivor_of", dd.survivor_of},
            {"labels", idx.labels()},
            {"originals", originals},
            {"tree", {{"base", tree.base()}, {"nodes", nodes}}},
            {"back_map", idx.inner().back_map()},
            {"merges", merges},
            {"projection_bound", idx.inner().bound()},
            {"measured_projection_bound", idx.inner().measured_bound()}};
}

/// Throws ParseError on malformed or incompatible containers.
inline FrechetIndex index_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format").get<std::string>() != kIndexFormat) throw ParseError("not a frechet-ann index");
        if (j.at("version").get<int>() != kIndexVersion) throw ParseError("unsupported index version");
        const auto dim = j.at("dim").get<std::size_t>();
        FrechetConfig cfg;
        cfg.tol_abs = j.at("config").at("tol_abs").get<double>();
        cfg.max_iter = j.at("config").at("max_iter").get<int>();
        cfg.validate();

        const auto& jp = j.at("params");
        IndexParams p;
        const auto mode = jp.at("mode").get<std::string>();
        if (mode == "additive") p.mode = IndexMode::additive;
        else if (mode == "multiplicative") p.mode = IndexMode::multiplicative;
        else throw ParseError("unknown index mode '" + mode + "'");
        p.eps = jp.at("eps").get<double>();
        p.eps_prime = jp.at("eps_prime").get<double>();
        p.eps_add = jp.at("eps_add").get<double>();
        p.eps_hat = jp.at("eps_hat").get<double>();
        p.mu = jp.at("mu").get<std::int64_t>();
        p.lambda_max = jp.at("lambda_max").get<double>();
        p.degenerate = jp.at("degenerate").get<bool>();
        if (!jp.at("stats").is_null()) p.stats = detail::stats_from_json(jp.at("stats"));

        DedupResult dd;
        dd.survivor_of = j.at("survivor_of").get<std::vector<std::size_t>>();
        std::vector<Curve> originals;
        for (const auto& o : j.at("originals")) {
            dd.source_index.push_back(o.at("source").get<std::size_t>());
            originals.push_back(detail::curve_from_json(o.at("vertices"), dim));
        }
        dd.curves = originals;

        std::vector<Curve> items;
        std::vector<int> levels;
        std::vector<std::size_t> parents;
        for (const auto& n : j.at("tree").at("nodes")) {
            if (n.at("id").get<std::size_t>() != items.size()) throw ParseError("tree nodes out of order");
            levels.push_back(n.at("level").get<int>());
            const auto parent = n.at("parent").get<long long>();
            parents.push_back(parent < 0 ? NetTree<Curve>::npos : static_cast<std::size_t>(parent));
            items.push_back(detail::curve_from_json(n.at("vertices"), dim));
        }
        auto tree = NetTree<Curve>::from_topology(frechet_oracle(cfg), j.at("tree").at("base").get<double>(),
                                                  std::move(items), levels, parents);
        std::vector<NearlyDoublingIndex<Curve>::Merge> merges;
        for (const auto& m : j.at("merges")) merges.push_back({m.at(0).get<std::size_t>(), m.at(1).get<std::size_t>()});
        NearlyDoublingIndex<Curve> inner(std::move(originals), std::move(tree),
                                         j.at("back_map").get<std::vector<std::size_t>>(), std::move(merges),
                                         j.at("projection_bound").get<double>(),
                                         j.at("measured_projection_bound").get<double>());
        return FrechetIndex(std::move(p), cfg, std::move(dd), j.at("labels").get<std::vector<std::string>>(),
                            std::move(inner), j.at("input_count").get<std::size_t>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed index: ") + e.what());
    } catch (const ConstraintViolation& e) {
        throw ParseError(std::string("inconsistent index: ") + e.what());
    }
}

inline void save_index(const FrechetIndex& idx, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << index_to_json(idx).dump() << '\n';
}

inline FrechetIndex load_index(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed index: ") + e.what());
    }
    return index_from_json(j);
}

} // namespace frechet_ann
