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

// Approximate nearest-neighbour index for polygonal curves under the
// continuous Fréchet distance. Input curves are deduplicated, snapped onto
// (mu, eps_hat)-curves and indexed in a net tree; answers are mapped back to
// the original curves.
//
//   additive mode:       d_F(q, answer) <= (1+eps) d_F(q, s) + eps_add        for all s
//   multiplicative mode: d_F(q, answer) <= (1+eps) d_F(q, s)                  for all s
//
// each up to a solver slack of at most 6 * tol_abs. The multiplicative mode
// runs the additive construction with eps' = eps/4 and eps'' = eps' delta_min,
// where delta_min is the minimal pairwise Fréchet distance of the input.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ann.hpp"
#include "dedup.hpp"
#include "frechet.hpp"
#include "geometry.hpp"
#include "snap.hpp"
#include "stats.hpp"

namespace frechet_ann {

enum class IndexMode { additive, multiplicative };

inline const char* to_string(IndexMode m) { return m == IndexMode::additive ? "additive" : "multiplicative"; }

struct IndexParams {
    IndexMode mode = IndexMode::additive;
    double eps = 0.0;       ///< requested multiplicative error
    double eps_prime = 0.0; ///< eps handed to the net-tree query (eps, or eps/4)
    double eps_add = 0.0;   ///< additive error of the inner construction (eps_add, or eps' delta_min)
    double eps_hat = 0.0;   ///< snapping grid, eps_add / 2
    std::int64_t mu = 0;    ///< ceil(lambda_max / eps_hat) + 1
    double lambda_max = 0.0;
    std::optional<DatasetStats> stats;
    /// Multiplicative build over fewer than two distinct curves: the index
    /// holds one curve and always returns it.
    bool degenerate = false;
};

/// Slack multiplier on tol_abs budgeted in every query guarantee.
inline constexpr double kSlackTerms = 6.0;

struct QueryCertificate {
    std::size_t snapped_index = 0;  ///< net-tree item that answered
    double snapped_distance = 0.0;  ///< d_F(q, snapped curve)
    double additive_bound = 0.0;    ///< eps_add in additive mode, 0 otherwise
    double slack_budget = 0.0;      ///< kSlackTerms * tol_abs
    std::size_t collisions = 0;     ///< originals merged into another representative at build
    std::size_t evaluations = 0;    ///< Fréchet evaluations spent on the query
};

struct QueryAnswer {
    std::size_t original = 0;     ///< index into FrechetIndex::originals()
    std::size_t source_index = 0; ///< position in the build input
    std::string label;
    double distance = 0.0;        ///< d_F(q, original)
    QueryCertificate certificate;
};

inline MetricOracle<Curve> frechet_oracle(const FrechetConfig& cfg) {
    return {[cfg](const Curve& a, const Curve& b) { return frechet_distance(a, b, cfg); }, cfg.tol_abs};
}

class FrechetIndex {
public:
    FrechetIndex(IndexParams params, FrechetConfig cfg, DedupResult dedup, std::vector<std::string> labels,
                 NearlyDoublingIndex<Curve> index, std::size_t input_count)
        : params_(std::move(params)),
          cfg_(cfg),
          dedup_(std::move(dedup)),
          labels_(std::move(labels)),
          index_(std::move(index)),
          input_count_(input_count) {}

    QueryAnswer query(const Curve& q) const {
        detail::require_same_dim(dim(), q.dim());
        const auto a = index_.query(q, params_.eps_prime);
        QueryAnswer out;
        out.original = a.original;
        out.source_index = dedup_.source_index[a.original];
        if (out.source_index < labels_.size()) out.label = labels_[out.source_index];
        out.distance = a.distance;
        out.certificate.snapped_index = a.representative;
        out.certificate.snapped_distance = a.representative_distance;
        out.certificate.additive_bound = params_.mode == IndexMode::additive ? params_.eps_add : 0.0;
        out.certificate.slack_budget = kSlackTerms * cfg_.tol_abs;
        out.certificate.collisions = index_.merges().size();
        out.certificate.evaluations = a.evaluations;
        return out;
    }

    /// Right-hand side of the query guarantee for a given optimum distance.
    double guarantee(double optimum) const {
        return (1.0 + params_.eps) * optimum + (params_.mode == IndexMode::additive ? params_.eps_add : 0.0) +
               kSlackTerms * cfg_.tol_abs;
    }

    std::size_t dim() const { return originals().front().dim(); }
    const IndexParams& params() const { return params_; }
    const FrechetConfig& config() const { return cfg_; }
    const std::vector<Curve>& originals() const { return index_.originals(); }
    const DedupResult& dedup_info() const { return dedup_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const NearlyDoublingIndex<Curve>& inner() const { return index_; }
    const NetTree<Curve>& tree() const { return index_.tree(); }
    std::size_t input_count() const { return input_count_; }

private:
    IndexParams params_;
    FrechetConfig cfg_;
    DedupResult dedup_;
    std::vector<std::string> labels_;
    NearlyDoublingIndex<Curve> index_;
    std::size_t input_count_ = 0;
};

namespace detail {

inline void require_uniform_dim(const std::vector<Curve>& s) {
    for (const auto& c : s) require_same_dim(s.front().dim(), c.dim());
}

// Snaps the deduplicated curves with grid eps_hat and indexes them.
inline FrechetIndex assemble(IndexParams params, const FrechetConfig& cfg, DedupResult dd,
                             std::vector<std::string> labels, std::size_t input_count) {
    params.lambda_max = 0.0;
    for (const auto& c : dd.curves) params.lambda_max = std::max(params.lambda_max, c.max_edge_length());
    params.mu = snap_mu_bound(params.lambda_max, params.eps_hat);
    const double eps_hat = params.eps_hat;
    const std::int64_t mu = params.mu;
    NearlyDoublingProjection<Curve> proj{[eps_hat, mu](const Curve& c) {
                                             auto s = snap_curve(c, eps_hat);
                                             if (!validate_snapped(s.curve, eps_hat, mu))
                                                 throw std::logic_error("snapped curve is not a (mu, eps_hat)-curve");
                                             return s.curve;
                                         },
                                         eps_hat / 2.0};
    NearlyDoublingIndex<Curve> index(dd.curves, proj, frechet_oracle(cfg));
    return FrechetIndex(std::move(params), cfg, std::move(dd), std::move(labels), std::move(index), input_count);
}

} // namespace detail

/// Index with guarantee (1+eps) d_F(q, s) + eps_add. Requires eps in (0, 1)
/// and eps_add > 0. `labels`, when non-empty, names the input curves.
inline FrechetIndex build_additive(const std::vector<Curve>& s, double eps, double eps_add,
                                   const FrechetConfig& cfg = {}, std::vector<std::string> labels = {}) {
    cfg.validate();
    if (s.empty()) throw ConstraintViolation("build_additive: empty input");
    if (!(eps > 0.0 && eps < 1.0)) throw ConstraintViolation("build_additive: eps must lie in (0, 1)");
    if (!(eps_add > 0.0) || !std::isfinite(eps_add)) throw ConstraintViolation("build_additive: eps_add must be > 0");
    if (!labels.empty() && labels.size() != s.size()) throw ConstraintViolation("build_additive: one label per curve");
    detail::require_uniform_dim(s);
    auto dd = dedup(s);
    if (s.size() >= 2 && dd.curves.size() < 2) throw ConstraintViolation("build_additive: all input curves are duplicates");
    IndexParams p;
    p.mode = IndexMode::additive;
    p.eps = eps;
    p.eps_prime = eps;
    p.eps_add = eps_add;
    p.eps_hat = eps_add / 2.0;
    return detail::assemble(std::move(p), cfg, std::move(dd), std::move(labels), s.size());
}

/// Index with the purely multiplicative guarantee (1+eps) d_F(q, s), eps in
/// (0, 1]. delta_min (the minimal pairwise Fréchet distance) is computed
/// exactly unless supplied.
inline FrechetIndex build_multiplicative(const std::vector<Curve>& s, double eps, const FrechetConfig& cfg = {},
                                         std::optional<double> delta_min = std::nullopt,
                                         std::vector<std::string> labels = {}) {
    cfg.validate();
    if (s.empty()) throw ConstraintViolation("build_multiplicative: empty input");
    if (!(eps > 0.0 && eps <= 1.0)) throw ConstraintViolation("build_multiplicative: eps must lie in (0, 1]");
    if (!labels.empty() && labels.size() != s.size()) throw ConstraintViolation("build_multiplicative: one label per curve");
    detail::require_uniform_dim(s);
    auto dd = dedup(s);
    IndexParams p;
    p.mode = IndexMode::multiplicative;
    p.eps = eps;
    p.eps_prime = eps / 4.0;
    if (dd.curves.size() < 2) {
        p.degenerate = true;
        const double lambda = dd.curves.front().max_edge_length();
        p.eps_add = lambda > 0.0 ? lambda : 1.0;
        p.eps_hat = p.eps_add / 2.0;
        return detail::assemble(std::move(p), cfg, std::move(dd), std::move(labels), s.size());
    }
    p.stats = dataset_stats(dd.curves, cfg, delta_min);
    p.eps_add = p.eps_prime * p.stats->delta_min;
    p.eps_hat = p.eps_add / 2.0;
    return detail::assemble(std::move(p), cfg, std::move(dd), std::move(labels), s.size());
}

inline QueryAnswer query(const FrechetIndex& idx, const Curve& q) { return idx.query(q); }

} // namespace frechet_ann
