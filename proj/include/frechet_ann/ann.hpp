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

// (1+eps)-approximate nearest neighbour search over an arbitrary metric
// oracle, backed by a compressed net tree (cover tree), plus the exhaustive
// reference scan and the projection-based wrapper for nearly-doubling spaces.
//
// Tree invariants, with radius(l) = base^l and top(v) the highest level at
// which node v exists (it exists at every level below as its own child):
//   covering   - a node c with parent p satisfies d(p, c) <= radius(top(c)+1)
//   separation - distinct nodes u, v satisfy d(u, v) > radius(min(top(u), top(v)))
//   nesting    - top(c) < top(parent(c))
// Every node's descendants then lie within base^(top+1) / (base-1) of it.

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace frechet_ann {

/// Distance callback plus a bound on its additive error.
template <typename T>
struct MetricOracle {
    std::function<double(const T&, const T&)> distance;
    double tolerance = 0.0;
};

struct NeighborResult {
    std::size_t index = 0;
    double distance = 0.0;
    std::size_t evaluations = 0;
};

struct AuditReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Thrown when the oracle's distances break the tree invariants.
class NonMetricOracle : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
class NetTree {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    /// Node i stores item i.
    struct Node {
        int level = 0;
        std::size_t parent = npos;
        std::size_t depth = 0;
        std::vector<std::size_t> children;
    };

    explicit NetTree(MetricOracle<T> oracle, double base = 2.0) : oracle_(std::move(oracle)), base_(base) {
        if (!(base_ > 1.0)) throw ConstraintViolation("NetTree: base must exceed 1");
        if (!(oracle_.tolerance >= 0.0)) throw ConstraintViolation("NetTree: oracle tolerance must be >= 0");
    }

    /// Rebuilds a tree from stored topology (levels and parents in node order).
    static NetTree from_topology(MetricOracle<T> oracle, double base, std::vector<T> items, const std::vector<int>& levels,
                                 const std::vector<std::size_t>& parents) {
        if (items.size() != levels.size() || items.size() != parents.size())
            throw ConstraintViolation("NetTree: topology arrays differ in length");
        NetTree t(std::move(oracle), base);
        t.items_ = std::move(items);
        t.nodes_.resize(t.items_.size());
        for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
            auto& n = t.nodes_[i];
            n.level = levels[i];
            n.parent = parents[i];
            if (i == 0) {
                if (n.parent != npos) throw ConstraintViolation("NetTree: node 0 must be the root");
                continue;
            }
            if (n.parent >= i) throw ConstraintViolation("NetTree: parent must precede child");
            n.depth = t.nodes_[n.parent].depth + 1;
            t.nodes_[n.parent].children.push_back(i);
            t.height_ = std::max(t.height_, n.depth);
        }
        return t;
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<T>& items() const { return items_; }
    const T& item(std::size_t i) const { return items_[i]; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const MetricOracle<T>& oracle() const { return oracle_; }
    double base() const { return base_; }
    std::size_t height() const { return height_; }

    double radius(int level) const { return std::pow(base_, level); }
    double subtree_radius(int level) const { return std::pow(base_, level + 1) / (base_ - 1.0); }

    /// Smallest integer level l with radius(l) >= d (d > 0).
    int level_for(double d) const {
        int l = static_cast<int>(std::ceil(std::log(d) / std::log(base_)));
        while (radius(l) < d) ++l;
        while (radius(l - 1) >= d) --l;
        return l;
    }

    /// Inserts `x`. When an indexed item lies within 2 * tolerance of `x`,
    /// nothing is inserted and that item's index is returned.
    std::optional<std::size_t> insert(T x) {
        if (items_.empty()) {
            items_.push_back(std::move(x));
            nodes_.push_back(Node{});
            return std::nullopt;
        }
        const double dup = 2.0 * oracle_.tolerance;
        const double slack = chain_slack();
        const double d_root = dist(x, items_[0]);
        if (d_root <= dup) return 0;
        if (d_root > radius(nodes_[0].level)) nodes_[0].level = level_for(d_root);

        // Nearest node that covers x, i.e. d(x, v) <= radius(top(v)).
        std::size_t cover = 0;
        double cover_d = d_root;
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t c : nodes_[v].children) {
                const double dc = dist(x, items_[c]);
                if (dc <= dup) return c;
                const int lc = nodes_[c].level;
                if (dc <= radius(lc) && (dc < cover_d || (dc == cover_d && c < cover))) {
                    cover = c;
                    cover_d = dc;
                }
                const double reach = subtree_radius(lc) + slack;
                if (nodes_[c].children.empty()) continue;
                if (dc > std::max(radius(lc - 1), dup) + reach) continue;
                if (dc - reach > cover_d) continue;
                stack.push_back(c);
            }
        }

        const int level = level_for(cover_d) - 1;
        if (level >= nodes_[cover].level) throw NonMetricOracle("NetTree: covering node below insertion level");
        Node n;
        n.level = level;
        n.parent = cover;
        n.depth = nodes_[cover].depth + 1;
        height_ = std::max(height_, n.depth);
        nodes_[cover].children.push_back(items_.size());
        items_.push_back(std::move(x));
        nodes_.push_back(std::move(n));
        return std::nullopt;
    }

    /// (1+eps)-approximate nearest neighbour of q: the returned distance is at
    /// most (1+eps) * min_i d(q, item_i) + 2 * tolerance. Candidate sets are
    /// refined level by level; the descent stops once the remaining subtree
    /// radius can no longer hide a sufficiently closer item.
    NeighborResult query(const T& q, double eps) const {
        if (items_.empty()) throw ConstraintViolation("ann_query: empty tree");
        if (!(eps >= 0.0)) throw ConstraintViolation("ann_query: eps must be >= 0");
        const double tol = oracle_.tolerance;
        const double slack = chain_slack();
        NeighborResult best;
        std::size_t evals = 0;
        auto eval = [&](std::size_t i) {
            ++evals;
            return oracle_.distance(q, items_[i]);
        };
        auto improve = [&](std::size_t i, double d) {
            if (d < best.distance || (d == best.distance && i < best.index)) {
                best.distance = d;
                best.index = i;
            }
        };

        struct Candidate {
            std::size_t node;
            double dist;
        };
        best.index = 0;
        best.distance = eval(0);
        std::vector<Candidate> cands{{0, best.distance}};
        int level = nodes_[0].level;
        std::vector<Candidate> next_cands;
        while (true) {
            if (best.distance <= 2.0 * tol) break;
            int next = INT_MIN;
            for (const auto& c : cands)
                for (std::size_t ch : nodes_[c.node].children)
                    if (nodes_[ch].level < level) next = std::max(next, nodes_[ch].level);
            if (next == INT_MIN) break;

            // Candidates now act as level next+1 nodes.
            const double hidden = subtree_radius(next + 1) + slack;
            if (hidden * (1.0 + eps) <= eps * best.distance + 2.0 * tol) break;

            next_cands.clear();
            for (const auto& c : cands) {
                next_cands.push_back(c);
                for (std::size_t ch : nodes_[c.node].children) {
                    if (nodes_[ch].level != next) continue;
                    const double d = eval(ch);
                    improve(ch, d);
                    next_cands.push_back({ch, d});
                }
            }
            level = next;
            const double keep = best.distance + subtree_radius(level) + slack;
            cands.clear();
            for (const auto& c : next_cands)
                if (c.dist <= keep) cands.push_back(c);
        }
        best.evaluations = evals;
        return best;
    }

    /// Exhaustive O(n^2) check of covering, separation and nesting.
    AuditReport audit() const {
        AuditReport r;
        auto fail = [&](std::string msg) {
            r.ok = false;
            r.violations.push_back(std::move(msg));
        };
        for (std::size_t i = 1; i < nodes_.size(); ++i) {
            const auto& n = nodes_[i];
            if (n.parent == npos || n.parent >= nodes_.size()) {
                fail("node " + std::to_string(i) + " has no parent");
                continue;
            }
            if (n.level >= nodes_[n.parent].level)
                fail("nesting: node " + std::to_string(i) + " not below its parent");
            if (oracle_.distance(items_[n.parent], items_[i]) > radius(n.level + 1))
                fail("covering: node " + std::to_string(i) + " too far from its parent");
        }
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
                const int l = std::min(nodes_[i].level, nodes_[j].level);
                if (!(oracle_.distance(items_[i], items_[j]) > radius(l)))
                    fail("separation: nodes " + std::to_string(i) + "," + std::to_string(j) + " at level " +
                         std::to_string(l));
            }
        return r;
    }

private:
    double dist(const T& a, const T& b) const { return oracle_.distance(a, b); }

    // Additive error accumulated along a root-to-leaf chain of measured
    // distances: 3 * tolerance per triangle step.
    double chain_slack() const { return 3.0 * oracle_.tolerance * static_cast<double>(height_ + 2); }

    MetricOracle<T> oracle_;
    double base_;
    std::vector<T> items_;
    std::vector<Node> nodes_;
    std::size_t height_ = 0;
};

/// Builds a tree by incremental insertion. Items must be pairwise more than
/// 2 * tolerance apart; a near-duplicate raises std::invalid_argument.
template <typename T>
NetTree<T> build_net_tree(std::vector<T> items, MetricOracle<T> oracle, double base = 2.0, bool audit = false) {
    NetTree<T> tree(std::move(oracle), base);
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (auto dup = tree.insert(std::move(items[i])))
            throw ConstraintViolation("build_net_tree: item " + std::to_string(i) + " duplicates item " +
                                      std::to_string(*dup));
    }
    if (audit) {
        auto report = tree.audit();
        if (!report.ok) throw NonMetricOracle("build_net_tree: " + report.violations.front());
    }
    return tree;
}

template <typename T>
NeighborResult ann_query(const NetTree<T>& tree, const T& q, double eps) {
    return tree.query(q, eps);
}

/// Exact nearest neighbour by linear scan; ties go to the lowest index.
template <typename T>
NeighborResult brute_force_nn(const std::vector<T>& items, const T& q, const MetricOracle<T>& oracle) {
    if (items.empty()) throw ConstraintViolation("brute_force_nn: empty item set");
    NeighborResult best{0, std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < items.size(); ++i) {
        const double d = oracle.distance(q, items[i]);
        ++best.evaluations;
        if (d < best.distance) {
            best.distance = d;
            best.index = i;
        }
    }
    return best;
}

/// A map into a subspace of bounded doubling dimension moving no item by more
/// than `bound`. The subspace's doubling dimension and the projection cost are
/// analytical quantities and are not represented at runtime.
template <typename T>
struct NearlyDoublingProjection {
    std::function<T(const T&)> project;
    double bound = 0.0;
};

/// Net tree over projected items with the inverse map back to the originals.
/// For every s in S an answer s_hat satisfies
///   d(q, s_hat) <= (1+eps) d(q, s) + (2+eps) max_s d(s, project(s)) + tolerance terms.
template <typename T>
class NearlyDoublingIndex {
public:
    struct Answer {
        std::size_t original = 0;       ///< index into the input set
        double distance = 0.0;          ///< d(q, original)
        std::size_t representative = 0; ///< index of the projected item in the tree
        double representative_distance = 0.0;
        std::size_t evaluations = 0;
    };

    struct Merge {
        std::size_t original;
        std::size_t kept;
    };

    NearlyDoublingIndex(std::vector<T> originals, const NearlyDoublingProjection<T>& proj, MetricOracle<T> oracle,
                        double base = 2.0)
        : originals_(std::move(originals)), tree_(oracle, base), bound_(proj.bound) {
        if (originals_.empty()) throw ConstraintViolation("NearlyDoublingIndex: empty input");
        if (!std::isfinite(proj.bound) || proj.bound < 0.0)
            throw ConstraintViolation("NearlyDoublingIndex: projection bound must be finite and >= 0");
        for (std::size_t i = 0; i < originals_.size(); ++i) {
            T image = proj.project(originals_[i]);
            const double moved = oracle.distance(originals_[i], image);
            measured_bound_ = std::max(measured_bound_, moved);
            if (moved > proj.bound + oracle.tolerance)
                throw ConstraintViolation("NearlyDoublingIndex: projection moved item " + std::to_string(i) +
                                          " beyond its bound");
            if (auto kept = tree_.insert(std::move(image))) {
                merges_.push_back({i, back_map_[*kept]});
            } else {
                back_map_.push_back(i);
            }
        }
    }

    /// Restores an index from stored parts.
    NearlyDoublingIndex(std::vector<T> originals, NetTree<T> tree, std::vector<std::size_t> back_map,
                        std::vector<Merge> merges, double bound, double measured_bound)
        : originals_(std::move(originals)),
          tree_(std::move(tree)),
          back_map_(std::move(back_map)),
          merges_(std::move(merges)),
          bound_(bound),
          measured_bound_(measured_bound) {
        if (back_map_.size() != tree_.size()) throw ConstraintViolation("NearlyDoublingIndex: back map size mismatch");
        for (auto b : back_map_)
            if (b >= originals_.size()) throw ConstraintViolation("NearlyDoublingIndex: back map out of range");
    }

    Answer query(const T& q, double eps) const {
        const auto hit = tree_.query(q, eps);
        Answer a;
        a.representative = hit.index;
        a.representative_distance = hit.distance;
        a.original = back_map_[hit.index];
        a.distance = tree_.oracle().distance(q, originals_[a.original]);
        a.evaluations = hit.evaluations + 1;
        return a;
    }

    const std::vector<T>& originals() const { return originals_; }
    const NetTree<T>& tree() const { return tree_; }
    const std::vector<std::size_t>& back_map() const { return back_map_; }
    const std::vector<Merge>& merges() const { return merges_; }
    double bound() const { return bound_; }
    double measured_bound() const { return measured_bound_; }

private:
    std::vector<T> originals_;
    NetTree<T> tree_;
    std::vector<std::size_t> back_map_;
    std::vector<Merge> merges_;
    double bound_ = 0.0;
    double measured_bound_ = 0.0;
};

/// Builds a NearlyDoublingIndex and returns a query closure bound to `eps`.
template <typename T>
std::function<typename NearlyDoublingIndex<T>::Answer(const T&)>
generic_nearly_doubling_ann(std::vector<T> items, const NearlyDoublingProjection<T>& proj, MetricOracle<T> oracle,
                            double eps) {
    auto index = std::make_shared<const NearlyDoublingIndex<T>>(std::move(items), proj, std::move(oracle));
    return [index, eps](const T& q) { return index->query(q, eps); };
}

} // namespace frechet_ann
