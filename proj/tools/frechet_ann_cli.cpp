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
// frechet-ann command-line tool.
//
// Exit codes: 0 success, 1 unexpected failure, 2 unparsable input or
// arguments, 3 dimension mismatch, 4 violated parameter constraint.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frechet_ann/frechet_ann.hpp"
#include "frechet_ann/io.hpp"
#include "frechet_ann/serialize.hpp"

namespace fa = frechet_ann;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDim = 3;
constexpr int kExitConstraint = 4;

std::string fmt(double x) { return fa::detail::format_double(x); }

fa::FrechetConfig make_config(double tol, int max_iter) {
    fa::FrechetConfig cfg;
    cfg.tol_abs = tol;
    cfg.max_iter = max_iter;
    cfg.validate();
    return cfg;
}

const fa::CurveRecord& pick(const fa::CurveFile& f, const std::string& id, const std::string& path) {
    if (!id.empty()) return f.find(id);
    if (f.records.empty()) throw fa::ConstraintViolation("'" + path + "' holds no curves");
    return f.records.front();
}

json stats_json(const fa::DatasetStats& s) {
    return {{"n", s.n},
            {"k_max", s.k_max},
            {"lambda_max", s.lambda_max},
            {"delta_min", s.delta_min},
            {"delta_min_supplied", s.delta_min_supplied},
            {"bundledness", s.bundledness_defined() ? json(s.bundledness) : json(nullptr)},
            {"spread", s.spread},
            {"inverse_bundledness_over_spread", s.inverse_bundledness_over_spread()}};
}

// ---- dist ----

struct DistArgs {
    std::string a, b, id_a, id_b;
    bool discrete = false;
    double tol = 1e-7;
    int max_iter = 200;
};

int run_dist(const DistArgs& o) {
    const auto fa_file = fa::read_curve_file(o.a);
    const auto fb_file = fa::read_curve_file(o.b);
    const auto& p = pick(fa_file, o.id_a, o.a).curve;
    const auto& q = pick(fb_file, o.id_b, o.b).curve;
    if (o.discrete) {
        const double d = fa::discrete_frechet(p, q);
        std::cout << "discrete " << fmt(d) << "\n";
    } else {
        const auto cfg = make_config(o.tol, o.max_iter);
        const double d = fa::frechet_distance(p, q, cfg);
        std::cout << "continuous " << fmt(d) << " tol " << fmt(cfg.tol_abs) << "\n";
    }
    return 0;
}

// ---- stats ----

struct StatsArgs {
    std::string file;
    double tol = 1e-7;
    std::optional<double> delta_min;
    bool packedness = false;
};

int run_stats(const StatsArgs& o) {
    const auto f = fa::read_curve_file(o.file);
    const auto cfg = make_config(o.tol, 200);
    auto out = stats_json(fa::dataset_stats(f.curves(), cfg, o.delta_min));
    if (o.packedness) {
        json per = json::object();
        for (const auto& r : f.records) per[r.id] = fa::c_packedness_estimate(r.curve);
        out["c_packedness_lower_bound"] = per;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- build / query ----

struct BuildArgs {
    std::string file, out, mode = "mult";
    double eps = 0.5;
    std::optional<double> eps_add, delta_min;
    double tol = 1e-7;
};

int run_build(const BuildArgs& o) {
    const auto f = fa::read_curve_file(o.file);
    const auto cfg = make_config(o.tol, 200);
    std::optional<fa::FrechetIndex> idx;
    if (o.mode == "additive") {
        if (!o.eps_add) throw fa::ConstraintViolation("--eps-add is required in additive mode");
        idx.emplace(fa::build_additive(f.curves(), o.eps, *o.eps_add, cfg, f.ids()));
    } else {
        idx.emplace(fa::build_multiplicative(f.curves(), o.eps, cfg, o.delta_min, f.ids()));
    }
    fa::save_index(*idx, o.out);
    const auto& p = idx->params();
    std::cerr << "built " << to_string(p.mode) << " index over " << idx->originals().size() << " curves (eps_hat "
              << fmt(p.eps_hat) << ", mu " << p.mu << ", collisions " << idx->inner().merges().size() << ")"
              << (p.degenerate ? ", degenerate: fewer than 2 distinct curves" : "") << "\n";
    return 0;
}

struct QueryArgs {
    std::string index, file;
};

int run_query(const QueryArgs& o) {
    const auto idx = fa::load_index(o.index);
    const auto f = fa::read_curve_file(o.file);
    std::cout << "query answer distance snapped_index snapped_distance additive_bound slack_budget collisions "
                 "evaluations\n";
    for (const auto& r : f.records) {
        const auto a = idx.query(r.curve);
        const auto& c = a.certificate;
        const std::string answer = a.label.empty() ? std::to_string(a.source_index) : a.label;
        std::cout << r.id << ' ' << answer << ' ' << fmt(a.distance) << ' ' << c.snapped_index << ' '
                  << fmt(c.snapped_distance) << ' ' << fmt(c.additive_bound) << ' ' << fmt(c.slack_budget) << ' '
                  << c.collisions << ' ' << c.evaluations << "\n";
    }
    return 0;
}

// ---- gen-lower ----

struct GenLowerArgs {
    std::int64_t mu = 5, k = 9, m = 3;
    std::optional<std::size_t> limit;
    std::string out;
};

int run_gen_lower(const GenLowerArgs& o) {
    const auto fam = fa::generate_lower_bound_family(o.mu, o.k, o.m, o.limit);
    fa::CurveFile f;
    f.dim = 1;
    f.records.push_back({"C", fam.center});
    for (const auto& g : fam.members) f.records.push_back({g.name(), g.curve});
    if (o.out.empty() || o.out == "-") fa::write_curve_file(std::cout, f);
    else fa::write_curve_file(o.out, f);
    std::cerr << "members " << fam.members.size() << " of " << fam.total_tuples << " tuples, skipped " << fam.skipped
              << "\n";
    return 0;
}

// ---- doubling ----

struct DoublingArgs {
    std::string file, center_id;
    double r = 0.5, sep = 0.25, tol = 1e-7;
    std::optional<std::uint64_t> seed;
};

int run_doubling(const DoublingArgs& o) {
    const auto f = fa::read_curve_file(o.file);
    const auto& center = pick(f, o.center_id, o.file);
    const auto rep = fa::packing_estimate(f.curves(), center.curve, o.r, o.sep, make_config(o.tol, 200), o.seed);
    json kept = json::array();
    for (auto i : rep.kept) kept.push_back(f.records[i].id);
    std::cout << json{{"center", center.id},
                      {"radius", rep.radius},
                      {"net_separation", rep.net_separation},
                      {"in_ball", rep.in_ball},
                      {"packing_count", rep.packing_count},
                      {"log2_count", rep.log2_count},
                      {"kept", kept}}
                     .dump(2)
              << "\n";
    return 0;
}

// ---- bench ----

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::vector<std::size_t> n{100, 400, 1600};
    std::size_t k = 4;
    std::size_t d = 2;
    std::vector<double> eps{0.5};
    std::string mode = "mult";
    double tolerance = 1e-7;
    std::string generator = "random-walk";
    double extent = 10.0;
    double step = 1.0;
    std::size_t queries = 50;
    double eps_add = 0.1;
    bool check = false;

    void validate() const {
        if (n.empty() || eps.empty()) throw fa::ConstraintViolation("bench: n and eps need at least one value");
        for (auto v : n)
            if (v < 2) throw fa::ConstraintViolation("bench: n must be >= 2");
        if (k < 1 || d < 1) throw fa::ConstraintViolation("bench: k and d must be >= 1");
        if (mode != "mult" && mode != "additive") throw fa::ConstraintViolation("bench: mode must be mult or additive");
        if (generator != "random-walk" && generator != "points")
            throw fa::ConstraintViolation("bench: generator must be random-walk or points");
        if (!(extent > 0.0) || !(step > 0.0)) throw fa::ConstraintViolation("bench: extent and step must be > 0");
        if (queries < 1) throw fa::ConstraintViolation("bench: queries must be >= 1");
    }
};

ExperimentConfig read_experiment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fa::ParseError("cannot open '" + path + "'");
    ExperimentConfig c;
    try {
        json j;
        in >> j;
        auto list = [&](const char* key, auto& dst) {
            if (!j.contains(key)) return;
            using V = typename std::decay_t<decltype(dst)>::value_type;
            dst = j[key].is_array() ? j[key].template get<std::vector<V>>() : std::vector<V>{j[key].template get<V>()};
        };
        list("n", c.n);
        list("eps", c.eps);
        c.seed = j.value("seed", c.seed);
        c.k = j.value("k", c.k);
        c.d = j.value("d", c.d);
        c.mode = j.value("mode", c.mode);
        c.tolerance = j.value("tolerance", c.tolerance);
        c.generator = j.value("generator", c.generator);
        c.queries = j.value("queries", c.queries);
        c.eps_add = j.value("eps_add", c.eps_add);
        c.check = j.value("check", c.check);
        if (j.contains("generator_params")) {
            c.extent = j["generator_params"].value("extent", c.extent);
            c.step = j["generator_params"].value("step", c.step);
        }
    } catch (const json::exception& e) {
        throw fa::ParseError(std::string("bad experiment config: ") + e.what());
    }
    return c;
}

std::vector<fa::Curve> generate(const ExperimentConfig& c, std::uint64_t seed, std::size_t n) {
    if (c.generator == "points") return fa::uniform_point_dataset(seed, n, c.d, c.extent);
    return fa::random_walk_dataset(seed, n, c.d, 1, c.k, c.extent, c.step);
}

int run_bench(const ExperimentConfig& c) {
    c.validate();
    const auto cfg = make_config(c.tolerance, 200);
    std::cout << "generator,mode,n,k,d,eps,seed,build_seconds,query_seconds_mean,evaluations_mean,evaluations_max,"
                 "tree_height,violations\n";
    using clock = std::chrono::steady_clock;
    for (auto n : c.n) {
        const auto data = generate(c, c.seed, n);
        const auto queries = generate(c, c.seed + 0x9e3779b9ULL, c.queries);
        for (double eps : c.eps) {
            const auto t0 = clock::now();
            const auto idx = c.mode == "additive" ? fa::build_additive(data, eps, c.eps_add, cfg)
                                                  : fa::build_multiplicative(data, eps, cfg);
            const double build_s = std::chrono::duration<double>(clock::now() - t0).count();
            double query_s = 0, evals = 0;
            std::size_t evals_max = 0, violations = 0;
            const auto oracle = fa::frechet_oracle(cfg);
            for (const auto& q : queries) {
                const auto t1 = clock::now();
                const auto a = idx.query(q);
                query_s += std::chrono::duration<double>(clock::now() - t1).count();
                evals += static_cast<double>(a.certificate.evaluations);
                evals_max = std::max(evals_max, a.certificate.evaluations);
                if (c.check && a.distance > idx.guarantee(fa::brute_force_nn(data, q, oracle).distance)) ++violations;
            }
            const double nq = static_cast<double>(queries.size());
            std::cout << c.generator << ',' << c.mode << ',' << n << ',' << c.k << ',' << c.d << ',' << fmt(eps) << ','
                      << c.seed << ',' << fmt(build_s) << ',' << fmt(query_s / nq) << ',' << fmt(evals / nq) << ','
                      << evals_max << ',' << idx.tree().height() << ',' << (c.check ? std::to_string(violations) : "")
                      << "\n";
        }
    }
    return 0;
}

// ---- plot ----

struct PlotArgs {
    std::string csv, out;
};

// Regroups a bench CSV into gnuplot data blocks, one per eps, with columns
// log2(n) and mean evaluations.
int run_plot(const PlotArgs& o) {
    std::ifstream in(o.csv);
    if (!in) throw fa::ParseError("cannot open '" + o.csv + "'");
    std::string line;
    if (!std::getline(in, line)) throw fa::ParseError("empty bench CSV");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) header.push_back(cell);
    }
    auto column = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw fa::ParseError("bench CSV lacks column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto cn = column("n"), ce = column("eps"), cv = column("evaluations_mean"), cq = column("query_seconds_mean");
    std::map<std::string, std::vector<std::vector<std::string>>> blocks;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (cells.size() < header.size() - 1) throw fa::ParseError("short bench CSV row: " + line);
        blocks[cells[ce]].push_back(cells);
    }
    std::ofstream out(o.out);
    if (!out) throw std::runtime_error("cannot write '" + o.out + "'");
    for (const auto& [eps, rows] : blocks) {
        out << "# eps " << eps << "\n# log2_n evaluations_mean query_seconds_mean\n";
        for (const auto& r : rows) {
            const double n = fa::detail::parse_number<double>(r[cn], "n");
            out << fmt(std::log2(n)) << ' ' << r[cv] << ' ' << r[cq] << "\n";
        }
        out << "\n\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate nearest-neighbour search for polygonal curves under the Fréchet distance"};
    app.require_subcommand(1);

    DistArgs dist;
    auto* c_dist = app.add_subcommand("dist", "Fréchet distance between two curves");
    c_dist->add_option("file_a", dist.a, "curve file")->required();
    c_dist->add_option("file_b", dist.b, "curve file")->required();
    auto* f_disc = c_dist->add_flag("--discrete", dist.discrete, "discrete Fréchet distance");
    c_dist->add_flag("--continuous", "continuous Fréchet distance (default)")->excludes(f_disc);
    c_dist->add_option("--tol", dist.tol, "absolute bisection tolerance");
    c_dist->add_option("--max-iter", dist.max_iter, "bisection step cap");
    c_dist->add_option("--id-a", dist.id_a, "record of file_a (default: first)");
    c_dist->add_option("--id-b", dist.id_b, "record of file_b (default: first)");

    StatsArgs stats;
    auto* c_stats = app.add_subcommand("stats", "dataset statistics as JSON");
    c_stats->add_option("file", stats.file)->required();
    c_stats->add_option("--tol", stats.tol);
    c_stats->add_option("--delta-min", stats.delta_min, "known min pairwise distance, skips the O(n^2) pass");
    c_stats->add_flag("--packedness", stats.packedness, "add per-curve c-packedness lower bounds");

    BuildArgs build;
    auto* c_build = app.add_subcommand("build", "build and save an index");
    c_build->add_option("file", build.file)->required();
    c_build->add_option("--eps", build.eps, "multiplicative error");
    c_build->add_option("--mode", build.mode)->check(CLI::IsMember({"additive", "mult"}));
    c_build->add_option("--eps-add", build.eps_add, "additive error (additive mode)");
    c_build->add_option("--delta-min", build.delta_min, "known min pairwise distance (mult mode)");
    c_build->add_option("--out", build.out, "index path")->required();
    c_build->add_option("--tol", build.tol);

    QueryArgs query;
    auto* c_query = app.add_subcommand("query", "answer every curve of a file against an index");
    c_query->add_option("index", query.index)->required();
    c_query->add_option("curves", query.file)->required();

    GenLowerArgs gen;
    auto* c_gen = app.add_subcommand("gen-lower", "write the zig-zag lower-bound family");
    c_gen->add_option("--mu", gen.mu);
    c_gen->add_option("--k", gen.k);
    c_gen->add_option("--m", gen.m);
    c_gen->add_option("--limit", gen.limit);
    c_gen->add_option("--out", gen.out, "output path ('-' for stdout)");

    DoublingArgs dbl;
    auto* c_dbl = app.add_subcommand("doubling", "greedy packing count inside a Fréchet ball");
    c_dbl->add_option("file", dbl.file)->required();
    c_dbl->add_option("--center-id", dbl.center_id, "center record (default: first)");
    c_dbl->add_option("--r", dbl.r);
    c_dbl->add_option("--sep", dbl.sep);
    c_dbl->add_option("--seed", dbl.seed, "shuffle scan order");
    c_dbl->add_option("--tol", dbl.tol);

    ExperimentConfig bench;
    std::string bench_config;
    auto* c_bench = app.add_subcommand("bench", "build/query timings and evaluation counts as CSV");
    c_bench->add_option("--config", bench_config, "JSON experiment config; flags below override it");
    c_bench->add_option("--seed", bench.seed);
    c_bench->add_option("--n", bench.n)->delimiter(',');
    c_bench->add_option("--k", bench.k);
    c_bench->add_option("--d", bench.d);
    c_bench->add_option("--eps", bench.eps)->delimiter(',');
    c_bench->add_option("--mode", bench.mode);
    c_bench->add_option("--eps-add", bench.eps_add);
    c_bench->add_option("--tol", bench.tolerance);
    c_bench->add_option("--generator", bench.generator);
    c_bench->add_option("--queries", bench.queries);
    c_bench->add_flag("--check", bench.check, "count guarantee violations against brute force");

    PlotArgs plot;
    auto* c_plot = app.add_subcommand("plot", "gnuplot data from a bench CSV");
    c_plot->add_option("csv", plot.csv)->required();
    c_plot->add_option("--out", plot.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*c_dist) return run_dist(dist);
        if (*c_stats) return run_stats(stats);
        if (*c_build) return run_build(build);
        if (*c_query) return run_query(query);
        if (*c_gen) return run_gen_lower(gen);
        if (*c_dbl) return run_doubling(dbl);
        if (*c_bench) {
            if (!bench_config.empty()) {
                // config file first, then re-apply explicit flags on top
                auto base = read_experiment(bench_config);
                if (c_bench->count("--seed")) base.seed = bench.seed;
                if (c_bench->count("--n")) base.n = bench.n;
                if (c_bench->count("--k")) base.k = bench.k;
                if (c_bench->count("--d")) base.d = bench.d;
                if (c_bench->count("--eps")) base.eps = bench.eps;
                if (c_bench->count("--mode")) base.mode = bench.mode;
                if (c_bench->count("--eps-add")) base.eps_add = bench.eps_add;
                if (c_bench->count("--tol")) base.tolerance = bench.tolerance;
                if (c_bench->count("--generator")) base.generator = bench.generator;
                if (c_bench->count("--queries")) base.queries = bench.queries;
                if (c_bench->count("--check")) base.check = bench.check;
                bench = base;
            }
            return run_bench(bench);
        }
        if (*c_plot) return run_plot(plot);
    } catch (const fa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fa::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDim;
    } catch (const fa::ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const fa::ToleranceUnreachable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
