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

// Text curve files. First line "d n"; then one record per curve:
//   id k x11 x12 ... x1d x21 ... xkd
// Tokens are whitespace separated; coordinates are written in the shortest
// decimal form that round-trips to the same double.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "geometry.hpp"

namespace frechet_ann {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CurveRecord {
    std::string id;
    Curve curve;
};

struct CurveFile {
    std::size_t dim = 0;
    std::vector<CurveRecord> records;

    std::vector<Curve> curves() const {
        std::vector<Curve> out;
        out.reserve(records.size());
        for (const auto& r : records) out.push_back(r.curve);
        return out;
    }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        out.reserve(records.size());
        for (const auto& r : records) out.push_back(r.id);
        return out;
    }

    const CurveRecord& find(const std::string& id) const {
        for (const auto& r : records)
            if (r.id == id) return r;
        throw ConstraintViolation("no curve with id '" + id + "'");
    }
};

namespace detail {

class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::string next(const char* what) {
        std::string tok;
        if (!(in_ >> tok)) throw ParseError(std::string("unexpected end of input, expected ") + what);
        return tok;
    }

    bool exhausted() {
        std::string tok;
        return !(in_ >> tok);
    }

private:
    std::istream& in_;
};

template <typename N>
N parse_number(const std::string& tok, const char* what) {
    N value{};
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ParseError("invalid " + std::string(what) + ": '" + tok + "'");
    return value;
}

inline std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

} // namespace detail

inline CurveFile read_curve_file(std::istream& in) {
    detail::TokenReader r(in);
    CurveFile f;
    f.dim = detail::parse_number<std::size_t>(r.next("dimension"), "dimension");
    const auto n = detail::parse_number<std::size_t>(r.next("curve count"), "curve count");
    if (f.dim == 0) throw ParseError("dimension must be >= 1");
    std::set<std::string> seen;
    for (std::size_t c = 0; c < n; ++c) {
        CurveRecord rec;
        rec.id = r.next("curve id");
        if (!seen.insert(rec.id).second) throw ParseError("duplicate curve id '" + rec.id + "'");
        const auto k = detail::parse_number<std::size_t>(r.next("vertex count"), "vertex count");
        if (k == 0) throw ParseError("curve '" + rec.id + "' has no vertices");
        std::vector<double> flat(k * f.dim);
        for (auto& x : flat) x = detail::parse_number<double>(r.next("coordinate"), "coordinate");
        try {
            rec.curve = Curve(f.dim, std::move(flat));
        } catch (const ConstraintViolation& e) {
            throw ParseError("curve '" + rec.id + "': " + e.what());
        }
        f.records.push_back(std::move(rec));
    }
    if (!r.exhausted()) throw ParseError("trailing data after " + std::to_string(n) + " curves");
    return f;
}

inline CurveFile read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_curve_file(in);
}

inline void write_curve_file(std::ostream& out, const CurveFile& f) {
    out << f.dim << ' ' << f.records.size() << '\n';
    for (const auto& rec : f.records) {
        if (rec.curve.dim() != f.dim) throw DimensionMismatch(f.dim, rec.curve.dim());
        out << rec.id << ' ' << rec.curve.size();
        for (double x : rec.curve.flat()) out << ' ' << detail::format_double(x);
        out << '\n';
    }
}

inline void write_curve_file(const std::string& path, const CurveFile& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_curve_file(out, f);
}

} // namespace frechet_ann
