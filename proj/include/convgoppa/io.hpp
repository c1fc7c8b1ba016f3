/*
   Copyright 2026 The convgoppa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONVGOPPA_IO_HPP
#define CONVGOPPA_IO_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "convgoppa/cgc.hpp"
#include "convgoppa/code.hpp"
#include "convgoppa/poly.hpp"
#include "convgoppa/polymat.hpp"

namespace convgoppa {

namespace detail {

struct KeyLine {
    std::size_t line;
    std::string value;
};

[[noreturn]] inline void fail_at(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

// Splits "key: value" lines, skipping blanks and '#' comments.
inline std::vector<std::pair<std::string, KeyLine>> key_lines(std::string_view text) {
    std::vector<std::pair<std::string, KeyLine>> out;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        const auto line = trim_view(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) fail_at(lineno, "expected 'key: value'");
        out.push_back({std::string(trim_view(line.substr(0, colon))),
                       KeyLine{lineno, std::string(trim_view(line.substr(colon + 1)))}});
    }
    return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = s.find(sep, start);
        out.push_back(trim_view(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

template <class F>
auto at_line(std::size_t line, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::NotPrime ||
            e.kind() == ErrorKind::Reducible || e.kind() == ErrorKind::TooLarge) {
            std::string msg = e.what();
            if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
            fail_at(line, msg);
        }
        throw;
    }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
}

/// Code file: `field:`, `shape: k x n`, then k `row:` lines.
inline PolyMatrix parse_code_file(std::string_view text) {
    const auto lines = detail::key_lines(text);
    if (lines.empty()) throw Error(ErrorKind::Parse, "line 1: empty code file");
    if (lines[0].first != "field") detail::fail_at(lines[0].second.line, "expected 'field:'");
    const FieldPtr field = detail::at_line(lines[0].second.line, [&] { return parse_field_spec(lines[0].second.value); });
    if (lines.size() < 2 || lines[1].first != "shape")
        detail::fail_at(lines.size() < 2 ? lines[0].second.line + 1 : lines[1].second.line, "expected 'shape: k x n'");
    const auto& sh = lines[1].second;
    const auto parts = detail::split(sh.value, 'x');
    std::uint64_t k = 0, n = 0;
    if (parts.size() != 2 || !detail::parse_uint(parts[0], k) || !detail::parse_uint(parts[1], n) || k == 0 || n == 0)
        detail::fail_at(sh.line, "bad shape '" + sh.value + "'");
    if (lines.size() != 2 + k)
        detail::fail_at(lines.back().second.line, "expected " + std::to_string(k) + " row lines, found " +
                                                      std::to_string(lines.size() - 2));
    std::vector<FqPoly> data;
    for (std::size_t r = 0; r < k; ++r) {
        const auto& [key, kl] = lines[2 + r];
        if (key != "row") detail::fail_at(kl.line, "expected 'row:'");
        const auto cells = detail::split(kl.value, ',');
        if (cells.size() != n)
            detail::fail_at(kl.line, "expected " + std::to_string(n) + " entries, found " + std::to_string(cells.size()));
        for (auto c : cells) data.push_back(detail::at_line(kl.line, [&] { return parse_poly(field, c); }));
    }
    return PolyMatrix(field, k, n, std::move(data));
}

inline std::string format_code_file(const PolyMatrix& g) {
    std::string s = "field: " + g.field()->spec() + "\n";
    s += "shape: " + std::to_string(g.rows()) + " x " + std::to_string(g.cols()) + "\n";
    for (std::size_t r = 0; r < g.rows(); ++r) {
        s += "row: ";
        for (std::size_t c = 0; c < g.cols(); ++c) s += (c ? ", " : "") + format_poly(g.at(r, c));
        s += "\n";
    }
    return s;
}

enum class ScanDomainKind { None, All, LeadingNonzero, Explicit };

/// CGC file: `field:`, `points: (a,b), ...`, optional `lambda:`, `delta:`
/// and `scan: all | leading-nonzero | t0; t1; ...` (tuples comma-separated).
struct CgcFile {
    FieldPtr field;
    std::vector<Point> points;
    std::optional<std::vector<elem_t>> lambda;
    std::size_t delta = 0;
    ScanDomainKind scan = ScanDomainKind::None;
    std::vector<std::vector<elem_t>> scan_tuples;

    CgcSpec spec() const {
        if (!lambda) throw Error(ErrorKind::InvalidArgument, "the file has no lambda line");
        return CgcSpec{field, points, *lambda};
    }

    /// Projective tuples selected by the scan line (all of P^delta if none).
    std::vector<std::vector<elem_t>> scan_domain() const {
        if (scan == ScanDomainKind::Explicit) return scan_tuples;
        auto all = projective_points(*field, delta);
        if (scan == ScanDomainKind::LeadingNonzero) std::erase_if(all, [](const auto& t) { return t.back() == 0; });
        return all;
    }
};

inline CgcFile parse_cgc_file(std::string_view text) {
    const auto lines = detail::key_lines(text);
    std::map<std::string, detail::KeyLine> kv;
    for (const auto& [k, v] : lines) {
        if (k != "field" && k != "points" && k != "lambda" && k != "delta" && k != "scan")
            detail::fail_at(v.line, "unknown key '" + k + "'");
        if (!kv.emplace(k, v).second) detail::fail_at(v.line, "duplicate key '" + k + "'");
    }
    const std::size_t last = lines.empty() ? 1 : lines.back().second.line;
    auto need = [&](const char* k) -> const detail::KeyLine& {
        auto it = kv.find(k);
        if (it == kv.end()) detail::fail_at(last, std::string("missing '") + k + ":' line");
        return it->second;
    };
    CgcFile out;
    const auto& fl = need("field");
    out.field = detail::at_line(fl.line, [&] { return parse_field_spec(fl.value); });
    const FiniteField& f = *out.field;

    const auto& pl = need("points");
    std::string_view rest = pl.value;
    while (true) {
        rest = detail::trim_view(rest);
        if (rest.empty() || rest.front() != '(') detail::fail_at(pl.line, "expected '(a,b)'");
        const auto close = rest.find(')');
        if (close == std::string_view::npos) detail::fail_at(pl.line, "unclosed '('");
        const auto ab = detail::split(rest.substr(1, close - 1), ',');
        if (ab.size() != 2) detail::fail_at(pl.line, "a point needs two coordinates");
        out.points.push_back(detail::at_line(pl.line, [&] { return Point{f.parse(ab[0]), f.parse(ab[1])}; }));
        rest = detail::trim_view(rest.substr(close + 1));
        if (rest.empty()) break;
        if (rest.front() != ',') detail::fail_at(pl.line, "expected ',' between points");
        rest.remove_prefix(1);
    }

    std::optional<std::size_t> delta;
    if (auto it = kv.find("lambda"); it != kv.end()) {
        std::vector<elem_t> l;
        for (auto c : detail::split(it->second.value, ','))
            l.push_back(detail::at_line(it->second.line, [&] { return f.parse(c); }));
        delta = l.size() - 1;
        out.lambda = std::move(l);
    }
    if (auto it = kv.find("delta"); it != kv.end()) {
        std::uint64_t d = 0;
        if (!detail::parse_uint(it->second.value, d)) detail::fail_at(it->second.line, "bad delta");
        if (delta && *delta != d) detail::fail_at(it->second.line, "delta disagrees with the lambda line");
        delta = static_cast<std::size_t>(d);
    }
    if (!delta) detail::fail_at(last, "need a 'lambda:' or 'delta:' line");
    out.delta = *delta;
    if (out.delta >= out.points.size()) detail::fail_at(pl.line, "delta must be smaller than the number of points");

    if (auto it = kv.find("scan"); it != kv.end()) {
        const auto& v = it->second.value;
        if (v == "all") {
            out.scan = ScanDomainKind::All;
        } else if (v == "leading-nonzero") {
            out.scan = ScanDomainKind::LeadingNonzero;
        } else {
            out.scan = ScanDomainKind::Explicit;
            for (auto t : detail::split(v, ';')) {
                std::vector<elem_t> tuple;
                for (auto c : detail::split(t, ','))
                    tuple.push_back(detail::at_line(it->second.line, [&] { return f.parse(c); }));
                if (tuple.size() != out.delta + 1)
                    detail::fail_at(it->second.line, "scan tuple has " + std::to_string(tuple.size()) +
                                                          " entries, expected " + std::to_string(out.delta + 1));
                out.scan_tuples.push_back(std::move(tuple));
            }
        }
    }
    return out;
}

inline std::string format_point(const FiniteField& f, Point p) {
    return "(" + f.format(p.a) + "," + f.format(p.b) + ")";
}

inline std::string format_tuple(const FiniteField& f, std::span<const elem_t> t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + f.format(t[i]);
    return s + ")";
}

inline std::string format_cgc_file(const CgcFile& c) {
    const FiniteField& f = *c.field;
    std::string s = "field: " + f.spec() + "\npoints: ";
    for (std::size_t i = 0; i < c.points.size(); ++i) s += (i ? ", " : "") + format_point(f, c.points[i]);
    s += "\n";
    if (c.lambda) {
        s += "lambda: ";
        for (std::size_t i = 0; i < c.lambda->size(); ++i) s += (i ? ", " : "") + f.format((*c.lambda)[i]);
        s += "\n";
    } else {
        s += "delta: " + std::to_string(c.delta) + "\n";
    }
    switch (c.scan) {
        case ScanDomainKind::None: break;
        case ScanDomainKind::All: s += "scan: all\n"; break;
        case ScanDomainKind::LeadingNonzero: s += "scan: leading-nonzero\n"; break;
        case ScanDomainKind::Explicit:
            s += "scan: ";
            for (std::size_t i = 0; i < c.scan_tuples.size(); ++i) {
                s += i ? "; " : "";
                for (std::size_t j = 0; j < c.scan_tuples[i].size(); ++j)
                    s += (j ? ", " : "") + f.format(c.scan_tuples[i][j]);
            }
            s += "\n";
            break;
    }
    return s;
}

}  // namespace convgoppa

#endif
