#pragma once

// Text formats. Blank lines and lines starting with '#' are ignored in the
// graph and lattice formats. Errors carry "source:line: message".
//
//   graph    first line "n m", then m lines "u v" (0-indexed vertices)
//   lattice  first line "n", then lines "child parent" (child below parent)
//   context  CSV; header = corner cell + attribute names; rows = object name + 0/1 cells
//   points   first line d, then one point per line, d comma-separated coordinates,
//            optionally followed by an integer label column

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "euclid.hpp"
#include "experiments.hpp"
#include "formal_context.hpp"
#include "graph.hpp"
#include "lattice.hpp"

namespace halfsep {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& msg)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg) {}
};

namespace detail {

class LineReader {
public:
    LineReader(std::istream& is, std::string source) : is_(is), source_(std::move(source)) {}

    /// Next line, optionally skipping blanks and '#' comments; trailing CR removed.
    std::optional<std::string> next(bool skip_comments) {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!skip_comments) return line;
            auto p = line.find_first_not_of(" \t");
            if (p == std::string::npos || line[p] == '#') continue;
            return line;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(source_, line_, msg); }
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& is_;
    std::string source_;
    std::size_t line_ = 0;
};

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        auto b = f.find_first_not_of(" \t");
        auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return out;
}

inline std::size_t parse_index(const std::string& tok, LineReader& r) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) r.fail("expected a non-negative integer, got '" + tok + "'");
    return v;
}

inline double parse_real(const std::string& tok, LineReader& r) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) r.fail("expected a number, got '" + tok + "'");
    return v;
}

template <typename F>
auto with_file(const std::string& path, F&& parse) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    return parse(in, path);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph

inline Graph read_graph(std::istream& is, const std::string& source = "<graph>") {
    detail::LineReader r(is, source);
    auto head = r.next(true);
    if (!head) r.fail("empty graph file");
    auto t = detail::split_ws(*head);
    if (t.size() != 2) r.fail("header must be \"n m\"");
    const auto n = detail::parse_index(t[0], r), m = detail::parse_index(t[1], r);
    if (n == 0) r.fail("graph needs at least one vertex");
    Graph g(n);
    std::size_t seen = 0;
    while (auto line = r.next(true)) {
        auto e = detail::split_ws(*line);
        if (e.size() != 2) r.fail("edge line must be \"u v\"");
        const auto u = detail::parse_index(e[0], r), v = detail::parse_index(e[1], r);
        try {
            g.add_edge(u, v);
        } catch (const std::exception& ex) {
            r.fail(ex.what());
        }
        ++seen;
    }
    if (seen != m) r.fail("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

inline Graph load_graph(const std::string& path) {
    return detail::with_file(path, [](std::istream& in, const std::string& p) { return read_graph(in, p); });
}

inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// Lattice

inline FiniteLattice read_lattice(std::istream& is, const std::string& source = "<lattice>",
                                  std::size_t max_n = default_lattice_bound) {
    detail::LineReader r(is, source);
    auto head = r.next(true);
    if (!head) r.fail("empty lattice file");
    auto t = detail::split_ws(*head);
    if (t.size() != 1) r.fail("header must be the element count \"n\"");
    const auto n = detail::parse_index(t[0], r);
    if (n == 0) r.fail("lattice needs at least one element");
    if (n > max_n) r.fail("element count " + std::to_string(n) + " exceeds the bound " + std::to_string(max_n));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (auto line = r.next(true)) {
        auto e = detail::split_ws(*line);
        if (e.size() != 2) r.fail("cover line must be \"child parent\"");
        const auto c = detail::parse_index(e[0], r), p = detail::parse_index(e[1], r);
        if (c >= n || p >= n) r.fail("element id out of range 0.." + std::to_string(n - 1));
        edges.emplace_back(c, p);
    }
    try {
        return build_lattice(n, edges, {}, max_n);
    } catch (const LatticeError& ex) {
        throw ParseError(source, r.line(), std::string("not a lattice: ") + ex.what());
    }
}

inline FiniteLattice load_lattice(const std::string& path, std::size_t max_n = default_lattice_bound) {
    return detail::with_file(path, [&](std::istream& in, const std::string& p) { return read_lattice(in, p, max_n); });
}

inline void write_lattice(std::ostream& os, const FiniteLattice& L) {
    os << L.size() << '\n';
    for (auto [c, p] : L.cover_edges()) os << c << ' ' << p << '\n';
}

// ---------------------------------------------------------------------------
// Formal context

inline FormalContext read_context(std::istream& is, const std::string& source = "<context>") {
    detail::LineReader r(is, source);
    auto head = r.next(false);
    if (!head) r.fail("empty context file");
    auto h = detail::split_csv(*head);
    if (h.size() < 2) r.fail("header needs a corner cell and at least one attribute");
    std::vector<std::string> attrs(h.begin() + 1, h.end());
    std::vector<std::string> objects;
    std::vector<std::vector<bool>> rows;
    while (auto line = r.next(false)) {
        if (line->find_first_not_of(" \t") == std::string::npos) continue;
        auto f = detail::split_csv(*line);
        if (f.size() != h.size())
            r.fail("expected " + std::to_string(h.size()) + " fields, got " + std::to_string(f.size()));
        objects.push_back(f[0]);
        std::vector<bool> row;
        for (std::size_t j = 1; j < f.size(); ++j) {
            if (f[j] != "0" && f[j] != "1") r.fail("incidence entries must be 0 or 1, got '" + f[j] + "'");
            row.push_back(f[j] == "1");
        }
        rows.push_back(std::move(row));
    }
    if (objects.empty()) r.fail("context has no objects");
    try {
        return FormalContext(std::move(objects), std::move(attrs), rows);
    } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
    }
}

inline FormalContext load_context(const std::string& path) {
    return detail::with_file(path, [](std::istream& in, const std::string& p) { return read_context(in, p); });
}

inline void write_context(std::ostream& os, const FormalContext& ctx) {
    os << "object";
    for (const auto& a : ctx.attributes()) os << ',' << a;
    os << '\n';
    for (std::size_t o = 0; o < ctx.object_count(); ++o) {
        os << ctx.objects()[o];
        for (std::size_t a = 0; a < ctx.attribute_count(); ++a) os << ',' << (ctx.incident(o, a) ? 1 : 0);
        os << '\n';
    }
}

// ---------------------------------------------------------------------------
// Points

struct PointFile {
    PointSet points;
    /// Present when every line carries a label column.
    std::optional<std::vector<int>> labels;
};

inline PointFile read_points(std::istream& is, const std::string& source = "<points>") {
    detail::LineReader r(is, source);
    auto head = r.next(true);
    if (!head) r.fail("empty point file");
    auto t = detail::split_csv(*head);
    if (t.size() != 1) r.fail("first line must be the dimension d");
    const auto d = detail::parse_index(t[0], r);
    if (d == 0) r.fail("dimension must be at least 1");
    std::vector<double> coords;
    std::vector<int> labels;
    std::optional<bool> labelled;
    while (auto line = r.next(true)) {
        auto f = detail::split_csv(*line);
        if (f.size() != d && f.size() != d + 1)
            r.fail("expected " + std::to_string(d) + " coordinates (plus optional label), got " +
                   std::to_string(f.size()) + " fields");
        const bool has_label = f.size() == d + 1;
        if (labelled && *labelled != has_label) r.fail("label column must be present on all lines or none");
        labelled = has_label;
        for (std::size_t k = 0; k < d; ++k) {
            const double v = detail::parse_real(f[k], r);
            if (!std::isfinite(v)) r.fail("coordinate is not finite");
            coords.push_back(v);
        }
        if (has_label) {
            const auto l = detail::parse_index(f[d], r);
            if (l > 1) r.fail("labels must be 0 or 1");
            labels.push_back(static_cast<int>(l));
        }
    }
    if (coords.empty()) r.fail("point file has no points");
    PointFile out{PointSet(d, std::move(coords)), std::nullopt};
    if (labelled.value_or(false)) out.labels = std::move(labels);
    return out;
}

inline PointFile load_points(const std::string& path) {
    return detail::with_file(path, [](std::istream& in, const std::string& p) { return read_points(in, p); });
}

inline void write_points(std::ostream& os, const PointSet& pts, const std::vector<int>* labels = nullptr) {
    os << pts.dim() << '\n';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto p = pts.point(i);
        for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << format_double(p[k]);
        if (labels) os << ',' << labels->at(i);
        os << '\n';
    }
}

}  // namespace halfsep
