#pragma once

// Independent reference implementations used only by the tests.

#include <array>
#include <cstdint>
#include <vector>

#include "halfsep/halfsep.hpp"

namespace halfsep::test_support {

/// Integer points in the plane; exact hull membership by orientation tests.
struct IntPoint {
    std::int64_t x, y;
};

inline std::int64_t orient(IntPoint a, IntPoint b, IntPoint c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool on_segment(IntPoint a, IntPoint b, IntPoint q) {
    if (orient(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
           q.y <= std::max(a.y, b.y);
}

inline bool in_triangle(IntPoint a, IntPoint b, IntPoint c, IntPoint q) {
    const auto d1 = orient(a, b, q), d2 = orient(b, c, q), d3 = orient(c, a, q);
    const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
    const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(neg && pos);
}

/// Caratheodory in the plane: q is in conv(X) iff it is in a point, segment or triangle of X.
inline bool exact_in_hull(const std::vector<IntPoint>& pts, const std::vector<std::size_t>& x, IntPoint q) {
    for (auto i : x)
        if (pts[i].x == q.x && pts[i].y == q.y) return true;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (on_segment(pts[x[i]], pts[x[j]], q)) return true;
            for (std::size_t k = j + 1; k < x.size(); ++k)
                if (orient(pts[x[i]], pts[x[j]], pts[x[k]]) != 0 && in_triangle(pts[x[i]], pts[x[j]], pts[x[k]], q))
                    return true;
        }
    return false;
}

inline ElementSet exact_alpha_closure(const std::vector<IntPoint>& pts, const ElementSet& x) {
    ElementSet out(pts.size());
    if (x.empty()) return out;
    const auto m = x.members();
    for (std::size_t e = 0; e < pts.size(); ++e)
        if (exact_in_hull(pts, m, pts[e])) out.insert(e);
    return out;
}

inline PointSet to_point_set(const std::vector<IntPoint>& pts) {
    std::vector<double> c;
    for (auto p : pts) c.push_back(static_cast<double>(p.x)), c.push_back(static_cast<double>(p.y));
    return PointSet(2, std::move(c));
}

inline std::vector<IntPoint> random_grid_points(std::size_t n, std::int64_t range, Rng& rng) {
    std::vector<IntPoint> out;
    while (out.size() < n) {
        IntPoint p{static_cast<std::int64_t>(uniform_below(rng, 2 * range + 1)) - range,
                   static_cast<std::int64_t>(uniform_below(rng, 2 * range + 1)) - range};
        bool dup = false;
        for (auto q : out) dup |= (q.x == p.x && q.y == p.y);
        if (!dup) out.push_back(p);
    }
    return out;
}

/**
 * Seven planar points with closed sets X = {x, y, w} and U = {u, v} that
 * are disjoint but not half-space separable: z can join neither side.
 * Ids: 0 u, 1 v, 2 x, 3 y, 4 w, 5 z, 6 t.
 */
inline std::vector<IntPoint> nonkakutani_seven_points() {
    return {{1, 0}, {0, 2}, {2, 0}, {0, 1}, {3, 1}, {0, 0}, {4, 4}};
}

/// Geodesic closure by repeated interval steps until stable.
inline ElementSet interval_iteration_closure(const Graph& g, const ElementSet& s) {
    DistanceMatrix d(g);
    return gamma_closure(g, d, s);
}

/// All connected graphs on n labelled vertices for tiny n, as edge masks over pairs.
inline std::vector<Graph> all_connected_graphs(std::size_t n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace halfsep::test_support
