#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "random.hpp"

namespace halfsep {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adj_(n) {}

    /// Throws std::invalid_argument on self-loops, repeated edges or bad ids.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= size() || v >= size())
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside vertex range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        auto& nu = adj_[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v)
            throw std::invalid_argument("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        nu.insert(it, v);
        auto& nv = adj_[v];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++edges_;
    }

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }

    bool adjacent(std::size_t u, std::size_t v) const {
        const auto& nu = adj_.at(u);
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edges_);
        for (std::size_t u = 0; u < size(); ++u)
            for (auto v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_connected() const {
        if (size() == 0) return true;
        std::vector<char> seen(size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj_[v])
                if (!seen[w]) seen[w] = 1, ++reached, stack.push_back(w);
        }
        return reached == size();
    }

    bool is_tree() const { return size() > 0 && edge_count() + 1 == size() && is_connected(); }

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edges_ = 0;
};

namespace graphs {

inline Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

/// Centre 0 with `leaves` leaves.
inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

}  // namespace graphs

/// Hop distances between all vertex pairs; `unreachable` across components.
class DistanceMatrix {
public:
    using value_type = std::uint16_t;
    static constexpr value_type unreachable = std::numeric_limits<value_type>::max();

    DistanceMatrix() = default;

    /// One BFS per vertex, O(n (n + m)).
    explicit DistanceMatrix(const Graph& g) : n_(g.size()), d_(g.size() * g.size(), unreachable) {
        if (n_ >= unreachable) throw std::invalid_argument("graph too large for 16-bit distances");
        std::vector<std::size_t> queue(n_);
        for (std::size_t s = 0; s < n_; ++s) {
            value_type* row = &d_[s * n_];
            row[s] = 0;
            std::size_t head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail) {
                auto v = queue[head++];
                for (auto w : g.neighbors(v)) {
                    if (row[w] == unreachable) {
                        row[w] = static_cast<value_type>(row[v] + 1);
                        queue[tail++] = w;
                    }
                }
            }
        }
    }

    std::size_t size() const noexcept { return n_; }
    value_type operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
    std::span<const value_type> row(std::size_t u) const { return {d_.data() + u * n_, n_}; }

private:
    std::size_t n_ = 0;
    std::vector<value_type> d_;
};

inline DistanceMatrix apsp(const Graph& g) { return DistanceMatrix(g); }

/**
 * @brief S plus every vertex on some shortest path between two members of S.
 *
 * Uses d(u,w) + d(w,v) = d(u,v); pairs in different components add nothing.
 */
inline ElementSet interval(const Graph& g, const DistanceMatrix& d, const ElementSet& s) {
    const std::size_t n = g.size();
    ElementSet out = s;
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto u = members[i], v = members[j];
            const auto duv = d(u, v);
            if (duv == DistanceMatrix::unreachable) continue;
            for (std::size_t w = 0; w < n; ++w) {
                const auto duw = d(u, w), dwv = d(w, v);
                if (duw != DistanceMatrix::unreachable && dwv != DistanceMatrix::unreachable &&
                    static_cast<std::size_t>(duw) + dwv == duv)
                    out.insert(w);
            }
        }
    }
    return out;
}

/// Geodesic hull by iterating interval() to a fixed point. Reference route.
inline ElementSet gamma_closure(const Graph& g, const DistanceMatrix& d, const ElementSet& s) {
    ElementSet cur = s;
    for (;;) {
        ElementSet next = interval(g, d, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/**
 * @brief Geodesic (shortest-path) convexity as a closure operator.
 *
 * Closures are grown one vertex at a time: each new vertex is paired with
 * every member of the current hull and the shortest-path DAG towards that
 * member is walked, stopping at vertices already in the hull.
 */
class GeodesicClosure {
public:
    explicit GeodesicClosure(Graph g) : g_(std::move(g)), d_(g_) {}
    GeodesicClosure(Graph g, DistanceMatrix d) : g_(std::move(g)), d_(std::move(d)) {
        if (d_.size() != g_.size()) throw std::invalid_argument("distance matrix does not match graph");
    }

    std::size_t ground_size() const noexcept { return g_.size(); }
    const Graph& graph() const noexcept { return g_; }
    const DistanceMatrix& distances() const noexcept { return d_; }

    ElementSet operator()(const ElementSet& x) const {
        ElementSet hull(g_.size());
        std::vector<std::size_t> members;
        x.for_each([&](std::size_t v) { grow(hull, members, v, nullptr); });
        return hull;
    }

    std::optional<ElementSet> extend_disjoint(const ElementSet& closed, std::size_t e,
                                              const ElementSet& forbidden) const {
        if (closed.intersects(forbidden)) return std::nullopt;
        ElementSet hull = closed;
        auto members = closed.members();
        if (!grow(hull, members, e, &forbidden)) return std::nullopt;
        return hull;
    }

private:
    // Adds v to the convex set `hull` and restores convexity. Returns false
    // as soon as a vertex of `forbidden` would have to be added.
    bool grow(ElementSet& hull, std::vector<std::size_t>& members, std::size_t v, const ElementSet* forbidden) const {
        if (hull.contains(v)) return true;
        if (forbidden && forbidden->contains(v)) return false;
        hull.insert(v);
        members.push_back(v);
        std::vector<std::size_t> pending{v};
        std::vector<std::size_t> stack;
        for (std::size_t head = 0; head < pending.size(); ++head) {
            const auto x = pending[head];
            const std::size_t known = members.size();
            for (std::size_t i = 0; i < known; ++i) {
                const auto y = members[i];
                const auto dy = d_.row(y);
                if (dy[x] == DistanceMatrix::unreachable || dy[x] <= 1) continue;
                stack.assign(1, x);
                while (!stack.empty()) {
                    const auto cur = stack.back();
                    stack.pop_back();
                    const auto next_d = dy[cur] - 1;
                    for (auto w : g_.neighbors(cur)) {
                        if (dy[w] != next_d || hull.contains(w)) continue;
                        if (forbidden && forbidden->contains(w)) return false;
                        hull.insert(w);
                        members.push_back(w);
                        pending.push_back(w);
                        stack.push_back(w);
                    }
                }
            }
        }
        return true;
    }

    Graph g_;
    DistanceMatrix d_;
};

// ---------------------------------------------------------------------------
// Pasch axiom

struct PaschResult {
    bool holds = true;
    /// (u, v, w, x, y) with x on a u-v geodesic hull, y on a u-w geodesic hull,
    /// and hull{x,w} disjoint from hull{y,v}.
    std::optional<std::array<std::size_t, 5>> witness;
};

/**
 * @brief Exhaustive Pasch check over all vertex quintuples.
 *
 * Needs O(n^2) closures of vertex pairs and O(n^5) intersection tests.
 */
inline PaschResult pasch_check(const GeodesicClosure& gamma, std::size_t max_n = 60) {
    const auto& g = gamma.graph();
    const std::size_t n = g.size();
    if (n > max_n) throw std::length_error("pasch_check: " + std::to_string(n) + " vertices exceeds bound " + std::to_string(max_n));
    if (!g.is_connected()) throw std::invalid_argument("pasch_check: graph must be connected");

    std::vector<ElementSet> pair(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            pair[a * n + b] = gamma(ElementSet(n, {a, b}));
            pair[b * n + a] = pair[a * n + b];
        }
    auto hull = [&](std::size_t a, std::size_t b) -> const ElementSet& { return pair[a * n + b]; };

    PaschResult r;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w) {
                const auto xs = hull(u, v).members();
                const auto ys = hull(u, w).members();
                for (auto x : xs)
                    for (auto y : ys)
                        if (!hull(x, w).intersects(hull(y, v))) {
                            r.holds = false;
                            r.witness = std::array<std::size_t, 5>{u, v, w, x, y};
                            return r;
                        }
            }
    return r;
}

inline PaschResult pasch_check(const Graph& g, std::size_t max_n = 60) {
    if (g.size() > max_n) throw std::length_error("pasch_check: " + std::to_string(g.size()) + " vertices exceeds bound " + std::to_string(max_n));
    return pasch_check(GeodesicClosure(g), max_n);
}

// ---------------------------------------------------------------------------
// K_{2,3} minor

/**
 * @brief Exhaustive search for a K_{2,3} minor.
 *
 * Any model can be normalized so that the three degree-2 branch sets are
 * single vertices b1, b2, b3 (path interiors are absorbed into a degree-3
 * branch set). The search therefore tries every triple and every connected
 * set A1 adjacent to all three, and asks whether a component of what is
 * left is adjacent to all three as well.
 */
inline bool k23_minor_free(const Graph& g, std::size_t max_n = 15) {
    const std::size_t n = g.size();
    if (n > max_n || n > 30) throw std::length_error("k23_minor_free: " + std::to_string(n) + " vertices exceeds bound " + std::to_string(std::min<std::size_t>(max_n, 30)));
    if (n < 5) return true;

    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (auto w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
    const std::uint32_t all = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);

    auto connected = [&](std::uint32_t set) {
        std::uint32_t seen = set & (~set + 1);
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
            next &= set & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == set;
    };

    for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t b2 = b1 + 1; b2 < n; ++b2)
            for (std::size_t b3 = b2 + 1; b3 < n; ++b3) {
                const std::uint32_t bs = (1u << b1) | (1u << b2) | (1u << b3);
                auto touches_all = [&](std::uint32_t set) {
                    return (adj[b1] & set) && (adj[b2] & set) && (adj[b3] & set);
                };
                const std::uint32_t rest = all & ~bs;
                for (std::uint32_t a1 = rest; a1; a1 = (a1 - 1) & rest) {
                    if (!touches_all(a1) || !connected(a1)) continue;
                    std::uint32_t left = rest & ~a1;
                    while (left) {
                        // grow the component of the lowest remaining vertex
                        std::uint32_t comp = left & (~left + 1);
                        std::uint32_t frontier = comp;
                        while (frontier) {
                            std::uint32_t next = 0;
                            for (std::uint32_t f = frontier; f; f &= f - 1)
                                next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
                            next &= left & ~comp;
                            comp |= next;
                            frontier = next;
                        }
                        if (touches_all(comp)) return false;
                        left &= ~comp;
                    }
                }
            }
    return true;
}

// ---------------------------------------------------------------------------
// Generators

/// Uniform random labelled tree, decoded from a random Prüfer sequence.
inline Graph random_tree(std::size_t n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_tree needs n >= 2");
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = static_cast<std::size_t>(uniform_below(rng, n));

    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    Graph t(n);
    for (auto c : code) {
        auto leaf = leaves.top();
        leaves.pop();
        t.add_edge(leaf, c);
        if (--degree[c] == 1) leaves.push(c);
    }
    auto u = leaves.top();
    leaves.pop();
    t.add_edge(u, leaves.top());
    return t;
}

inline Graph random_tree(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_tree(n, rng);
}

/// Random tree plus each non-edge independently with probability p. Always connected.
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
    if (n == 1) return Graph(1);
    Graph g = random_tree(n, rng);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && uniform01(rng) < p) g.add_edge(u, v);
    return g;
}

struct TreeLabeling {
    ElementSet red;
    ElementSet blue;
    Edge cut;
};

/**
 * @brief Splits a tree into two geodesic half-spaces by removing one edge.
 *
 * The edge is drawn uniformly among edges whose two sides have size ratio
 * in [1/ratio_bound, ratio_bound]. Returns nullopt when no edge qualifies
 * (star-like trees); the caller should draw a new tree.
 */
inline std::optional<TreeLabeling> random_tree_halfspace_labeling(const Graph& tree, Rng& rng, double ratio_bound = 3.0) {
    if (!tree.is_tree()) throw std::invalid_argument("labeling requires a tree");
    const std::size_t n = tree.size();

    std::vector<std::size_t> parent(n, n), order;
    order.reserve(n);
    std::vector<std::size_t> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto w : tree.neighbors(v))
            if (parent[w] == n) parent[w] = v, stack.push_back(w);
    }
    std::vector<std::size_t> sub(n, 1);
    for (std::size_t i = n; i-- > 1;) sub[parent[order[i]]] += sub[order[i]];

    std::vector<std::size_t> valid;
    for (std::size_t v = 1; v < n; ++v) {
        const double s = static_cast<double>(sub[v]);
        const double ratio = s / static_cast<double>(n - sub[v]);
        if (ratio >= 1.0 / ratio_bound && ratio <= ratio_bound) valid.push_back(v);
    }
    if (valid.empty()) return std::nullopt;
    const auto child = valid[uniform_below(rng, valid.size())];

    ElementSet below(n);
    std::vector<std::size_t> st{child};
    while (!st.empty()) {
        auto v = st.back();
        st.pop_back();
        below.insert(v);
        for (auto w : tree.neighbors(v))
            if (w != parent[v] && !below.contains(w)) st.push_back(w);
    }
    ElementSet above = below.complement();
    const Edge cut{parent[child], child};
    if (uniform_below(rng, 2) == 0) return TreeLabeling{std::move(below), std::move(above), cut};
    return TreeLabeling{std::move(above), std::move(below), cut};
}

}  // namespace halfsep
