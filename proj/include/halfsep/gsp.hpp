#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "graph.hpp"

namespace halfsep {

/**
 * @brief Graph-structured partitioning: every vertex of a host graph owns a
 * non-empty bag, and the bags partition the ground set S = {0..|S|-1}.
 */
class GSPartition {
public:
    /// owner[s] is the vertex whose bag holds element s.
    GSPartition(Graph g, std::vector<std::size_t> owner) : g_(std::move(g)), owner_(std::move(owner)), bags_(g_.size()) {
        for (std::size_t s = 0; s < owner_.size(); ++s) {
            if (owner_[s] >= g_.size())
                throw std::invalid_argument("element " + std::to_string(s) + " assigned to unknown vertex");
            bags_[owner_[s]].push_back(s);
        }
        for (std::size_t v = 0; v < g_.size(); ++v)
            if (bags_[v].empty()) throw std::invalid_argument("bag of vertex " + std::to_string(v) + " is empty");
    }

    /// Every bag a singleton: S is identified with V.
    static GSPartition trivial(Graph g) {
        std::vector<std::size_t> owner(g.size());
        for (std::size_t v = 0; v < owner.size(); ++v) owner[v] = v;
        return GSPartition(std::move(g), std::move(owner));
    }

    const Graph& graph() const noexcept { return g_; }
    std::size_t ground_size() const noexcept { return owner_.size(); }
    std::size_t owner(std::size_t s) const { return owner_.at(s); }
    const std::vector<std::size_t>& bag(std::size_t v) const { return bags_.at(v); }

private:
    Graph g_;
    std::vector<std::size_t> owner_;
    std::vector<std::vector<std::size_t>> bags_;
};

/// Closure on S: geodesic hull of the touched vertices, expanded back to their bags.
class SigmaClosure {
public:
    explicit SigmaClosure(GSPartition gsp) : gsp_(std::move(gsp)), gamma_(gsp_.graph()) {}

    std::size_t ground_size() const noexcept { return gsp_.ground_size(); }
    const GSPartition& partition() const noexcept { return gsp_; }

    ElementSet operator()(const ElementSet& sub) const {
        if (sub.universe() != ground_size()) throw std::invalid_argument("subset over a different ground set");
        ElementSet touched(gsp_.graph().size());
        sub.for_each([&](std::size_t s) { touched.insert(gsp_.owner(s)); });
        ElementSet out(ground_size());
        gamma_(touched).for_each([&](std::size_t v) {
            for (auto s : gsp_.bag(v)) out.insert(s);
        });
        return out;
    }

private:
    GSPartition gsp_;
    GeodesicClosure gamma_;
};

inline ElementSet sigma_closure(const GSPartition& gsp, const ElementSet& sub) { return SigmaClosure(gsp)(sub); }

}  // namespace halfsep
