#pragma once

// Small closure systems with known structure, used as reference fixtures.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "element_set.hpp"

namespace halfsep {

/// Chain 0 < 1 < ... < n-1; X maps to every element between min X and max X.
class IntervalChainClosure {
public:
    explicit IntervalChainClosure(std::size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("chain must be non-empty");
    }

    std::size_t ground_size() const noexcept { return n_; }

    ElementSet operator()(const ElementSet& x) const {
        ElementSet out(n_);
        auto lo = x.first();
        if (!lo) return out;
        std::size_t hi = *lo;
        x.for_each([&](std::size_t e) { hi = e; });
        for (std::size_t e = *lo; e <= hi; ++e) out.insert(e);
        return out;
    }

private:
    std::size_t n_;
};

/**
 * @brief Sets of size at most n/2 are closed, everything larger closes to E.
 *
 * Kakutani for even n. Dropping one closed set of size exactly n/2 keeps a
 * closure system but breaks the Kakutani property.
 */
class ThresholdClosure {
public:
    explicit ThresholdClosure(std::size_t n, std::optional<ElementSet> removed = std::nullopt)
        : n_(n), removed_(std::move(removed)) {
        if (n == 0) throw std::invalid_argument("ground set must be non-empty");
        if (removed_) {
            if (removed_->universe() != n || removed_->count() != n / 2)
                throw std::invalid_argument("removed set must have exactly n/2 elements");
        }
    }

    std::size_t ground_size() const noexcept { return n_; }

    ElementSet operator()(const ElementSet& x) const {
        if (x.count() <= n_ / 2 && !(removed_ && x == *removed_)) return x;
        return ElementSet::full(n_);
    }

private:
    std::size_t n_;
    std::optional<ElementSet> removed_;
};

/**
 * @brief Only the empty set and the singletons {0}, {1} are proper closed sets.
 *
 * The unique maximal separation of {0} and {1} is ({0}, {1}); used for the
 * worst-case call count.
 */
class TwoPointClosure {
public:
    explicit TwoPointClosure(std::size_t n) : n_(n) {
        if (n < 3) throw std::invalid_argument("two-point fixture needs at least 3 elements");
    }

    std::size_t ground_size() const noexcept { return n_; }

    ElementSet operator()(const ElementSet& x) const {
        const auto c = x.count();
        if (c == 0) return x;
        if (c == 1 && (x.contains(0) || x.contains(1))) return x;
        return ElementSet::full(n_);
    }

private:
    std::size_t n_;
};

/**
 * @brief Closure system given by an explicit family of closed sets.
 *
 * The full set is always added; the family must be closed under
 * intersection (checked on construction when check_intersections is set).
 */
class FamilyClosure {
public:
    FamilyClosure(std::size_t n, std::vector<ElementSet> closed, bool check_intersections = true)
        : n_(n), closed_(std::move(closed)) {
        if (n == 0) throw std::invalid_argument("ground set must be non-empty");
        closed_.push_back(ElementSet::full(n));
        std::sort(closed_.begin(), closed_.end());
        closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
        for (const auto& c : closed_)
            if (c.universe() != n) throw std::invalid_argument("closed set over a different universe");
        if (check_intersections) {
            for (std::size_t i = 0; i < closed_.size(); ++i)
                for (std::size_t j = i + 1; j < closed_.size(); ++j)
                    if (!std::binary_search(closed_.begin(), closed_.end(), closed_[i] & closed_[j]))
                        throw std::invalid_argument("family is not closed under intersection: " + closed_[i].to_string() +
                                                    " & " + closed_[j].to_string());
        }
    }

    std::size_t ground_size() const noexcept { return n_; }
    const std::vector<ElementSet>& closed_sets() const noexcept { return closed_; }

    ElementSet operator()(const ElementSet& x) const {
        ElementSet out = ElementSet::full(n_);
        for (const auto& c : closed_)
            if (x.is_subset_of(c)) out &= c;
        return out;
    }

private:
    std::size_t n_;
    std::vector<ElementSet> closed_;
};

}  // namespace halfsep
