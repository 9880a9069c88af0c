#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "element_set.hpp"
#include "random.hpp"

namespace halfsep {

/**
 * @brief A closure operator over the ground set {0..ground_size()-1}.
 *
 * Implementations are expected to be extensive, monotone and idempotent;
 * this is checked by verify_closure_laws, not at call time. Operators are
 * pure functions over immutable state and may be shared between threads.
 */
template <typename Op>
concept ClosureOperator = requires(const Op& op, const ElementSet& x) {
    { op.ground_size() } -> std::convertible_to<std::size_t>;
    { op(x) } -> std::convertible_to<ElementSet>;
};

/**
 * @brief Optional fast path: close `closed` plus one element, giving up as
 * soon as the result would meet `forbidden`.
 *
 * `closed` must be a fixed point of the operator. Returns nullopt when
 * rho(closed + e) intersects `forbidden`.
 */
template <typename Op>
concept IncrementalClosure =
    ClosureOperator<Op> && requires(const Op& op, const ElementSet& c, std::size_t e, const ElementSet& f) {
        { op.extend_disjoint(c, e, f) } -> std::same_as<std::optional<ElementSet>>;
    };

template <ClosureOperator Op>
std::optional<ElementSet> extend_disjoint(const Op& op, const ElementSet& closed, std::size_t e,
                                          const ElementSet& forbidden) {
    if constexpr (IncrementalClosure<Op>) {
        return op.extend_disjoint(closed, e, forbidden);
    } else {
        ElementSet c = op(closed.with(e));
        if (c.intersects(forbidden)) return std::nullopt;
        return c;
    }
}

/// Type-erased closure operator, used for fixtures and file-driven operators.
class ClosureFunction {
public:
    using function_type = std::function<ElementSet(const ElementSet&)>;

    ClosureFunction(std::size_t ground_size, function_type fn) : n_(ground_size), fn_(std::move(fn)) {
        if (n_ == 0) throw std::invalid_argument("closure operator needs a non-empty ground set");
    }

    template <ClosureOperator Op>
        requires(!std::same_as<std::remove_cvref_t<Op>, ClosureFunction>)
    static ClosureFunction of(Op op) {
        const std::size_t n = op.ground_size();
        return ClosureFunction(n, [op = std::move(op)](const ElementSet& x) { return ElementSet(op(x)); });
    }

    std::size_t ground_size() const noexcept { return n_; }
    ElementSet operator()(const ElementSet& x) const { return fn_(x); }

private:
    std::size_t n_;
    function_type fn_;
};

/**
 * @brief Wraps a closure operator and counts evaluations.
 *
 * Every evaluation (including an incremental extension) adds exactly one.
 * The counter is per instance and never resets implicitly; it is not safe
 * to share one instance between threads.
 */
template <ClosureOperator Op>
class InstrumentedClosure {
public:
    explicit InstrumentedClosure(const Op& inner) : inner_(&inner) {}

    std::size_t ground_size() const { return inner_->ground_size(); }

    ElementSet operator()(const ElementSet& x) const {
        ++calls_;
        return (*inner_)(x);
    }

    std::optional<ElementSet> extend_disjoint(const ElementSet& closed, std::size_t e,
                                              const ElementSet& forbidden) const {
        ++calls_;
        return halfsep::extend_disjoint(*inner_, closed, e, forbidden);
    }

    std::size_t calls() const noexcept { return calls_; }
    const Op& inner() const noexcept { return *inner_; }

private:
    const Op* inner_;
    mutable std::size_t calls_ = 0;
};

template <ClosureOperator Op>
bool is_closed(const Op& op, const ElementSet& x) {
    return op(x) == x;
}

/// H and its complement are both closed.
template <ClosureOperator Op>
bool is_half_space(const Op& op, const ElementSet& h) {
    return is_closed(op, h) && is_closed(op, h.complement());
}

/**
 * @brief Order in which the separation loop picks the next candidate element.
 *
 * The loop walks a priority list and skips elements that are no longer
 * candidates, which is the same as repeatedly picking the highest-priority
 * remaining candidate.
 */
class ExtensionOrder {
public:
    using generator_type = std::function<std::vector<std::size_t>(std::size_t)>;

    /// Smallest element id first. Default, reproducible.
    static ExtensionOrder ascending() {
        return ExtensionOrder("asc", [](std::size_t n) {
            std::vector<std::size_t> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = i;
            return p;
        });
    }

    /// Uniformly random permutation fixed by the seed.
    static ExtensionOrder random(std::uint64_t seed) {
        return ExtensionOrder("random", [seed](std::size_t n) {
            std::vector<std::size_t> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = i;
            Rng rng(seed);
            shuffle(p, rng);
            return p;
        });
    }

    /// Listed elements first (in the given order), then the rest ascending.
    static ExtensionOrder sequence(std::vector<std::size_t> first) {
        return ExtensionOrder("sequence", [first = std::move(first)](std::size_t n) {
            std::vector<std::size_t> p;
            std::vector<char> seen(n, 0);
            for (auto e : first) {
                if (e >= n) throw std::out_of_range("extension order names element outside ground set");
                if (!seen[e]) p.push_back(e), seen[e] = 1;
            }
            for (std::size_t i = 0; i < n; ++i)
                if (!seen[i]) p.push_back(i);
            return p;
        });
    }

    /// User-supplied strategy; must return a permutation of 0..n-1.
    static ExtensionOrder custom(std::string name, generator_type gen) {
        return ExtensionOrder(std::move(name), std::move(gen));
    }

    std::vector<std::size_t> priority(std::size_t n) const { return gen_(n); }
    const std::string& name() const noexcept { return name_; }

private:
    ExtensionOrder(std::string name, generator_type gen) : name_(std::move(name)), gen_(std::move(gen)) {}

    std::string name_;
    generator_type gen_;
};

/// Disjoint closed sets first ⊇ A, second ⊇ B, maximal under inclusion.
struct Separation {
    ElementSet first;
    ElementSet second;
    std::size_t closure_calls = 0;

    bool is_partition() const { return (first | second).is_full(); }
};

struct Inseparable {};

using SeparationOutcome = std::variant<Separation, Inseparable>;

inline bool separated(const SeparationOutcome& o) { return std::holds_alternative<Separation>(o); }

/**
 * @brief Greedy maximal closed set separation.
 *
 * Closes A and B; if the closures meet, the answer is Inseparable.
 * Otherwise every remaining element is offered once, in the given order,
 * first to the A side and then to the B side; an extension is kept only if
 * its closure stays disjoint from the other side. Uses at most 2|E|-2
 * closure evaluations.
 */
template <ClosureOperator Op>
SeparationOutcome mcs_separate(const InstrumentedClosure<Op>& op, const ElementSet& a, const ElementSet& b,
                               const ExtensionOrder& order = ExtensionOrder::ascending()) {
    const std::size_t n = op.ground_size();
    if (a.universe() != n || b.universe() != n)
        throw std::invalid_argument("mcs_separate: input sets are over a different ground set");
    if (a.empty() || b.empty()) throw std::invalid_argument("mcs_separate: input sets must be non-empty");

    const std::size_t start = op.calls();
    ElementSet h1 = op(a);
    ElementSet h2 = op(b);
    if (h1.intersects(h2)) return Inseparable{};

    ElementSet candidates = (h1 | h2).complement();
    for (std::size_t e : order.priority(n)) {
        if (candidates.empty()) break;
        if (!candidates.contains(e)) continue;
        candidates.erase(e);
        if (auto grown = op.extend_disjoint(h1, e, h2)) {
            h1 = std::move(*grown);
            candidates -= h1;
        } else if (auto grown2 = op.extend_disjoint(h2, e, h1)) {
            h2 = std::move(*grown2);
            candidates -= h2;
        }
    }
    if (!candidates.empty()) throw std::logic_error("extension order did not cover the ground set");
    return Separation{std::move(h1), std::move(h2), op.calls() - start};
}

template <ClosureOperator Op>
SeparationOutcome mcs_separate(const Op& op, const ElementSet& a, const ElementSet& b,
                               const ExtensionOrder& order = ExtensionOrder::ascending()) {
    InstrumentedClosure<Op> counted(op);
    return mcs_separate(counted, a, b, order);
}

/**
 * @brief Half-space separability for systems known to be Kakutani.
 *
 * In a Kakutani system A and B lie in complementary half-spaces exactly
 * when their closures are disjoint. The caller vouches for the property;
 * on other systems the answer is only a necessary condition.
 */
template <ClosureOperator Op>
bool hss_decide_kakutani(const Op& op, const ElementSet& a, const ElementSet& b) {
    return !op(a).intersects(op(b));
}

}  // namespace halfsep
