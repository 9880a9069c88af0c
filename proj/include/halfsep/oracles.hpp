#pragma once

// Exhaustive reference checks for small closure systems. Everything here is
// exponential in |E| and refuses to run above a configurable size bound.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "element_set.hpp"
#include "random.hpp"

namespace halfsep {

class BoundExceeded : public std::length_error {
public:
    BoundExceeded(const std::string& what, std::size_t size, std::size_t bound)
        : std::length_error(what + ": size " + std::to_string(size) + " exceeds bound " + std::to_string(bound)) {}
};

inline void require_bound(const char* what, std::size_t size, std::size_t bound) {
    if (size > bound) throw BoundExceeded(what, size, bound);
}

// ---------------------------------------------------------------------------
// Closure laws

struct LawCheck {
    bool passed = true;
    std::optional<ElementSet> witness;           // X
    std::optional<ElementSet> witness_superset;  // Y with X ⊆ Y (monotonicity only)
};

struct LawReport {
    LawCheck extensivity;
    LawCheck monotonicity;
    LawCheck idempotency;
    std::size_t samples = 0;

    bool passed() const { return extensivity.passed && monotonicity.passed && idempotency.passed; }
};

namespace detail {

inline ElementSet random_subset(std::size_t n, double density, Rng& rng) {
    ElementSet s(n);
    for (std::size_t e = 0; e < n; ++e)
        if (uniform01(rng) < density) s.insert(e);
    return s;
}

// Greedily drop elements of x while pred(x) keeps holding.
template <typename Pred>
ElementSet shrink(ElementSet x, Pred&& pred) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto e : x.members()) {
            ElementSet smaller = x;
            smaller.erase(e);
            if (pred(smaller)) {
                x = std::move(smaller);
                progress = true;
            }
        }
    }
    return x;
}

}  // namespace detail

/**
 * @brief Samples random subsets and checks extensivity, monotonicity and
 * idempotency. The first counterexample per law is kept, shrunk to a
 * locally minimal witness.
 */
template <ClosureOperator Op>
LawReport verify_closure_laws(const Op& op, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("verify_closure_laws: trials must be >= 1");
    const std::size_t n = op.ground_size();
    Rng rng(seed);
    LawReport report;

    auto not_extensive = [&](const ElementSet& x) { return !x.is_subset_of(op(x)); };
    auto not_idempotent = [&](const ElementSet& x) {
        auto c = op(x);
        return op(c) != c;
    };

    for (std::size_t t = 0; t < trials; ++t) {
        ElementSet x(n);
        if (t == 1) {
            x = ElementSet::full(n);
        } else if (t > 1) {
            x = detail::random_subset(n, uniform01(rng), rng);
        }
        ElementSet y = x | detail::random_subset(n, uniform01(rng), rng);
        ++report.samples;

        if (report.extensivity.passed && not_extensive(x)) {
            report.extensivity.passed = false;
            report.extensivity.witness = detail::shrink(x, not_extensive);
        }
        if (report.idempotency.passed && not_idempotent(x)) {
            report.idempotency.passed = false;
            report.idempotency.witness = detail::shrink(x, not_idempotent);
        }
        if (report.monotonicity.passed && !op(x).is_subset_of(op(y))) {
            report.monotonicity.passed = false;
            // shrink Y first (keeping X inside), then X
            ElementSet yy = detail::shrink(y, [&](const ElementSet& cand) {
                return x.is_subset_of(cand) && !op(x).is_subset_of(op(cand));
            });
            ElementSet xx = detail::shrink(x, [&](const ElementSet& cand) { return !op(cand).is_subset_of(op(yy)); });
            report.monotonicity.witness = xx;
            report.monotonicity.witness_superset = yy;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Enumeration

struct OracleBounds {
    std::size_t enumerate = 16;
    std::size_t kakutani = 12;
};

/// All fixed points of the operator, in canonical order (size, then content).
template <ClosureOperator Op>
std::vector<ElementSet> enumerate_closed_sets(const Op& op, std::size_t bound = OracleBounds{}.enumerate) {
    const std::size_t n = op.ground_size();
    require_bound("enumerate_closed_sets", n, std::min<std::size_t>(bound, 30));
    std::vector<ElementSet> closed;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto x = ElementSet::from_mask(n, mask);
        if (op(x) == x) closed.push_back(std::move(x));
    }
    std::sort(closed.begin(), closed.end(), canonical_less);
    return closed;
}

using SeparationPair = std::pair<ElementSet, ElementSet>;

/**
 * @brief Maximal disjoint pairs (H1 ⊇ A, H2 ⊇ B) drawn from an explicit list
 * of closed sets.
 *
 * A disjoint pair is maximal iff H1 is maximal among closed supersets of A
 * avoiding H2, and H2 is maximal among closed supersets of B avoiding H1.
 */
inline std::vector<SeparationPair> maximal_separations(const std::vector<ElementSet>& closed, const ElementSet& a,
                                                       const ElementSet& b) {
    std::vector<const ElementSet*> with_a, with_b;
    for (const auto& c : closed) {
        if (a.is_subset_of(c)) with_a.push_back(&c);
        if (b.is_subset_of(c)) with_b.push_back(&c);
    }
    auto has_larger_avoiding = [](const std::vector<const ElementSet*>& pool, const ElementSet& base,
                                  const ElementSet& avoid) {
        for (const auto* c : pool)
            if (c->count() > base.count() && base.is_subset_of(*c) && !c->intersects(avoid)) return true;
        return false;
    };

    std::vector<SeparationPair> out;
    for (const auto* h2 : with_b) {
        for (const auto* h1 : with_a) {
            if (h1->intersects(*h2)) continue;
            if (has_larger_avoiding(with_a, *h1, *h2)) continue;
            if (has_larger_avoiding(with_b, *h2, *h1)) continue;
            out.emplace_back(*h1, *h2);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every maximal disjoint closed pair containing (A, B); empty when closures meet.
template <ClosureOperator Op>
std::vector<SeparationPair> brute_force_maximal_separations(const Op& op, const ElementSet& a, const ElementSet& b,
                                                            std::size_t bound = OracleBounds{}.enumerate) {
    return maximal_separations(enumerate_closed_sets(op, bound), a, b);
}

/// Membership test against the maximal-pair oracle without materializing the list.
inline bool is_maximal_separation(const std::vector<ElementSet>& closed, const ElementSet& a, const ElementSet& b,
                                  const ElementSet& h1, const ElementSet& h2) {
    if (!std::binary_search(closed.begin(), closed.end(), h1, canonical_less)) return false;
    if (!std::binary_search(closed.begin(), closed.end(), h2, canonical_less)) return false;
    if (h1.intersects(h2) || !a.is_subset_of(h1) || !b.is_subset_of(h2)) return false;
    for (const auto& c : closed) {
        if (c.count() > h1.count() && h1.is_subset_of(c) && !c.intersects(h2)) return false;
        if (c.count() > h2.count() && h2.is_subset_of(c) && !c.intersects(h1)) return false;
    }
    return true;
}

/**
 * @brief Post-hoc maximality: no outside element can join either side
 * without its closure meeting the other side.
 */
template <ClosureOperator Op>
bool extension_blocked(const Op& op, const ElementSet& h1, const ElementSet& h2) {
    bool ok = true;
    (h1 | h2).complement().for_each([&](std::size_t e) {
        if (!ok) return;
        if (!op(h1.with(e)).intersects(h2) || !op(h2.with(e)).intersects(h1)) ok = false;
    });
    return ok;
}

// ---------------------------------------------------------------------------
// Kakutani property

struct KakutaniVerdict {
    bool kakutani = true;
    /// Disjoint non-empty closed sets that no half-space separates.
    std::optional<SeparationPair> witness;
    std::size_t closed_sets = 0;
    std::size_t half_spaces = 0;
};

/// Half-spaces among an explicit closed-set list (both H and its complement closed).
inline std::vector<ElementSet> half_spaces_of(const std::vector<ElementSet>& closed) {
    std::vector<ElementSet> out;
    for (const auto& c : closed)
        if (std::binary_search(closed.begin(), closed.end(), c.complement(), canonical_less)) out.push_back(c);
    return out;
}

/**
 * @brief Definitional Kakutani check: every pair of disjoint non-empty
 * closed sets must lie in complementary half-spaces.
 */
inline KakutaniVerdict kakutani_from_closed(const std::vector<ElementSet>& closed) {
    KakutaniVerdict v;
    v.closed_sets = closed.size();
    if (closed.empty()) return v;
    const std::size_t n = closed.front().universe();
    if (n > 64) throw BoundExceeded("kakutani_from_closed", n, 64);

    std::vector<std::uint64_t> cs, hs;
    for (const auto& c : closed)
        if (!c.empty()) cs.push_back(c.to_mask());
    for (const auto& h : half_spaces_of(closed)) hs.push_back(h.to_mask());
    v.half_spaces = hs.size();

    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (cs[i] & cs[j]) continue;
            bool found = false;
            for (auto h : hs) {
                if ((cs[i] & ~h) == 0 && (cs[j] & h) == 0) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                v.kakutani = false;
                v.witness = SeparationPair{ElementSet::from_mask(n, cs[i]), ElementSet::from_mask(n, cs[j])};
                return v;
            }
        }
    }
    return v;
}

template <ClosureOperator Op>
KakutaniVerdict brute_force_kakutani(const Op& op, std::size_t bound = OracleBounds{}.kakutani) {
    require_bound("brute_force_kakutani", op.ground_size(), bound);
    return kakutani_from_closed(enumerate_closed_sets(op, bound));
}

// ---------------------------------------------------------------------------
// Partition characterization: Kakutani iff every separation run on disjoint
// closures covers the whole ground set.

struct PartitionReport {
    bool kakutani = false;  // brute-force reference
    std::size_t runs = 0;
    std::size_t partition_runs = 0;
    std::size_t skipped = 0;  // samples whose closures met
    /// First run that did not cover E.
    std::optional<SeparationPair> uncovered_input;

    std::size_t non_partition_runs() const { return runs - partition_runs; }
    /// Kakutani and all runs partition, or non-Kakutani and some run does not.
    bool consistent() const { return kakutani ? non_partition_runs() == 0 : non_partition_runs() > 0; }
};

namespace detail {

template <ClosureOperator Op>
void record_run(const Op& op, const ElementSet& a, const ElementSet& b, const ExtensionOrder& order,
                PartitionReport& report) {
    auto out = mcs_separate(op, a, b, order);
    if (!separated(out)) {
        ++report.skipped;
        return;
    }
    ++report.runs;
    if (std::get<Separation>(out).is_partition()) {
        ++report.partition_runs;
    } else if (!report.uncovered_input) {
        report.uncovered_input = SeparationPair{a, b};
    }
}

}  // namespace detail

/// Random inputs (1 to 3 elements per side) and random extension orders.
template <ClosureOperator Op>
PartitionReport check_partition_characterization(const Op& op, std::size_t trials, std::uint64_t seed,
                                                 std::size_t bound = OracleBounds{}.kakutani) {
    const std::size_t n = op.ground_size();
    require_bound("check_partition_characterization", n, bound);
    PartitionReport report;
    report.kakutani = brute_force_kakutani(op, bound).kakutani;
    if (n < 2) return report;

    Rng rng(seed);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t t = 0; t < trials; ++t) {
        auto ka = 1 + uniform_below(rng, std::min<std::size_t>(3, n - 1));
        auto kb = 1 + uniform_below(rng, std::min<std::size_t>(3, n - ka));
        auto picked = sample_without_replacement(all, ka + kb, rng);
        ElementSet a(n), b(n);
        for (std::size_t i = 0; i < ka; ++i) a.insert(picked[i]);
        for (std::size_t i = ka; i < ka + kb; ++i) b.insert(picked[i]);
        detail::record_run(op, a, b, ExtensionOrder::random(rng()), report);
    }
    return report;
}

/**
 * @brief Runs the separation on every ordered pair of disjoint non-empty
 * closed sets, once ascending and once with a seeded random order.
 */
template <ClosureOperator Op>
PartitionReport check_partition_characterization_exhaustive(const Op& op, std::uint64_t seed,
                                                            std::size_t bound = OracleBounds{}.kakutani) {
    require_bound("check_partition_characterization", op.ground_size(), bound);
    auto closed = enumerate_closed_sets(op, bound);
    PartitionReport report;
    report.kakutani = kakutani_from_closed(closed).kakutani;
    Rng rng(seed);
    for (const auto& c1 : closed) {
        if (c1.empty()) continue;
        for (const auto& c2 : closed) {
            if (c2.empty() || c1.intersects(c2)) continue;
            detail::record_run(op, c1, c2, ExtensionOrder::ascending(), report);
            detail::record_run(op, c1, c2, ExtensionOrder::random(rng()), report);
        }
    }
    return report;
}

}  // namespace halfsep
