#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "oracles.hpp"
#include "random.hpp"

namespace halfsep {

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Finite lattice given by its Hasse diagram.
 *
 * Elements keep the caller's ids 0..n-1. The order is stored as up-sets and
 * down-sets, once in id coordinates and once in linear-extension coordinates;
 * the latter turn sup/inf of two elements into a single bitset intersection.
 */
class FiniteLattice {
public:
    std::size_t size() const noexcept { return n_; }
    const std::string& label(std::size_t x) const { return labels_.at(x); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (labels_[i] == name) return i;
        return std::nullopt;
    }

    bool leq(std::size_t x, std::size_t y) const { return up_.at(x).contains(y); }
    bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

    std::size_t join(std::size_t x, std::size_t y) const {
        return at_rank_[*(up_rank_.at(x) & up_rank_.at(y)).first()];
    }
    std::size_t meet(std::size_t x, std::size_t y) const {
        return at_rank_[*(down_rank_.at(x) & down_rank_.at(y)).last()];
    }

    std::size_t sup(std::span<const std::size_t> s) const {
        if (s.empty()) throw std::invalid_argument("sup of an empty set");
        ElementSet acc = up_rank_.at(s[0]);
        for (auto x : s.subspan(1)) acc &= up_rank_.at(x);
        return at_rank_[*acc.first()];
    }
    std::size_t inf(std::span<const std::size_t> s) const {
        if (s.empty()) throw std::invalid_argument("inf of an empty set");
        ElementSet acc = down_rank_.at(s[0]);
        for (auto x : s.subspan(1)) acc &= down_rank_.at(x);
        return at_rank_[*acc.last()];
    }
    std::size_t sup(const ElementSet& s) const { return sup(std::span<const std::size_t>(s.members())); }
    std::size_t inf(const ElementSet& s) const { return inf(std::span<const std::size_t>(s.members())); }

    const ElementSet& up_set(std::size_t x) const { return up_.at(x); }
    const ElementSet& down_set(std::size_t x) const { return down_.at(x); }
    /// {z : lo <= z <= hi}; empty when lo is not below hi.
    ElementSet interval(std::size_t lo, std::size_t hi) const { return up_.at(lo) & down_.at(hi); }

    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_.at(x); }
    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_.at(x); }
    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }

    /// Number of elements on a longest chain.
    std::size_t height() const {
        std::vector<std::size_t> h(n_, 1);
        std::size_t best = 1;
        for (auto x : at_rank_)
            for (auto u : upper_[x]) h[u] = std::max(h[u], h[x] + 1), best = std::max(best, h[u]);
        return best;
    }
    /// Largest number of upper or lower covers of a single element.
    std::size_t max_cover_count() const {
        std::size_t c = 0;
        for (std::size_t x = 0; x < n_; ++x) c = std::max({c, upper_[x].size(), lower_[x].size()});
        return c;
    }
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t x = 0; x < n_; ++x)
            for (auto u : upper_[x]) out.emplace_back(x, u);
        return out;
    }

private:
    friend FiniteLattice build_lattice(std::size_t, std::span<const std::pair<std::size_t, std::size_t>>,
                                       std::vector<std::string>, std::size_t);

    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<ElementSet> up_, down_, up_rank_, down_rank_;
    std::vector<std::size_t> rank_, at_rank_;
    std::vector<std::vector<std::size_t>> upper_, lower_;
    std::size_t bottom_ = 0, top_ = 0;
};

constexpr std::size_t default_lattice_bound = 5000;

/**
 * @brief Builds and validates a lattice from edges (child, parent), child < parent.
 *
 * Edges need not be covers: the Hasse diagram is recomputed by transitive
 * reduction. Throws LatticeError naming the offending pair when the order
 * has a cycle or some pair lacks a unique supremum or infimum.
 */
inline FiniteLattice build_lattice(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges,
                                   std::vector<std::string> labels = {}, std::size_t max_n = default_lattice_bound) {
    if (n == 0) throw LatticeError("a lattice needs at least one element");
    require_bound("build_lattice", n, max_n);
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    }
    if (labels.size() != n) throw LatticeError("label count does not match element count");
    auto name = [&](std::size_t x) { return "'" + labels[x] + "'"; };

    std::vector<std::vector<std::size_t>> parents(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [c, p] : edges) {
        if (c >= n || p >= n) throw LatticeError("edge endpoint out of range: " + std::to_string(c) + " " + std::to_string(p));
        if (c == p) throw LatticeError("self-loop on element " + name(c));
        parents[c].push_back(p);
    }
    for (auto& ps : parents) {
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        for (auto p : ps) ++indeg[p];
    }

    FiniteLattice L;
    L.n_ = n;
    L.labels_ = labels;  // copy: name() still reads labels
    // Kahn's algorithm, smallest id first, gives a deterministic linear extension
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t x = 0; x < n; ++x)
        if (indeg[x] == 0) ready.push(x);
    while (!ready.empty()) {
        auto x = ready.top();
        ready.pop();
        L.at_rank_.push_back(x);
        for (auto p : parents[x])
            if (--indeg[p] == 0) ready.push(p);
    }
    if (L.at_rank_.size() != n) {
        for (std::size_t x = 0; x < n; ++x)
            if (indeg[x] > 0) throw LatticeError("order relation has a cycle through element " + name(x));
    }
    L.rank_.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) L.rank_[L.at_rank_[r]] = r;

    L.up_.assign(n, ElementSet(n));
    for (std::size_t r = n; r-- > 0;) {
        auto x = L.at_rank_[r];
        L.up_[x].insert(x);
        for (auto p : parents[x]) L.up_[x] |= L.up_[p];
    }
    L.down_.assign(n, ElementSet(n));
    for (std::size_t x = 0; x < n; ++x) L.up_[x].for_each([&](std::size_t y) { L.down_[y].insert(x); });
    L.up_rank_.assign(n, ElementSet(n));
    L.down_rank_.assign(n, ElementSet(n));
    for (std::size_t x = 0; x < n; ++x) {
        L.up_[x].for_each([&](std::size_t y) { L.up_rank_[x].insert(L.rank_[y]); });
        L.down_[x].for_each([&](std::size_t y) { L.down_rank_[x].insert(L.rank_[y]); });
    }

    // a finite poset is a lattice iff every pair has a least upper and a greatest lower bound
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            ElementSet ub = L.up_rank_[x] & L.up_rank_[y];
            auto j = ub.first();
            if (!j || L.up_rank_[L.at_rank_[*j]] != ub)
                throw LatticeError("elements " + name(x) + " and " + name(y) + " have no unique supremum");
            ElementSet lb = L.down_rank_[x] & L.down_rank_[y];
            auto m = lb.last();
            if (!m || L.down_rank_[L.at_rank_[*m]] != lb)
                throw LatticeError("elements " + name(x) + " and " + name(y) + " have no unique infimum");
        }
    }
    L.bottom_ = L.at_rank_.front();
    L.top_ = L.at_rank_.back();
    if (L.up_[L.bottom_].count() != n) throw LatticeError("no bottom element");
    if (L.down_[L.top_].count() != n) throw LatticeError("no top element");

    // covers: minimal elements of the strict up-set
    L.upper_.assign(n, {});
    L.lower_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
        ElementSet strict = L.up_[x];
        strict.erase(x);
        strict.for_each([&](std::size_t y) {
            ElementSet below = L.down_[y] & strict;
            if (below.count() == 1) L.upper_[x].push_back(y);
        });
        for (auto y : L.upper_[x]) L.lower_[y].push_back(x);
    }
    for (auto& v : L.lower_) std::sort(v.begin(), v.end());
    return L;
}

inline FiniteLattice build_lattice(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges,
                                   std::vector<std::string> labels = {}, std::size_t max_n = default_lattice_bound) {
    return build_lattice(n, std::span<const std::pair<std::size_t, std::size_t>>(edges.begin(), edges.size()),
                         std::move(labels), max_n);
}

/// Family of sets ordered by inclusion; must form a lattice.
inline FiniteLattice lattice_from_family(const std::vector<ElementSet>& family, std::vector<std::string> labels = {},
                                         std::size_t max_n = default_lattice_bound) {
    const std::size_t n = family.size();
    require_bound("lattice_from_family", n, max_n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (family[i] == family[j]) throw LatticeError("family contains a duplicate set " + family[i].to_string());
            if (family[i].is_subset_of(family[j])) edges.emplace_back(i, j);
        }
    if (labels.empty())
        for (const auto& s : family) labels.push_back(s.to_string());
    return build_lattice(n, edges, std::move(labels), max_n);
}

// ---------------------------------------------------------------------------
// Standard lattices

namespace lattices {

/// Subsets of {0..k-1}; element i is the subset with bitmask i.
inline FiniteLattice boolean(std::size_t k) {
    require_bound("lattices::boolean", k, 12);
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t b = 0; b < k; ++b)
            if (!(m >> b & 1)) edges.emplace_back(m, m | (std::size_t{1} << b));
        labels.push_back(ElementSet::from_mask(k, m).to_string());
    }
    return build_lattice(n, edges, std::move(labels));
}

/// 0 < 1 < ... < n-1.
inline FiniteLattice chain(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_lattice(n, edges);
}

/// Diamond: bottom 0, atoms 1..3, top 4.
inline FiniteLattice m3() {
    return build_lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

/// Pentagon: 0 < a < b < 1 and 0 < c < 1.
inline FiniteLattice n5() {
    return build_lattice(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

/// Random intersection-closed family over a small ground set, ordered by inclusion.
inline FiniteLattice random_closure_lattice(std::size_t ground, std::size_t generators, Rng& rng,
                                            std::size_t max_size = 12) {
    if (ground == 0 || ground > 20) throw std::invalid_argument("ground set size must be in 1..20");
    for (;;) {
        std::vector<ElementSet> fam{ElementSet::full(ground)};
        for (std::size_t g = 0; g < generators; ++g) {
            ElementSet s(ground);
            for (std::size_t e = 0; e < ground; ++e)
                if (uniform_below(rng, 2)) s.insert(e);
            fam.push_back(s);
        }
        // close under intersection
        for (bool grew = true; grew;) {
            grew = false;
            std::sort(fam.begin(), fam.end());
            fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
            const std::size_t m = fam.size();
            for (std::size_t i = 0; i < m && fam.size() <= max_size; ++i)
                for (std::size_t j = i + 1; j < m; ++j) {
                    auto c = fam[i] & fam[j];
                    if (!std::binary_search(fam.begin(), fam.begin() + static_cast<std::ptrdiff_t>(m), c)) {
                        fam.push_back(c);
                        grew = true;
                    }
                }
            if (fam.size() > max_size) break;
        }
        std::sort(fam.begin(), fam.end());
        fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
        if (fam.size() <= max_size) return lattice_from_family(fam);
    }
}

}  // namespace lattices

// ---------------------------------------------------------------------------
// Lambda closure

/// X maps to the order interval [inf X, sup X]; the empty set is closed.
class LambdaClosure {
public:
    explicit LambdaClosure(const FiniteLattice& lattice) : lattice_(&lattice) {}

    std::size_t ground_size() const noexcept { return lattice_->size(); }
    const FiniteLattice& lattice() const noexcept { return *lattice_; }

    ElementSet operator()(const ElementSet& x) const {
        if (x.universe() != ground_size()) throw std::invalid_argument("subset over a different lattice");
        if (x.empty()) return x;
        const auto m = x.members();
        return lattice_->interval(lattice_->inf(m), lattice_->sup(m));
    }

private:
    const FiniteLattice* lattice_;
};

inline ElementSet lambda_closure(const FiniteLattice& lattice, const ElementSet& x) { return LambdaClosure(lattice)(x); }

/// Intervals [lo, hi] of the lattice, plus the empty set: the lambda-closed sets by enumeration.
inline std::vector<ElementSet> lambda_closed_sets(const FiniteLattice& lattice) {
    std::vector<ElementSet> out{ElementSet(lattice.size())};
    for (std::size_t lo = 0; lo < lattice.size(); ++lo)
        lattice.up_set(lo).for_each([&](std::size_t hi) { out.push_back(lattice.interval(lo, hi)); });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

// ---------------------------------------------------------------------------
// Ideal/filter separation

/// How the cover walks pick among qualifying covers.
class CoverChoice {
public:
    enum class Rule { lowest_index, random, preference };

    static CoverChoice lowest_index() { return CoverChoice(Rule::lowest_index, 0, {}); }
    static CoverChoice random(std::uint64_t seed) { return CoverChoice(Rule::random, seed, {}); }
    /// Elements earlier in `order` are tried first; the rest by ascending id.
    static CoverChoice preference(std::vector<std::size_t> order) {
        return CoverChoice(Rule::preference, 0, std::move(order));
    }

    Rule rule() const noexcept { return rule_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<std::size_t>& order() const noexcept { return order_; }

private:
    CoverChoice(Rule r, std::uint64_t seed, std::vector<std::size_t> order)
        : rule_(r), seed_(seed), order_(std::move(order)) {}
    Rule rule_;
    std::uint64_t seed_;
    std::vector<std::size_t> order_;
};

struct IdealFilter {
    std::size_t top_ideal = 0;
    std::size_t bottom_filter = 0;
    /// True if A went into the ideal, false if B did.
    bool a_in_ideal = true;

    ElementSet ideal(const FiniteLattice& L) const { return L.down_set(top_ideal); }
    ElementSet filter(const FiniteLattice& L) const { return L.up_set(bottom_filter); }
    bool is_partition(const FiniteLattice& L) const { return (ideal(L) | filter(L)).is_full(); }
};

struct LatticeSeparationStats {
    /// Order-relation evaluations, including failed cover checks.
    std::size_t comparisons = 0;
    std::size_t upward_steps = 0;
    std::size_t downward_steps = 0;
};

struct LatticeSeparation {
    std::optional<IdealFilter> result;  // nullopt means "No"
    LatticeSeparationStats stats;
    bool separated() const noexcept { return result.has_value(); }
};

/**
 * @brief Maximal ideal/filter separation of A and B (or "No").
 *
 * First compares sup and inf of the inputs; then climbs from the
 * ideal's top through upper covers and descends from the filter's bottom
 * through lower covers, as long as the two stay disjoint.
 */
inline LatticeSeparation lattice_separate(const FiniteLattice& L, std::span<const std::size_t> a,
                                          std::span<const std::size_t> b,
                                          const CoverChoice& choice = CoverChoice::lowest_index()) {
    if (a.empty() || b.empty()) throw std::invalid_argument("lattice_separate: A and B must be non-empty");
    LatticeSeparation out;
    auto& st = out.stats;
    auto leq = [&](std::size_t x, std::size_t y) {
        ++st.comparisons;
        return L.leq(x, y);
    };

    const auto top_a = L.sup(a), bot_a = L.inf(a), top_b = L.sup(b), bot_b = L.inf(b);
    IdealFilter r;
    if (!leq(bot_b, top_a)) {
        r = {top_a, bot_b, true};
    } else if (!leq(bot_a, top_b)) {
        r = {top_b, bot_a, false};
    } else {
        return out;
    }

    Rng rng(choice.seed());
    auto arrange = [&](std::vector<std::size_t> covers) {
        switch (choice.rule()) {
            case CoverChoice::Rule::lowest_index:
                break;
            case CoverChoice::Rule::random:
                shuffle(covers, rng);
                break;
            case CoverChoice::Rule::preference: {
                const auto& pref = choice.order();
                auto key = [&](std::size_t x) {
                    auto it = std::find(pref.begin(), pref.end(), x);
                    return std::pair{static_cast<std::size_t>(it - pref.begin()), x};
                };
                std::sort(covers.begin(), covers.end(), [&](auto p, auto q) { return key(p) < key(q); });
                break;
            }
        }
        return covers;
    };

    for (bool moved = true; moved;) {
        moved = false;
        for (auto u : arrange(L.upper_covers(r.top_ideal)))
            if (!leq(r.bottom_filter, u)) {
                r.top_ideal = u;
                ++st.upward_steps;
                moved = true;
                break;
            }
    }
    for (bool moved = true; moved;) {
        moved = false;
        for (auto l : arrange(L.lower_covers(r.bottom_filter)))
            if (!leq(l, r.top_ideal)) {
                r.bottom_filter = l;
                ++st.downward_steps;
                moved = true;
                break;
            }
    }
    out.result = r;
    return out;
}

inline LatticeSeparation lattice_separate(const FiniteLattice& L, const ElementSet& a, const ElementSet& b,
                                          const CoverChoice& choice = CoverChoice::lowest_index()) {
    const auto am = a.members(), bm = b.members();
    return lattice_separate(L, std::span<const std::size_t>(am), std::span<const std::size_t>(bm), choice);
}

// ---------------------------------------------------------------------------
// Diagnostics

/// Exhaustive check of a ^ (b v c) = (a ^ b) v (a ^ c).
inline bool is_distributive(const FiniteLattice& L, std::size_t max_n = 500) {
    const std::size_t n = L.size();
    require_bound("is_distributive", n, max_n);
    std::vector<std::uint32_t> jn(n * n), mt(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            jn[x * n + y] = static_cast<std::uint32_t>(L.join(x, y));
            mt[x * n + y] = static_cast<std::uint32_t>(L.meet(x, y));
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto ab = mt[a * n + b];
            for (std::size_t c = b + 1; c < n; ++c)
                if (mt[a * n + jn[b * n + c]] != jn[ab * n + mt[a * n + c]]) return false;
        }
    return true;
}

struct LatticeKakutaniReport {
    bool distributive = false;
    std::size_t runs = 0;
    std::size_t partition_runs = 0;
    std::size_t inseparable = 0;
    /// Inputs of one run that left elements uncovered.
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness;

    std::size_t non_partition_runs() const noexcept { return runs - partition_runs; }
    /// Every run partitions exactly when the lattice is distributive.
    bool consistent() const noexcept { return distributive == (non_partition_runs() == 0); }
};

/**
 * @brief Runs lattice_separate on disjoint-closure input pairs and compares
 * "always a partition" with distributivity.
 *
 * Lattices with at most `exhaustive_limit` elements get every pair of
 * intervals (as two-element inputs {lo, hi}); then `trials` random pairs of
 * 1-3 elements each with random cover choice.
 */
inline LatticeKakutaniReport lattice_kakutani_check(const FiniteLattice& L, std::size_t trials, std::uint64_t seed,
                                                    std::size_t exhaustive_limit = 24, std::size_t max_n = 500) {
    require_bound("lattice_kakutani_check", L.size(), max_n);
    LatticeKakutaniReport rep;
    rep.distributive = is_distributive(L, max_n);
    const std::size_t n = L.size();

    auto run = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, const CoverChoice& c) {
        auto res = lattice_separate(L, std::span<const std::size_t>(a), std::span<const std::size_t>(b), c);
        if (!res.separated()) {
            ++rep.inseparable;
            return;
        }
        ++rep.runs;
        if (res.result->is_partition(L))
            ++rep.partition_runs;
        else if (!rep.witness)
            rep.witness.emplace(a, b);
    };

    if (n <= exhaustive_limit) {
        std::vector<std::pair<std::size_t, std::size_t>> intervals;
        for (std::size_t lo = 0; lo < n; ++lo)
            L.up_set(lo).for_each([&](std::size_t hi) { intervals.emplace_back(lo, hi); });
        for (auto [alo, ahi] : intervals)
            for (auto [blo, bhi] : intervals) {
                if (L.interval(alo, ahi).intersects(L.interval(blo, bhi))) continue;
                run({alo, ahi}, {blo, bhi}, CoverChoice::lowest_index());
            }
    }
    Rng rng(seed);
    for (std::size_t t = 0; t < trials && n >= 2; ++t) {
        auto pick = [&] {
            std::vector<std::size_t> s(1 + uniform_below(rng, 3));
            for (auto& x : s) x = uniform_below(rng, n);
            return s;
        };
        auto a = pick(), b = pick();
        run(a, b, CoverChoice::random(derive_seed(seed, t)));
    }
    return rep;
}

}  // namespace halfsep
