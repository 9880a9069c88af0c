#include <gtest/gtest.h>

#include "halfsep/halfsep.hpp"

using namespace halfsep;

namespace {

FormalContext four_by_four_context() {
    return FormalContext::from_rows({{1, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}});
}

std::size_t id(const FiniteLattice& L, const std::string& label) {
    auto x = L.find(label);
    if (!x) throw std::runtime_error("no element labelled " + label);
    return *x;
}

// Maximal disjoint pairs of the lambda system containing the given ideal/filter input.
bool in_maximal_set(const FiniteLattice& L, const ElementSet& a, const ElementSet& b, const IdealFilter& r) {
    auto closed = lambda_closed_sets(L);
    const auto ideal = r.ideal(L), filter = r.filter(L);
    const auto& h_a = r.a_in_ideal ? ideal : filter;
    const auto& h_b = r.a_in_ideal ? filter : ideal;
    return is_maximal_separation(closed, a, b, h_a, h_b);
}

}  // namespace

TEST(BuildLattice, BooleanThree) {
    auto L = lattices::boolean(3);
    EXPECT_EQ(L.size(), 8u);
    EXPECT_EQ(L.bottom(), 0u);
    EXPECT_EQ(L.top(), 7u);
    EXPECT_EQ(L.height(), 4u);
    EXPECT_EQ(L.max_cover_count(), 3u);
    EXPECT_EQ(L.cover_edges().size(), 12u);
}

TEST(BuildLattice, Errors) {
    EXPECT_THROW(build_lattice(3, {{0, 1}, {0, 2}}), LatticeError);              // two maximal elements
    EXPECT_THROW(build_lattice(3, {{0, 1}, {1, 2}, {2, 0}}), LatticeError);      // cycle
    EXPECT_THROW(build_lattice(2, {{0, 5}}), LatticeError);                      // unknown element
    EXPECT_THROW(build_lattice(0, std::initializer_list<std::pair<std::size_t, std::size_t>>{}), LatticeError);
    // Two minimal upper bounds for a, b: not a lattice.
    try {
        build_lattice(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}, {"0", "a", "b", "c", "d", "1"});
        FAIL() << "expected LatticeError";
    } catch (const LatticeError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("'a'"), std::string::npos) << msg;
        EXPECT_NE(msg.find("'b'"), std::string::npos) << msg;
    }
}

TEST(BuildLattice, NonCoverEdgesAreReduced) {
    auto L = build_lattice(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(L.cover_edges().size(), 2u);
    EXPECT_EQ(L.upper_covers(0), (std::vector<std::size_t>{1}));
}

TEST(BuildLattice, SingleElement) {
    auto L = build_lattice(1, std::initializer_list<std::pair<std::size_t, std::size_t>>{});
    EXPECT_EQ(L.top(), L.bottom());
}

TEST(SupInf, Examples) {
    auto B = lattices::boolean(3);
    EXPECT_EQ(B.sup(ElementSet(8, {5})), 5u);
    EXPECT_EQ(B.sup(ElementSet(8, {1, 2})), 3u);
    EXPECT_EQ(B.inf(ElementSet(8, {3, 6})), 2u);
    auto C = lattices::chain(5);
    EXPECT_EQ(C.sup(ElementSet(5, {1, 3})), 3u);
    EXPECT_EQ(C.inf(ElementSet(5, {1, 3})), 1u);
    EXPECT_THROW(C.sup(ElementSet(5)), std::invalid_argument);
    auto M = lattices::m3();
    EXPECT_EQ(M.join(1, 2), 4u);
    EXPECT_EQ(M.meet(1, 2), 0u);
}

TEST(Lambda, Examples) {
    auto B2 = lattices::boolean(2);
    EXPECT_EQ(lambda_closure(B2, ElementSet(4, {1, 2})), ElementSet::full(4));
    EXPECT_EQ(lambda_closure(B2, ElementSet(4, {2})), ElementSet(4, {2}));
    auto C = lattices::chain(5);
    EXPECT_EQ(lambda_closure(C, ElementSet(5, {1, 3})), ElementSet(5, {1, 2, 3}));
    EXPECT_EQ(lambda_closure(C, ElementSet(5)), ElementSet(5));
}

TEST(Lambda, ClosedSetsAreIntervalsPlusEmpty) {
    auto L = lattices::n5();
    auto closed = lambda_closed_sets(L);
    EXPECT_EQ(closed, enumerate_closed_sets(LambdaClosure(L)));
    std::size_t comparable = 0;
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y) comparable += L.leq(x, y);
    EXPECT_EQ(closed.size(), comparable + 1);
}

TEST(Lambda, ClosureLaws) {
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        auto L = lattices::random_closure_lattice(6, 4, rng, 40);
        EXPECT_TRUE(verify_closure_laws(LambdaClosure(L), 200, rng()).passed());
    }
}

TEST(Distributive, Examples) {
    EXPECT_TRUE(is_distributive(lattices::boolean(3)));
    EXPECT_TRUE(is_distributive(lattices::chain(6)));
    EXPECT_FALSE(is_distributive(lattices::m3()));
    EXPECT_FALSE(is_distributive(lattices::n5()));
    EXPECT_FALSE(is_distributive(partition_lattice(3).lattice));
}

TEST(LatticeSeparate, BottomVersusTopTakesFirstBranch) {
    for (const auto& L : {lattices::chain(2), lattices::m3(), lattices::boolean(3)}) {
        const std::vector<std::size_t> a{L.bottom()}, b{L.top()};
        auto r = lattice_separate(L, a, b);
        ASSERT_TRUE(r.separated());
        EXPECT_TRUE(r.result->a_in_ideal);
        EXPECT_EQ(r.stats.comparisons >= 1, true);
    }
    auto C2 = lattices::chain(2);
    const std::vector<std::size_t> a{0}, b{1};
    auto r = lattice_separate(C2, a, b);
    EXPECT_EQ(r.result->top_ideal, 0u);
    EXPECT_EQ(r.result->bottom_filter, 1u);
    auto flipped = lattice_separate(C2, b, a);
    ASSERT_TRUE(flipped.separated());
    EXPECT_FALSE(flipped.result->a_in_ideal);
}

TEST(LatticeSeparate, OverlappingClosuresGiveNo) {
    auto C = lattices::chain(5);
    const std::vector<std::size_t> a{0, 4}, b{2};
    EXPECT_FALSE(lattice_separate(C, a, b).separated());
    const std::vector<std::size_t> none;
    EXPECT_THROW(lattice_separate(C, none, b), std::invalid_argument);
}

TEST(LatticeSeparate, ConceptLatticeEndpoints) {
    auto ctx = four_by_four_context();
    auto cl = concept_lattice(ctx);
    const auto& L = cl.lattice;
    ASSERT_EQ(L.size(), 9u);
    const auto a_el = id(L, "(o4,a2a3a4)"), b_el = id(L, "(o1o2,a1)");
    const ElementSet a(9, {a_el}), b(9, {b_el});

    auto r = lattice_separate(L, a, b);
    ASSERT_TRUE(r.separated());
    EXPECT_EQ(L.label(r.result->top_ideal), "(o1o4,a4)");
    EXPECT_EQ(L.label(r.result->bottom_filter), "(o2,a1a3)");
    EXPECT_TRUE(in_maximal_set(L, a, b, *r.result));
    const auto covered = r.result->ideal(L) | r.result->filter(L);
    EXPECT_FALSE(covered.contains(id(L, "(o3o4,a2a3)")));
    EXPECT_FALSE(r.result->is_partition(L));

    auto alt = lattice_separate(L, a, b, CoverChoice::preference({id(L, "(o3o4,a2a3)")}));
    ASSERT_TRUE(alt.separated());
    EXPECT_NE(alt.result->top_ideal, r.result->top_ideal);
    EXPECT_TRUE(in_maximal_set(L, a, b, *alt.result));
}

TEST(LatticeSeparate, PartitionLatticeEndpoints) {
    auto pl = partition_lattice(5);
    const auto& L = pl.lattice;
    const std::vector<std::size_t> a{pl.index_of("P(w,x,y,y,z)"), pl.index_of("P(w,x,y,z,z)")};
    const std::vector<std::size_t> b{pl.index_of("P(y,y,y,y,z)"), pl.index_of("P(y,y,y,z,y)")};
    EXPECT_EQ(format_blocks(pl.partitions[L.sup(std::span<const std::size_t>(b))]), "{1,2,3}{4}{5}");
    EXPECT_EQ(format_blocks(pl.partitions[L.inf(std::span<const std::size_t>(a))]), "{1}{2}{3,4,5}");

    auto r = lattice_separate(L, a, b);
    ASSERT_TRUE(r.separated());
    EXPECT_FALSE(r.result->a_in_ideal);
    EXPECT_EQ(pl.partitions[r.result->top_ideal], parse_partition("P(w,w,x,y,z)"));
    EXPECT_EQ(pl.partitions[r.result->bottom_filter], parse_partition("P(y,z,y,y,y)"));

    auto preferred = lattice_separate(L, a, b, CoverChoice::preference({pl.index_of("P(y,z,z,z,z)")}));
    ASSERT_TRUE(preferred.separated());
    EXPECT_EQ(pl.partitions[preferred.result->top_ideal], parse_partition("P(w,w,x,y,z)"));
    EXPECT_EQ(pl.partitions[preferred.result->bottom_filter], parse_partition("P(y,z,z,z,z)"));

    // Maximality against the definition: no cover move remains.
    for (const auto* res : {&r, &preferred}) {
        const auto& f = *res->result;
        EXPECT_FALSE(L.leq(f.bottom_filter, f.top_ideal));
        for (auto u : L.upper_covers(f.top_ideal)) EXPECT_TRUE(L.leq(f.bottom_filter, u));
        for (auto l : L.lower_covers(f.bottom_filter)) EXPECT_TRUE(L.leq(l, f.top_ideal));
    }
}

TEST(LatticeSeparate, SeparabilityThreeWayEquivalence) {
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        auto L = lattices::random_closure_lattice(5, 3 + uniform_below(rng, 3), rng, 20);
        const std::size_t n = L.size();
        for (int s = 0; s < 30; ++s) {
            auto a = detail::random_subset(n, 0.3, rng), b = detail::random_subset(n, 0.3, rng);
            if (a.empty() || b.empty()) continue;
            const auto ta = L.sup(a), bb = L.inf(b);
            const bool order = !L.leq(bb, ta);
            const bool disjoint = !L.up_set(bb).intersects(L.down_set(ta));
            bool exists = false;
            for (std::size_t x = 0; x < n && !exists; ++x)
                for (std::size_t y = 0; y < n && !exists; ++y)
                    exists = a.is_subset_of(L.down_set(x)) && b.is_subset_of(L.up_set(y)) &&
                             !L.down_set(x).intersects(L.up_set(y));
            EXPECT_EQ(order, disjoint);
            EXPECT_EQ(order, exists);
        }
    }
}

TEST(LatticeSeparate, AgreesWithGreedyOnLambda) {
    Rng rng(3);
    std::size_t runs = 0;
    for (int t = 0; t < 40; ++t) {
        auto L = lattices::random_closure_lattice(5, 2 + uniform_below(rng, 4), rng, 16);
        if (L.size() > 16) continue;
        LambdaClosure lambda(L);
        auto closed = lambda_closed_sets(L);
        const std::size_t n = L.size();
        for (int s = 0; s < 20; ++s) {
            auto a = detail::random_subset(n, 0.25, rng), b = detail::random_subset(n, 0.25, rng);
            if (a.empty() || b.empty()) continue;
            auto lat = lattice_separate(L, a, b, CoverChoice::random(rng()));
            auto greedy = mcs_separate(lambda, a, b, ExtensionOrder::random(rng()));
            ASSERT_EQ(lat.separated(), separated(greedy));
            if (!lat.separated()) continue;
            ++runs;
            const auto& f = *lat.result;
            EXPECT_TRUE(is_closed(lambda, f.ideal(L)));
            EXPECT_TRUE(is_closed(lambda, f.filter(L)));
            EXPECT_TRUE(in_maximal_set(L, a, b, f));
            const auto& g = std::get<Separation>(greedy);
            EXPECT_TRUE(is_maximal_separation(closed, a, b, g.first, g.second));
        }
    }
    EXPECT_GT(runs, 50u);
}

TEST(LatticeSeparate, CoverStepsWithinHeightTimesCovers) {
    Rng rng(4);
    for (int t = 0; t < 40; ++t) {
        auto L = lattices::random_closure_lattice(7, 5, rng, 200);
        const std::size_t n = L.size();
        const std::vector<std::size_t> a{static_cast<std::size_t>(uniform_below(rng, n))};
        const std::vector<std::size_t> b{static_cast<std::size_t>(uniform_below(rng, n))};
        auto r = lattice_separate(L, a, b, CoverChoice::random(rng()));
        EXPECT_LE(r.stats.upward_steps + r.stats.downward_steps, 2 * L.height());
        EXPECT_LE(r.stats.comparisons, 2 + 2 * (L.height() + 1) * L.max_cover_count());
    }
}

TEST(LatticeKakutani, Examples) {
    auto b3 = lattice_kakutani_check(lattices::boolean(3), 100, 1);
    EXPECT_TRUE(b3.distributive);
    EXPECT_EQ(b3.non_partition_runs(), 0u);
    EXPECT_TRUE(b3.consistent());

    auto m3 = lattice_kakutani_check(lattices::m3(), 100, 1);
    EXPECT_FALSE(m3.distributive);
    EXPECT_GT(m3.non_partition_runs(), 0u);
    EXPECT_TRUE(m3.consistent());
    ASSERT_TRUE(m3.witness.has_value());

    auto p3 = lattice_kakutani_check(partition_lattice(3).lattice, 100, 1);
    EXPECT_FALSE(p3.distributive);
    EXPECT_GT(p3.non_partition_runs(), 0u);

    EXPECT_TRUE(lattice_kakutani_check(lattices::n5(), 100, 1).consistent());
    EXPECT_TRUE(lattice_kakutani_check(lattices::chain(7), 100, 1).consistent());
}

TEST(LatticeKakutani, MatchesBruteForceLambda) {
    // For small lattices the lambda system is Kakutani iff the lattice is distributive.
    Rng rng(5);
    for (int t = 0; t < 25; ++t) {
        auto L = lattices::random_closure_lattice(4, 2 + uniform_below(rng, 4), rng, 12);
        if (L.size() > 12) continue;
        EXPECT_EQ(brute_force_kakutani(LambdaClosure(L)).kakutani, is_distributive(L));
    }
}

TEST(LatticeFromFamily, InclusionOrder) {
    std::vector<ElementSet> fam = {ElementSet(3), ElementSet(3, {0}), ElementSet(3, {1}), ElementSet::full(3)};
    auto L = lattice_from_family(fam);
    EXPECT_EQ(L.size(), 4u);
    EXPECT_TRUE(L.leq(0, 3));
    EXPECT_FALSE(L.leq(1, 2));
    EXPECT_FALSE(is_distributive(lattice_from_family(
        {ElementSet(3), ElementSet(3, {0}), ElementSet(3, {1}), ElementSet(3, {2}), ElementSet::full(3)})));
}
