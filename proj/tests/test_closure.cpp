#include <gtest/gtest.h>

#include "halfsep/halfsep.hpp"

using namespace halfsep;

namespace {

// Chain elements 1..n map to ids 0..n-1.
ElementSet chain_set(std::size_t n, std::initializer_list<std::size_t> one_based) {
    ElementSet s(n);
    for (auto e : one_based) s.insert(e - 1);
    return s;
}

ElementSet chain_range(std::size_t n, std::size_t lo, std::size_t hi) {
    ElementSet s(n);
    for (auto e = lo; e <= hi; ++e) s.insert(e - 1);
    return s;
}

}  // namespace

TEST(IsClosed, IntervalChain) {
    IntervalChainClosure rho(5);
    EXPECT_TRUE(is_closed(rho, chain_set(5, {2, 3})));
    EXPECT_FALSE(is_closed(rho, chain_set(5, {1, 3})));
    EXPECT_EQ(rho(chain_set(5, {1, 3})), chain_set(5, {1, 2, 3}));
    EXPECT_TRUE(is_closed(rho, ElementSet::full(5)));
    EXPECT_TRUE(is_closed(ThresholdClosure(6), ElementSet::full(6)));
}

TEST(IsHalfSpace, IntervalChain) {
    IntervalChainClosure rho(5);
    EXPECT_TRUE(is_half_space(rho, chain_set(5, {1, 2})));
    EXPECT_FALSE(is_half_space(rho, chain_set(5, {2, 3})));
    EXPECT_TRUE(is_half_space(rho, ElementSet(5)));
    FamilyClosure pointed(3, {ElementSet(3, {0}), ElementSet(3, {0, 1})});
    EXPECT_FALSE(is_half_space(pointed, ElementSet(3)));
}

TEST(McsSeparate, FavorableOrderUsesThreeCalls) {
    for (std::size_t n : {3u, 5u, 10u, 40u}) {
        IntervalChainClosure rho(n);
        InstrumentedClosure counted(rho);
        auto out = mcs_separate(counted, chain_set(n, {2}), chain_set(n, {1}), ExtensionOrder::sequence({n - 1}));
        ASSERT_TRUE(separated(out));
        const auto& s = std::get<Separation>(out);
        EXPECT_EQ(s.first, chain_range(n, 2, n));
        EXPECT_EQ(s.second, chain_set(n, {1}));
        EXPECT_EQ(s.closure_calls, 3u);
        EXPECT_EQ(counted.calls(), 3u);
    }
}

TEST(McsSeparate, AscendingOrderHitsUpperBound) {
    for (std::size_t n : {3u, 5u, 10u, 40u}) {
        IntervalChainClosure rho(n);
        auto out = mcs_separate(rho, chain_set(n, {1}), chain_set(n, {2}), ExtensionOrder::ascending());
        ASSERT_TRUE(separated(out));
        const auto& s = std::get<Separation>(out);
        EXPECT_EQ(s.first, chain_set(n, {1}));
        EXPECT_EQ(s.second, chain_range(n, 2, n));
        EXPECT_EQ(s.closure_calls, 2 * n - 2);
    }
}

TEST(McsSeparate, MeetingClosuresAreInseparable) {
    IntervalChainClosure rho(5);
    InstrumentedClosure counted(rho);
    auto out = mcs_separate(counted, chain_set(5, {1, 3}), chain_set(5, {2}));
    EXPECT_TRUE(std::holds_alternative<Inseparable>(out));
    EXPECT_EQ(counted.calls(), 2u);
}

TEST(McsSeparate, RejectsBadInput) {
    IntervalChainClosure rho(4);
    EXPECT_THROW(mcs_separate(rho, ElementSet(4), ElementSet(4, {1})), std::invalid_argument);
    EXPECT_THROW(mcs_separate(rho, ElementSet(5, {0}), ElementSet(4, {1})), std::invalid_argument);
}

TEST(McsSeparate, TwoPointFixtureWorstCase) {
    for (std::size_t n : {3u, 6u, 12u}) {
        TwoPointClosure rho(n);
        auto out = mcs_separate(rho, ElementSet(n, {0}), ElementSet(n, {1}), ExtensionOrder::random(7));
        ASSERT_TRUE(separated(out));
        const auto& s = std::get<Separation>(out);
        EXPECT_EQ(s.first, ElementSet(n, {0}));
        EXPECT_EQ(s.second, ElementSet(n, {1}));
        EXPECT_EQ(s.closure_calls, 2 * n - 2);
        EXPECT_FALSE(s.is_partition());
    }
}

TEST(McsSeparate, OutputIsClosedDisjointAndBlocked) {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        auto tree = random_tree(12, rng);
        GeodesicClosure gamma(tree);
        auto a = ElementSet(12, {static_cast<std::size_t>(uniform_below(rng, 12))});
        ElementSet b(12);
        do b = ElementSet(12, {static_cast<std::size_t>(uniform_below(rng, 12))});
        while (b == a);
        auto out = mcs_separate(gamma, a, b, ExtensionOrder::random(rng()));
        ASSERT_TRUE(separated(out));
        const auto& s = std::get<Separation>(out);
        EXPECT_FALSE(s.first.intersects(s.second));
        EXPECT_TRUE(is_closed(gamma, s.first));
        EXPECT_TRUE(is_closed(gamma, s.second));
        EXPECT_TRUE(a.is_subset_of(s.first) && b.is_subset_of(s.second));
        EXPECT_TRUE(s.is_partition());
        EXPECT_LE(s.closure_calls, 2u * 12 - 2);
    }
}

TEST(ExtensionOrder, RandomIsSeededPermutation) {
    auto p = ExtensionOrder::random(3).priority(20);
    auto q = ExtensionOrder::random(3).priority(20);
    EXPECT_EQ(p, q);
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(p[i], i);
    EXPECT_NE(ExtensionOrder::random(4).priority(20), q);
}

TEST(ExtensionOrder, SequenceThenAscending) {
    auto p = ExtensionOrder::sequence({4, 1}).priority(5);
    EXPECT_EQ(p, (std::vector<std::size_t>{4, 1, 0, 2, 3}));
}

TEST(HssDecideKakutani, Examples) {
    GeodesicClosure gamma(graphs::path(3));
    EXPECT_TRUE(hss_decide_kakutani(gamma, ElementSet(3, {0}), ElementSet(3, {2})));
    EXPECT_FALSE(hss_decide_kakutani(gamma, ElementSet(3, {0, 2}), ElementSet(3, {1})));
    IntervalChainClosure rho(5);
    EXPECT_TRUE(hss_decide_kakutani(rho, chain_set(5, {1, 2}), chain_set(5, {4, 5})));
}

TEST(InstrumentedClosure, CountsIncrementalCallsOnce) {
    GeodesicClosure gamma(graphs::cycle(6));
    InstrumentedClosure counted(gamma);
    counted(ElementSet(6, {0}));
    EXPECT_EQ(counted.calls(), 1u);
    counted.extend_disjoint(ElementSet(6, {0}), 1, ElementSet(6, {3}));
    EXPECT_EQ(counted.calls(), 2u);
}

TEST(ClosureFunction, WrapsLambda) {
    auto f = ClosureFunction(4, [](const ElementSet& x) { return x; });
    EXPECT_EQ(f.ground_size(), 4u);
    EXPECT_EQ(f(ElementSet(4, {2})), ElementSet(4, {2}));
    auto out = mcs_separate(f, ElementSet(4, {0}), ElementSet(4, {1}));
    ASSERT_TRUE(separated(out));
    EXPECT_TRUE(std::get<Separation>(out).is_partition());
}
