#include <gtest/gtest.h>

#include "halfsep/halfsep.hpp"
#include "support.hpp"

using namespace halfsep;

namespace {

// X -> X \ {0}: not extensive.
struct DropZero {
    std::size_t n;
    std::size_t ground_size() const { return n; }
    ElementSet operator()(const ElementSet& x) const {
        auto y = x;
        y.erase(0);
        return y;
    }
};

std::vector<ElementSet> sets(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> list) {
    std::vector<ElementSet> out;
    for (auto s : list) out.emplace_back(n, s);
    return out;
}

}  // namespace

TEST(ClosureLaws, IntervalChainPasses) {
    auto r = verify_closure_laws(IntervalChainClosure(5), 500, 1);
    EXPECT_TRUE(r.passed());
    EXPECT_GE(r.samples, 500u);
}

TEST(ClosureLaws, DroppingAnElementBreaksExtensivity) {
    auto r = verify_closure_laws(DropZero{6}, 200, 2);
    EXPECT_FALSE(r.extensivity.passed);
    ASSERT_TRUE(r.extensivity.witness.has_value());
    EXPECT_EQ(*r.extensivity.witness, ElementSet(6, {0}));
}

TEST(ClosureLaws, AlphaOnRandomPlanarPoints) {
    Rng rng(3);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 20; ++i) rows.push_back({uniform01(rng), uniform01(rng)});
    EXPECT_TRUE(verify_closure_laws(AlphaClosure(PointSet::from_rows(rows)), 300, 4).passed());
}

TEST(EnumerateClosedSets, IntervalChain) {
    auto closed = enumerate_closed_sets(IntervalChainClosure(3));
    EXPECT_EQ(closed, sets(3, {{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}}));
}

TEST(EnumerateClosedSets, ThresholdFixture) {
    auto closed = enumerate_closed_sets(ThresholdClosure(4));
    EXPECT_EQ(closed.size(), 1u + 4u + 6u + 1u);
    for (const auto& c : closed) EXPECT_TRUE(c.count() <= 2 || c.is_full());
}

TEST(EnumerateClosedSets, TwoPointFixture) {
    EXPECT_EQ(enumerate_closed_sets(TwoPointClosure(5)), sets(5, {{}, {0}, {1}, {0, 1, 2, 3, 4}}));
}

TEST(EnumerateClosedSets, EnforcesBound) {
    EXPECT_THROW(enumerate_closed_sets(IntervalChainClosure(17)), BoundExceeded);
}

TEST(MaximalSeparations, ChainOfFour) {
    auto pairs = brute_force_maximal_separations(IntervalChainClosure(4), ElementSet(4, {0}), ElementSet(4, {3}));
    std::vector<SeparationPair> expected = {
        {ElementSet(4, {0}), ElementSet(4, {1, 2, 3})},
        {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})},
        {ElementSet(4, {0, 1, 2}), ElementSet(4, {3})},
    };
    std::sort(pairs.begin(), pairs.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(pairs, expected);
}

TEST(MaximalSeparations, MeetingClosuresGiveNone) {
    EXPECT_TRUE(
        brute_force_maximal_separations(IntervalChainClosure(4), ElementSet(4, {0, 2}), ElementSet(4, {1})).empty());
}

TEST(MaximalSeparations, PlanarSevenPointsNeverCover) {
    auto pts = test_support::nonkakutani_seven_points();
    AlphaClosure alpha(test_support::to_point_set(pts));
    const ElementSet x(7, {2, 3, 4}), u(7, {0, 1});
    for (std::uint64_t m = 0; m < 128; ++m) {
        auto s = ElementSet::from_mask(7, m);
        ASSERT_EQ(alpha(s), test_support::exact_alpha_closure(pts, s)) << s.to_string();
    }
    ASSERT_TRUE(is_closed(alpha, x));
    ASSERT_TRUE(is_closed(alpha, u));
    ASSERT_FALSE(x.intersects(u));
    EXPECT_TRUE(alpha(x.with(5)).intersects(u));
    EXPECT_TRUE(alpha(u.with(5)).intersects(x));

    auto pairs = brute_force_maximal_separations(alpha, x, u);
    ASSERT_FALSE(pairs.empty());
    for (const auto& [h1, h2] : pairs) {
        EXPECT_FALSE((h1 | h2).is_full());
        EXPECT_FALSE(h1.contains(5) || h2.contains(5));
    }
    auto verdict = brute_force_kakutani(alpha);
    EXPECT_FALSE(verdict.kakutani);
    auto out = mcs_separate(alpha, x, u);
    ASSERT_TRUE(separated(out));
    EXPECT_FALSE(std::get<Separation>(out).is_partition());
}

TEST(BruteForceKakutani, ThresholdFixture) {
    EXPECT_TRUE(brute_force_kakutani(ThresholdClosure(4)).kakutani);
    auto broken = brute_force_kakutani(ThresholdClosure(4, ElementSet(4, {0, 1})));
    EXPECT_FALSE(broken.kakutani);
    ASSERT_TRUE(broken.witness.has_value());
    EXPECT_FALSE(broken.witness->first.intersects(broken.witness->second));
}

TEST(BruteForceKakutani, ChainsAreKakutani) {
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_TRUE(brute_force_kakutani(IntervalChainClosure(n)).kakutani) << n;
}

TEST(BruteForceKakutani, TwoPointFixtureIsNot) {
    auto v = brute_force_kakutani(TwoPointClosure(4));
    EXPECT_FALSE(v.kakutani);
    EXPECT_EQ(v.half_spaces, 2u);  // only the empty set and E
}

TEST(PartitionCharacterization, SixVertexTree) {
    GeodesicClosure gamma(Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}));
    auto r = check_partition_characterization(gamma, 300, 5);
    EXPECT_TRUE(r.kakutani);
    EXPECT_GT(r.runs, 0u);
    EXPECT_EQ(r.non_partition_runs(), 0u);
    EXPECT_TRUE(r.consistent());
    EXPECT_TRUE(check_partition_characterization_exhaustive(gamma, 5).consistent());
}

TEST(PartitionCharacterization, K23) {
    GeodesicClosure gamma(graphs::complete_bipartite(2, 3));
    auto r = check_partition_characterization_exhaustive(gamma, 6);
    EXPECT_FALSE(r.kakutani);
    EXPECT_GT(r.non_partition_runs(), 0u);
    EXPECT_TRUE(r.consistent());
}

TEST(PartitionCharacterization, ThresholdFixtures) {
    auto ok = check_partition_characterization_exhaustive(ThresholdClosure(4), 7);
    EXPECT_TRUE(ok.kakutani);
    EXPECT_TRUE(ok.consistent());
    auto broken = check_partition_characterization_exhaustive(ThresholdClosure(6, ElementSet(6, {0, 1, 2})), 7);
    EXPECT_FALSE(broken.kakutani);
    EXPECT_TRUE(broken.consistent());
}

TEST(Oracles, SeparationRespectsClosures) {
    // A half-space separates (A, B) iff it separates (rho(A), rho(B)).
    Rng rng(8);
    for (int g = 0; g < 20; ++g) {
        GeodesicClosure gamma(random_connected_graph(8, 0.25, rng));
        auto hs = half_spaces_of(enumerate_closed_sets(gamma));
        for (int t = 0; t < 30; ++t) {
            auto a = detail::random_subset(8, 0.2, rng), b = detail::random_subset(8, 0.2, rng);
            const auto ca = gamma(a), cb = gamma(b);
            for (const auto& h : hs) {
                const bool raw = a.is_subset_of(h) && !b.intersects(h);
                const bool closed = ca.is_subset_of(h) && !cb.intersects(h);
                EXPECT_EQ(raw, closed);
            }
        }
    }
}

TEST(Oracles, NonEmptyEmptyClosureBlocksSeparation) {
    // rho(empty) = {0}: no pair of non-empty sets is half-space separable.
    FamilyClosure pointed(4, sets(4, {{0}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 2}}));
    ASSERT_EQ(pointed(ElementSet(4)), ElementSet(4, {0}));
    EXPECT_TRUE(half_spaces_of(enumerate_closed_sets(pointed)).empty());
}

TEST(Oracles, ExtensionBlockedMatchesMembership) {
    IntervalChainClosure rho(6);
    auto closed = enumerate_closed_sets(rho);
    const ElementSet a(6, {1}), b(6, {4});
    EXPECT_TRUE(is_maximal_separation(closed, a, b, ElementSet(6, {0, 1, 2}), ElementSet(6, {3, 4, 5})));
    EXPECT_FALSE(is_maximal_separation(closed, a, b, ElementSet(6, {1}), ElementSet(6, {3, 4, 5})));
    EXPECT_TRUE(extension_blocked(rho, ElementSet(6, {0, 1, 2}), ElementSet(6, {3, 4, 5})));
    EXPECT_FALSE(extension_blocked(rho, ElementSet(6, {1}), ElementSet(6, {3, 4, 5})));
}

TEST(FamilyClosure, RejectsNonIntersectionClosedFamily) {
    EXPECT_THROW(FamilyClosure(3, sets(3, {{0, 1}, {1, 2}})), std::invalid_argument);
}
