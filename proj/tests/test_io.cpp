#include <gtest/gtest.h>

#include <sstream>

#include "halfsep/halfsep.hpp"

using namespace halfsep;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(GraphIo, RoundTrip) {
    auto g = graphs::complete_bipartite(2, 3);
    std::stringstream ss;
    write_graph(ss, g);
    auto back = read_graph(ss);
    EXPECT_EQ(back.size(), 5u);
    EXPECT_EQ(back.edges(), g.edges());
}

TEST(GraphIo, CommentsAndBlankLines) {
    std::stringstream ss("# path\n\n3 2\n0 1\n  # middle\n1 2\n");
    EXPECT_EQ(read_graph(ss).edge_count(), 2u);
}

TEST(GraphIo, Errors) {
    auto parse = [](const std::string& text) {
        return error_of([&] {
            std::stringstream ss(text);
            read_graph(ss, "g.txt");
        });
    };
    EXPECT_EQ(parse(""), "g.txt:0: empty graph file");
    EXPECT_EQ(parse("3\n"), "g.txt:1: header must be \"n m\"");
    EXPECT_EQ(parse("3 1\n0 x\n"), "g.txt:2: expected a non-negative integer, got 'x'");
    EXPECT_EQ(parse("3 2\n0 1\n"), "g.txt:2: header announces 2 edges, found 1");
    EXPECT_NE(parse("3 1\n0 7\n").find("g.txt:2: "), std::string::npos);
    EXPECT_NE(parse("3 2\n0 1\n1 0\n").find("repeated edge"), std::string::npos);
    EXPECT_EQ(error_of([] { load_graph("/nonexistent/g.txt"); }), "/nonexistent/g.txt: cannot open file");
}

TEST(LatticeIo, RoundTripAndErrors) {
    auto L = lattices::n5();
    std::stringstream ss;
    write_lattice(ss, L);
    auto back = read_lattice(ss);
    EXPECT_EQ(back.cover_edges(), L.cover_edges());

    std::stringstream bad("3\n0 1\n0 2\n");
    auto msg = error_of([&] { read_lattice(bad, "l.txt"); });
    EXPECT_NE(msg.find("l.txt:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("not a lattice"), std::string::npos) << msg;
    std::stringstream range("2\n0 2\n");
    EXPECT_NE(error_of([&] { read_lattice(range, "l.txt"); }).find("l.txt:2: element id out of range"), std::string::npos);
    std::stringstream big("9\n");
    EXPECT_NE(error_of([&] { read_lattice(big, "l.txt", 8); }).find("exceeds the bound"), std::string::npos);
}

TEST(ContextIo, RoundTripAndErrors) {
    auto ctx = FormalContext::from_rows({{1, 0, 0, 1}, {1, 0, 1, 0}});
    std::stringstream ss;
    write_context(ss, ctx);
    EXPECT_EQ(ss.str(), "object,a1,a2,a3,a4\no1,1,0,0,1\no2,1,0,1,0\n");
    auto back = read_context(ss);
    EXPECT_EQ(back.objects(), ctx.objects());
    EXPECT_EQ(back.row(1), ctx.row(1));

    std::stringstream bad("object,a\no1,2\n");
    EXPECT_EQ(error_of([&] { read_context(bad, "c.csv"); }), "c.csv:2: incidence entries must be 0 or 1, got '2'");
    std::stringstream ragged("object,a,b\no1,1\n");
    EXPECT_EQ(error_of([&] { read_context(ragged, "c.csv"); }), "c.csv:2: expected 3 fields, got 2");
}

TEST(PointIo, RoundTripAndErrors) {
    auto ps = PointSet::from_rows({{0.5, -1}, {1e-3, 2}});
    std::vector<int> labels{1, 0};
    std::stringstream ss;
    write_points(ss, ps, &labels);
    auto back = read_points(ss);
    EXPECT_EQ(back.points.coordinates(), ps.coordinates());
    ASSERT_TRUE(back.labels.has_value());
    EXPECT_EQ(*back.labels, labels);

    std::stringstream unlabeled("2\n1,2\n3,4\n");
    EXPECT_FALSE(read_points(unlabeled).labels.has_value());
    std::stringstream mixed("2\n1,2\n3,4,1\n");
    EXPECT_EQ(error_of([&] { read_points(mixed, "p.csv"); }), "p.csv:3: label column must be present on all lines or none");
    std::stringstream nan("1\nnan\n");
    EXPECT_NE(error_of([&] { read_points(nan, "p.csv"); }).find("p.csv:2:"), std::string::npos);
}

TEST(DataFiles, Load) {
    const std::string dir = HALFSEP_DATA_DIR;
    EXPECT_FALSE(pasch_check(load_graph(dir + "/k23.txt")).holds);
    EXPECT_TRUE(load_graph(dir + "/tree.txt").is_tree());
    EXPECT_TRUE(pasch_check(load_graph(dir + "/c5.txt")).holds);
    EXPECT_FALSE(is_distributive(load_lattice(dir + "/m3.txt")));
    EXPECT_TRUE(is_distributive(load_lattice(dir + "/boolean3.txt")));
    EXPECT_EQ(concept_lattice(load_context(dir + "/context4x4.csv")).lattice.size(), 9u);
    EXPECT_EQ(load_points(dir + "/points2d.csv").points.size(), 6u);
}
