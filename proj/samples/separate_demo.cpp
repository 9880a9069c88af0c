// Separates two vertex sets of a small tree, then two concepts of a formal context.

#include <iostream>

#include "halfsep/halfsep.hpp"

int main() {
    using namespace halfsep;

    // Geodesic convexity on a tree: the output is always a half-space partition.
    auto tree = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {0, 6}, {6, 7}});
    GeodesicClosure gamma(tree);
    auto out = mcs_separate(gamma, ElementSet(8, {3}), ElementSet(8, {7}));
    if (const auto* s = std::get_if<Separation>(&out)) {
        std::cout << "tree: H1 = " << s->first.to_string() << ", H2 = " << s->second.to_string()
                  << ", closure calls = " << s->closure_calls << ", partition = " << std::boolalpha
                  << s->is_partition() << '\n';
    }

    // Ideal/filter separation in a concept lattice.
    auto ctx = FormalContext::from_rows({{1, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}});
    auto cl = concept_lattice(ctx);
    const auto& L = cl.lattice;
    const std::vector<std::size_t> a{*L.find("(o4,a2a3a4)")}, b{*L.find("(o1o2,a1)")};
    auto r = lattice_separate(L, a, b);
    if (r.separated()) {
        std::cout << "concepts: ideal below " << L.label(r.result->top_ideal) << ", filter above "
                  << L.label(r.result->bottom_filter) << ", " << r.stats.comparisons << " comparisons\n";
    }
    return 0;
}
