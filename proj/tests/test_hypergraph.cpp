#include "turankit/hypergraph.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace turankit;

TEST_CASE("colex subsets and ranks", "[hypergraph]") {
    for (int n = 0; n <= 8; ++n)
        for (int j = 0; j <= n; ++j) {
            const auto sets = subsetsColex(n, j);
            REQUIRE(sets.size() == smallBinomial(n, j));
            for (std::size_t i = 0; i < sets.size(); ++i) {
                CHECK(std::popcount(sets[i]) == j);
                CHECK(colexRank(sets[i]) == i);
                if (i > 0) CHECK(sets[i - 1] < sets[i]);
            }
        }
    // Colex order: {0,1,2} < {0,1,3} < {0,2,3} < {1,2,3} < {0,1,4}.
    const auto s = subsetsColex(5, 3);
    CHECK(s[0] == 0b00111U);
    CHECK(s[3] == 0b01110U);
    CHECK(s[4] == 0b10011U);
}

TEST_CASE("builders and basic queries", "[hypergraph]") {
    const Hypergraph k5 = Hypergraph::complete(5, 3);
    CHECK(k5.edgeCount() == 10);
    CHECK(k5.isComplete());
    CHECK(k5.complement().edgeCount() == 0);
    const Hypergraph g = Hypergraph::fromEdges(4, 3, {{0, 1, 2}, {1, 2, 3}});
    CHECK(g.edgeCount() == 2);
    CHECK(g.hasEdge(0b0111));
    CHECK_FALSE(g.hasEdge(0b1011));
    CHECK(g.isCompleteOn(0b0011));  // sets below size k are vacuously complete
    CHECK(g.isEmptyOn(0b0011));
    CHECK_FALSE(g.isCompleteOn(0b1111));
    CHECK_THROWS(Hypergraph::fromEdges(4, 3, {{0, 1}}));
    CHECK_THROWS(Hypergraph::fromEdges(4, 3, {{0, 1, 4}}));
    CHECK_THROWS(Hypergraph(9, 3));
    CHECK_THROWS(Hypergraph(8, 4));  // C(8,4) = 70 edge slots exceed the 64-bit mask
    const std::vector<int> parts{3, 3};
    const Hypergraph two = Hypergraph::disjointCliques(parts, 3);
    CHECK(two.edgeCount() == 2);
}

TEST_CASE("relabeling and induced subgraphs", "[hypergraph]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Hypergraph g = Hypergraph::random(7, 3, rng);
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Hypergraph h = g.permuted(perm);
        CHECK(h.edgeCount() == g.edgeCount());
        for (VertexSet e : g.edges()) {
            VertexSet image = 0;
            for (int v : members(e)) image |= VertexSet{1} << perm[static_cast<std::size_t>(v)];
            CHECK(h.hasEdge(image));
        }
        // inducedOrdered with the identity order on a subset equals induced().
        const VertexSet s = 0b1011010;
        CHECK(g.inducedOrdered(members(s)) == g.induced(s));
        CHECK(g.complement().complement() == g);
    }
}
