#include "turankit/bounds.hpp"
#include "turankit/density.hpp"
#include "turankit/hypergraph.hpp"

#include <catch_amalgamated.hpp>

#include <vector>

using namespace turankit;

namespace {

// Oracle: K_g density of the balanced l-partite construction on l*s
// vertices (k-sets are edges unless k of them share a part), counted by
// choosing c_j vertices from part j with every c_j <= k-1.
Rational finitePartiteDensity(long k, long g, long l, long s) {
    Integer hits = 0;
    std::vector<long> c;
    auto rec = [&](auto&& self, long remaining) -> void {
        if (static_cast<long>(c.size()) == l) {
            if (remaining == 0) {
                Integer ways = 1;
                for (long cj : c) ways *= binomial(s, cj);
                hits += ways;
            }
            return;
        }
        for (long cj = 0; cj <= std::min(k - 1, remaining); ++cj) {
            c.push_back(cj);
            self(self, remaining - cj);
            c.pop_back();
        }
    };
    rec(rec, g);
    return Rational(hits, binomial(l * s, g));
}

Hypergraph partiteGraph(int k, int l, int s) {
    const int n = l * s;
    Hypergraph h(n, k);
    for (VertexSet e : subsetsColex(n, k)) {
        bool ok = true;
        for (int p = 0; p < l; ++p) {
            const VertexSet part = ((VertexSet{1} << s) - 1) << (p * s);
            if (std::popcount(e & part) >= k) ok = false;
        }
        if (ok) h.addEdge(e);
    }
    return h;
}

}  // namespace

TEST_CASE("Theorem 1 at (3,4,5,100)", "[bounds]") {
    const BoundReport b = upperBound(3, 4, 5, 100, EpsilonMode::PaperLiteral);
    CHECK(b.asymptotic == Rational(5, 12));
    CHECK(b.finiteFactor == Rational(24, 23));
    CHECK(b.finiteBound == Rational(10, 23));
    CHECK(b.epsilon == Rational(1, 96));
    CHECK(b.thresholdOk);
    CHECK_FALSE(b.deCaen.has_value());
    REQUIRE(b.lowerBound.has_value());
    CHECK(*b.lowerBound == Rational(3, 8));
}

TEST_CASE("printed finite factor equals the eps form on a grid", "[bounds]") {
    int points = 0;
    for (long k = 2; k <= 6; ++k)
        for (long r = k + 1; r <= k + 5; ++r)
            for (long scale : {1L, 4L}) {
                // n strictly above the vertex threshold, where the factor is finite.
                const long n = scale * (vertexThreshold(k, r, EpsilonMode::PaperLiteral).toDouble() + 1) + 1;
                const Rational eps = epsilonValue(k, r, n, EpsilonMode::PaperLiteral);
                const Rational expected = Rational(1) / (Rational(1) - eps * Rational((r - 1) * (r - k), k - 1));
                CHECK(printedFiniteFactor(k, r, n) == expected);
                CHECK(determinantFactor(k, r, eps) == expected);
                ++points;
            }
    CHECK(points == 50);
}

TEST_CASE("k = 2 reduces to Erdos' product", "[bounds]") {
    for (long r = 3; r <= 12; ++r)
        for (long g = 2; g < r; ++g) {
            Rational product(1);
            for (long m = 2; m <= g; ++m) product *= Rational(1) - Rational(m - 1, r - 1);
            CHECK(asymptoticBound(2, g, r) == product);
        }
}

TEST_CASE("g = k reduces to the limiting de Caen bound", "[bounds]") {
    for (long k = 2; k <= 8; ++k)
        for (long r = k + 1; r <= 12; ++r) {
            CHECK(asymptoticBound(k, k, r) == Rational(1) - Rational(1) / Rational(binomial(r - 1, k - 1)));
            CHECK(asymptoticBound(k, k, r) == deCaenAsymptotic(k, r));
            CHECK(deCaenBound(k, r, 1000) < deCaenAsymptotic(k, r));
        }
    CHECK(deCaenBound(3, 5, 100) == Rational(239, 288));
}

TEST_CASE("the solved bound never exceeds the closed-form finite bound", "[bounds]") {
    for (EpsilonMode mode : {EpsilonMode::PaperLiteral, EpsilonMode::Corrected})
        for (long k = 2; k <= 5; ++k)
            for (long r = k + 1; r <= 9; ++r) {
                const long n = vertexThreshold(k, r, mode).toDouble() + 2;
                for (long g = k; g < r; ++g) {
                    const BoundReport b = upperBound(k, g, r, n, mode);
                    CHECK(b.solvedBound <= b.finiteBound);
                    CHECK(b.solvedBound >= b.asymptotic);
                }
            }
}

TEST_CASE("bounds reject n at or below the threshold", "[bounds]") {
    CHECK(vertexThreshold(3, 5, EpsilonMode::PaperLiteral) == Rational(8));
    CHECK(vertexThreshold(3, 5, EpsilonMode::Corrected) == Rational(12));
    CHECK_THROWS_AS(upperBound(3, 4, 5, 8, EpsilonMode::PaperLiteral), std::invalid_argument);
    CHECK_NOTHROW(upperBound(3, 4, 5, 9, EpsilonMode::PaperLiteral));
    CHECK_THROWS_AS(upperBound(3, 4, 5, 12, EpsilonMode::Corrected), std::invalid_argument);
    CHECK_THROWS_AS(upperBound(3, 5, 5, 100, EpsilonMode::Corrected), std::invalid_argument);
    CHECK_THROWS_AS(upperBound(3, 2, 5, 100, EpsilonMode::Corrected), std::invalid_argument);
}

TEST_CASE("partite lower bound: direct count and the printed formula", "[bounds][lower]") {
    const PartiteLowerBound a = partiteLowerBound(3, 3, 2);
    CHECK(a.direct == Rational(3, 4));
    const PartiteLowerBound b = partiteLowerBound(3, 4, 2);
    CHECK(b.direct == Rational(3, 8));
    CHECK(b.printedFormula == Rational(-1, 8));
    CHECK_FALSE(b.agree());
}

TEST_CASE("partite construction: brute force, finite formula and limit agree", "[bounds][lower][oracle]") {
    // Explicit hypergraphs within the 8-vertex limit.
    struct Case {
        int k, l, s, g;
    };
    for (const Case c : {Case{3, 2, 4, 3}, Case{3, 2, 4, 4}, Case{3, 2, 3, 4}, Case{2, 3, 2, 3}, Case{2, 4, 2, 4},
                         Case{3, 2, 4, 5}})
        CHECK(cliqueDensity(partiteGraph(c.k, c.l, c.s), c.g) == finitePartiteDensity(c.k, c.g, c.l, c.s));
    // The finite density converges to the direct value.
    for (long k = 2; k <= 4; ++k)
        for (long l = 2; l <= 3; ++l)
            for (long g = k; g <= l * (k - 1); ++g) {
                const double limit = partiteDirect(k, g, l).toDouble();
                CHECK(finitePartiteDensity(k, g, l, 2000).toDouble() == Catch::Approx(limit).margin(5e-3));
            }
}

TEST_CASE("direct lower bound never exceeds the asymptotic upper bound", "[bounds][lower]") {
    for (long k = 2; k <= 5; ++k)
        for (long r = k + 1; r <= 13; ++r) {
            if ((r - 1) % (k - 1) != 0) continue;
            const long l = (r - 1) / (k - 1);
            for (long g = k; g < r; ++g) CHECK(partiteDirect(k, g, l) <= asymptoticBound(k, g, r));
        }
}

TEST_CASE("g = r-1 sandwich chain", "[bounds][lower]") {
    for (long k = 2; k <= 5; ++k)
        for (long r = k + 1; r <= 13; ++r) {
            if ((r - 1) % (k - 1) != 0) continue;
            const SandwichTable t = sandwichTable(k, r);
            CHECK(t.orderingHolds);
            CHECK(t.multinomialLower == partiteDirect(k, r - 1, t.parts));
        }
    CHECK_THROWS(sandwichTable(3, 6));
}
