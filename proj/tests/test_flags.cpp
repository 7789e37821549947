#include "turankit/certificate.hpp"
#include "turankit/flag.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace turankit;

namespace {

// Oracle for flag matching: compare against the flag's normalized host under
// every permutation of the untyped positions.
bool naiveMatches(const Flag& f, const Hypergraph& labeled) {
    std::vector<int> perm(static_cast<std::size_t>(f.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (labeled.inducedOrdered(perm) == f.normalized()) return true;
    } while (std::next_permutation(perm.begin() + f.sigma().size(), perm.end()));
    return false;
}

// Oracle for a square's value at H: ordered pairs of disjoint extension
// tuples enumerated directly, with naive matching, averaged over injective
// type placements.
Rational naiveSquare(const TypeSigma& sigma, const std::vector<FlagTerm>& terms, const Rational& c,
                     const Hypergraph& h) {
    const int s = sigma.size();
    const int extra = terms.front().flag.extra();
    Rational total(0);
    for (const Embedding& theta : typeEmbeddings(sigma, h)) {
        VertexSet used = 0;
        for (int v : theta) used |= VertexSet{1} << v;
        const auto free = members(h.allVertices() & ~used);
        Rational lin(0), quad(0);
        long singles = 0, pairs = 0;
        for (VertexSet a : subsetsColex(static_cast<int>(free.size()), extra)) {
            Embedding oa = theta;
            for (int i : members(a)) oa.push_back(free[static_cast<std::size_t>(i)]);
            const Hypergraph ha = h.inducedOrdered(oa);
            ++singles;
            Rational va(0);
            for (const auto& t : terms)
                if (naiveMatches(t.flag, ha)) va += t.coefficient;
            lin += va;
            for (VertexSet b : subsetsColex(static_cast<int>(free.size()), extra)) {
                if (a & b) continue;
                Embedding ob = theta;
                for (int i : members(b)) ob.push_back(free[static_cast<std::size_t>(i)]);
                const Hypergraph hb = h.inducedOrdered(ob);
                ++pairs;
                Rational vb(0);
                for (const auto& t : terms)
                    if (naiveMatches(t.flag, hb)) vb += t.coefficient;
                quad += va * vb;
            }
        }
        total += quad / Rational(pairs) - Rational(2) * c * lin / Rational(singles) + c * c;
    }
    return total / Rational(injectiveTuples(h.n(), s));
}

}  // namespace

TEST_CASE("flag construction validates the type", "[flags]") {
    const TypeSigma p2 = emptyType(2, 3);
    CHECK_NOTHROW(Flag("ok", Hypergraph::fromEdges(4, 3, {{0, 2, 3}}), {0, 1}, p2));
    CHECK_THROWS(Flag("bad-map", Hypergraph::fromEdges(4, 3, {{0, 2, 3}}), {0, 0}, p2));
    CHECK_THROWS(Flag("bad-type", Hypergraph::fromEdges(4, 3, {{0, 1, 2}}), {0, 1, 2}, emptyType(3, 3)));
    CHECK_THROWS(Flag("too-small", Hypergraph::empty(1, 3), {0, 1}, p2));
}

TEST_CASE("the catalog matches the certificate's flags", "[flags][certificate]") {
    const FlagCatalog c = catalogFlags();
    for (const Flag* f : {&c.e3, &c.la, &c.lb, &c.ma, &c.mb, &c.mc, &c.e4, &c.nq, &c.oa, &c.ob})
        CHECK(f->host().k() == 3);
    CHECK(c.la.sigma() == c.p2);
    CHECK(c.nq.sigma() == c.q4);
    CHECK(c.oa.sigma() == c.p4);
    CHECK(c.e3.extra() == 2);
    CHECK(c.ma.extra() == 1);
    CHECK(c.nq.extra() == 1);
}

TEST_CASE("flag matching agrees with the naive oracle", "[flags][oracle]") {
    const FlagCatalog c = catalogFlags();
    for (const Flag* f : {&c.la, &c.lb, &c.ma, &c.mb, &c.mc, &c.e4, &c.nq, &c.oa, &c.ob})
        for (const Hypergraph& h : enumerateAll(f->size(), 3)) {
            std::vector<int> perm(static_cast<std::size_t>(f->size()));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                const Hypergraph labeled = h.permuted(perm);
                REQUIRE(f->matches(labeled) == naiveMatches(*f, labeled));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
}

TEST_CASE("square values agree with the naive pair enumeration", "[flags][oracle]") {
    const FlagCatalog c = catalogFlags();
    const auto terms = certificateTerms(c);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        const Hypergraph h = Hypergraph::random(6, 3, rng, 0.2 + 0.06 * trial);
        for (const auto& term : terms)
            CHECK(squareValue(term.sigma, term.terms, term.constant, h) ==
                  naiveSquare(term.sigma, term.terms, term.constant, h));
    }
}

TEST_CASE("unit law: an empty square is c^2 times type embeddability", "[flags]") {
    const TypeSigma p1 = emptyType(1, 3);
    const ExpansionVector v = squareExpansion(p1, {}, Rational(3, 4), 5);
    for (const Hypergraph& h : enumerateAll(5, 3)) CHECK(v.at(h) == Rational(9, 16));
    const TypeSigma t3 = completeType(3, 3);
    const ExpansionVector w = squareExpansion(t3, {}, Rational(2), 5);
    for (const Hypergraph& h : enumerateAll(5, 3)) CHECK(w.at(h) == Rational(4) * cliqueDensity(h, 3));
}

TEST_CASE("Remark 8.3: averaging K_m over T_{m-1} gives K_m", "[flags]") {
    for (int m : {3, 4}) {
        const TypeSigma t = completeType(m - 1, 3);
        std::vector<int> typeMap(static_cast<std::size_t>(m - 1));
        std::iota(typeMap.begin(), typeMap.end(), 0);
        const Flag km("K", Hypergraph::complete(m, 3), typeMap, t);
        const ExpansionVector v = linearExpansion(t, {{Rational(1), km}}, Rational(0), m);
        for (const Hypergraph& h : enumerateAll(m, 3)) CHECK(v.at(h) == Rational(h.isComplete() ? 1 : 0));
    }
}

TEST_CASE("Remark 8.3: the square of K_m^{T_{m-1}} is C(s(H),2)/C(m+1,2)", "[flags]") {
    const int m = 4;
    const TypeSigma t = completeType(m - 1, 3);
    const Flag km("K", Hypergraph::complete(m, 3), {0, 1, 2}, t);
    const ExpansionVector v = squareExpansion(t, {{Rational(1), km}}, Rational(0), m + 1);
    for (const Hypergraph& h : enumerateAll(m + 1, 3))
        CHECK(v.at(h) == Rational(binomial(sStatistic(h), 2), binomial(m + 1, 2)));
}

TEST_CASE("relabeling the type leaves (L_a - L_b)^2 unchanged", "[flags]") {
    const FlagCatalog c = catalogFlags();
    const Flag laSwapped("L_a'", Hypergraph::fromEdges(4, 3, {{0, 2, 3}}), {1, 0}, c.p2);
    const Flag lbSwapped("L_b'", Hypergraph::fromEdges(4, 3, {{1, 2, 3}}), {1, 0}, c.p2);
    const auto original = squareExpansion(c.p2, {{1, c.la}, {-1, c.lb}}, Rational(0), 6);
    const auto swapped = squareExpansion(c.p2, {{1, laSwapped}, {-1, lbSwapped}}, Rational(0), 6);
    CHECK(original.coefficients == swapped.coefficients);
    // The swapped L_a is the original L_b.
    CHECK(laSwapped.matches(c.lb.normalized()));
}

TEST_CASE("chain lift agrees with direct evaluation on larger hosts", "[flags]") {
    const FlagCatalog c = catalogFlags();
    const std::vector<FlagTerm> terms{{1, c.ma}, {1, c.mb}, {1, c.mc}};
    const auto at5 = squareExpansion(c.p3, terms, Rational(1, 2), 5);
    const auto at6 = chainLift(at5, 6);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const Hypergraph h6 = Hypergraph::random(6, 3, rng, 0.5);
        CHECK(at6.at(h6) == squareValue(c.p3, terms, Rational(1, 2), h6));
    }
    for (int trial = 0; trial < 3; ++trial) {
        const Hypergraph h8 = Hypergraph::random(8, 3, rng, 0.6);
        const Rational direct = squareValue(c.p3, terms, Rational(1, 2), h8);
        CHECK(evaluate(at5, h8) == direct);
        CHECK(evaluate(at6, h8) == direct);
    }
}

TEST_CASE("pair density and extension density", "[flags]") {
    const FlagCatalog c = catalogFlags();
    const Hypergraph k6 = Hypergraph::complete(6, 3);
    const Embedding theta{0, 1, 2};
    CHECK(typeEmbeddings(c.p3, k6).empty());
    const Hypergraph e6 = Hypergraph::empty(6, 3);
    CHECK(typeEmbeddings(c.p3, e6).size() == 120);
    CHECK(extensionDensity(c.e4, e6, theta) == Rational(1));
    CHECK(pairDensity(c.e4, c.e4, e6, theta) == Rational(1));
    CHECK(pairDensity(c.ma, c.mb, e6, theta) == Rational(0));
    CHECK_THROWS(pairDensity(c.la, c.ma, e6, theta));
}
