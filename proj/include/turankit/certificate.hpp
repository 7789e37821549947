#pragma once

// The six-square certificate for the maximum E_4 density of 3-graphs in
// which every 5 vertices span an edge (complement form of K_4 density in
// K_5-free 3-graphs), and the two-clique construction matching it.
//
// The certificate is verified coefficient-wise on all 6-vertex classes:
//   slack(H) = 3/8 - d(E_4, H) - sum_j w_j c_j(H) >= 0,
// where c_j(H) is the j-th averaged square expanded at size 6.

#include "turankit/canonical.hpp"
#include "turankit/density.hpp"
#include "turankit/enumerate.hpp"
#include "turankit/flag.hpp"
#include "turankit/hypergraph.hpp"
#include "turankit/rational.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace turankit {

struct FlagCatalog {
    TypeSigma p1, p2, p3, q4, p4;
    Flag e3, la, lb, ma, mb, mc, e4, nq, oa, ob;
};

/// The flags of the certificate, each validated on construction.
///
/// The O flags carry the type induced on {0,1,2,3} by their edge sets,
/// which is edgeless (P4).
inline FlagCatalog catalogFlags() {
    constexpr int k = 3;
    const TypeSigma p1 = emptyType(1, k);
    const TypeSigma p2 = emptyType(2, k);
    const TypeSigma p3 = emptyType(3, k);
    const TypeSigma q4{"Q4", Hypergraph::fromEdges(4, k, {{0, 1, 2}})};
    const TypeSigma p4 = emptyType(4, k);
    return FlagCatalog{
        p1, p2, p3, q4, p4,
        Flag("E3^P1", Hypergraph::empty(3, k), {0}, p1),
        Flag("L_a", Hypergraph::fromEdges(4, k, {{0, 2, 3}}), {0, 1}, p2),
        Flag("L_b", Hypergraph::fromEdges(4, k, {{1, 2, 3}}), {0, 1}, p2),
        Flag("M_a", Hypergraph::fromEdges(4, k, {{1, 2, 3}}), {0, 1, 2}, p3),
        Flag("M_b", Hypergraph::fromEdges(4, k, {{0, 2, 3}}), {0, 1, 2}, p3),
        Flag("M_c", Hypergraph::fromEdges(4, k, {{0, 1, 3}}), {0, 1, 2}, p3),
        Flag("E4^P3", Hypergraph::empty(4, k), {0, 1, 2}, p3),
        Flag("N", Hypergraph::fromEdges(5, k, {{0, 1, 2}}), {0, 1, 2, 3}, q4),
        Flag("O_a", Hypergraph::fromEdges(5, k, {{0, 1, 4}}), {0, 1, 2, 3}, p4),
        Flag("O_b", Hypergraph::fromEdges(5, k, {{2, 3, 4}}), {0, 1, 2, 3}, p4),
    };
}

/// weight * [[ (sum_i a_i F_i - constant * sigma)^2 ]]_sigma
struct CertificateTerm {
    std::string label;
    Rational weight;
    TypeSigma sigma;
    std::vector<FlagTerm> terms;
    Rational constant;
};

inline std::vector<CertificateTerm> certificateTerms(const FlagCatalog& c) {
    return {
        {"(E3 - 3/4 P1)^2", Rational(2, 3), c.p1, {{1, c.e3}}, Rational(3, 4)},
        {"(L_a - L_b)^2", Rational(1, 6), c.p2, {{1, c.la}, {-1, c.lb}}, Rational(0)},
        {"(M_a + M_b + M_c - 1/2 P3)^2", Rational(13, 12), c.p3, {{1, c.ma}, {1, c.mb}, {1, c.mc}}, Rational(1, 2)},
        {"(E4 - 1/2 P3)^2", Rational(11, 12), c.p3, {{1, c.e4}}, Rational(1, 2)},
        {"(N - 1/2 Q4)^2", Rational(2), c.q4, {{1, c.nq}}, Rational(1, 2)},
        {"(O_a - O_b)^2", Rational(1, 2), c.p4, {{1, c.oa}, {-1, c.ob}}, Rational(0)},
    };
}

inline const Rational& certificateBound() {
    static const Rational value(3, 8);
    return value;
}

struct CertificateEntry {
    CanonicalCode code;
    Rational emptyFourDensity;
    std::vector<Rational> squares;  // unweighted c_j(H), one per term
    Rational weightedSquares;
    Rational slack;
};

struct CertificateReport {
    int k = 3;
    int n = 6;
    std::size_t graphCount = 0;
    std::vector<std::string> termLabels;
    std::vector<CertificateEntry> entries;  // ascending canonical code
    Rational minSlack;
    std::vector<CanonicalCode> tightGraphs;
    /// Graphs where some individual square coefficient is negative. Reported
    /// only; finite-size square expansions need not be pointwise nonnegative.
    std::size_t negativeSquareGraphs = 0;
    bool pass = false;
};

/// Checks the certificate on the given classes (all of them must be
/// 6-vertex 3-graphs in which every 5-set spans an edge).
inline CertificateReport verifyCertificate(const std::vector<Hypergraph>& graphs) {
    if (graphs.empty()) throw std::invalid_argument("verifyCertificate: no graphs to check");
    const int n = 6;
    const FlagCatalog catalog = catalogFlags();
    const auto terms = certificateTerms(catalog);

    std::vector<ExpansionVector> expansions;
    for (const auto& term : terms) expansions.push_back(squareExpansion(term.sigma, term.terms, term.constant, n));

    CertificateReport rep;
    rep.graphCount = graphs.size();
    for (const auto& term : terms) rep.termLabels.push_back(term.label);
    bool first = true;
    for (const Hypergraph& h : graphs) {
        if (h.n() != n || h.k() != 3) throw std::invalid_argument("verifyCertificate: expected 6-vertex 3-graphs");
        if (!hasNoEmptySet(h, 5)) throw std::invalid_argument("verifyCertificate: graph has an edgeless 5-set");
        CertificateEntry e;
        e.code = canonicalize(h);
        e.emptyFourDensity = emptySetDensity(h, 4);
        bool anyNegative = false;
        for (std::size_t j = 0; j < terms.size(); ++j) {
            const Rational c = expansions[j].at(e.code.mask);
            anyNegative = anyNegative || c.sign() < 0;
            e.squares.push_back(c);
            e.weightedSquares += terms[j].weight * c;
        }
        e.slack = certificateBound() - e.emptyFourDensity - e.weightedSquares;
        if (anyNegative) ++rep.negativeSquareGraphs;
        if (first || e.slack < rep.minSlack) rep.minSlack = e.slack;
        first = false;
        rep.entries.push_back(std::move(e));
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const CertificateEntry& a, const CertificateEntry& b) { return a.code < b.code; });
    for (const auto& e : rep.entries)
        if (e.slack.isZero()) rep.tightGraphs.push_back(e.code);
    rep.pass = rep.minSlack.sign() >= 0;
    return rep;
}

inline CertificateReport verifyCertificate() { return verifyCertificate(enumerateAll(6, 3, noEmptySetFilter(5))); }

/// d(E_4, G_n) for G_n the disjoint union of complete 3-graphs on floor(n/2)
/// and ceil(n/2) vertices. Counted directly for n <= 16 (which also checks
/// that every 5-set spans an edge), closed form beyond.
inline Rational twoCliqueDensity(int n) {
    if (n < 6) throw std::invalid_argument("twoCliqueDensity: need n >= 6");
    const long a = n / 2;
    const long b = n - a;
    const Rational closed = Rational(binomial(a, 2) * binomial(b, 2), binomial(n, 4));
    if (n > 16) return closed;

    const VertexSet left = (VertexSet{1} << a) - 1;
    auto hasEdge = [&](VertexSet s) { return std::popcount(s & left) >= 3 || std::popcount(s & ~left) >= 3; };
    long emptyFour = 0;
    for (VertexSet s : subsetsColex(n, 4)) emptyFour += !hasEdge(s);
    for (VertexSet s : subsetsColex(n, 5))
        if (!hasEdge(s)) throw std::logic_error("twoCliqueDensity: found an edgeless 5-set");
    const Rational counted(toInteger(emptyFour), binomial(n, 4));
    if (n <= kMaxVertices) {
        const std::vector<int> parts{static_cast<int>(a), static_cast<int>(b)};
        const Hypergraph g = Hypergraph::disjointCliques(parts, 3);
        if (!hasNoEmptySet(g, 5) || emptySetDensity(g, 4) != counted)
            throw std::logic_error("twoCliqueDensity: explicit hypergraph disagrees with counting");
    }
    if (counted != closed) throw std::logic_error("twoCliqueDensity: count disagrees with closed form");
    return counted;
}

}  // namespace turankit
