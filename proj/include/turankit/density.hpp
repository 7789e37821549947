#pragma once

// Densities and local statistics of small hypergraphs.

#include "turankit/canonical.hpp"
#include "turankit/combinatorics.hpp"
#include "turankit/hypergraph.hpp"
#include "turankit/rational.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace turankit {

/// Number of t-subsets of V(G) in each isomorphism class, keyed by canonical mask.
inline std::map<EdgeMask, long> inducedProfile(const Hypergraph& g, int t) {
    if (t < 0 || t > g.n()) throw std::invalid_argument("inducedProfile: t outside [0, n]");
    const Canonicalizer& canon = canonicalizerFor(t, g.k());
    std::map<EdgeMask, long> out;
    for (VertexSet s : subsetsColex(g.n(), t)) ++out[canon.canonicalMask(g.induced(s).mask())];
    return out;
}

/// d(F, G) when `induced`, else the containment density d_s(F, G): the
/// fraction of |F|-subsets S with G|S isomorphic to F, respectively
/// containing a copy of F.
inline Rational inducedDensity(const Hypergraph& f, const Hypergraph& g, bool induced = true) {
    if (f.k() != g.k()) throw std::invalid_argument("inducedDensity: uniformity mismatch");
    if (f.n() > g.n())
        throw std::invalid_argument("inducedDensity: |F|=" + std::to_string(f.n()) + " exceeds |G|=" +
                                    std::to_string(g.n()));
    const Canonicalizer& canon = canonicalizerFor(f.n(), f.k());
    const EdgeMask target = canon.canonicalMask(f.mask());
    long hits = 0;
    for (VertexSet s : subsetsColex(g.n(), f.n())) {
        const EdgeMask sub = g.induced(s).mask();
        if (induced) {
            hits += canon.canonicalMask(sub) == target;
        } else {
            for (std::size_t p = 0; p < canon.permutationCount(); ++p)
                if ((canon.apply(p, f.mask()) & ~sub) == 0) {
                    ++hits;
                    break;
                }
        }
    }
    return Rational(toInteger(hits), binomial(g.n(), f.n()));
}

/// d(K_m, G); equal to 1 for m < k since small sets are vacuously complete.
inline Rational cliqueDensity(const Hypergraph& g, int m) {
    if (m < 0 || m > g.n()) throw std::invalid_argument("cliqueDensity: m outside [0, n]");
    long hits = 0;
    for (VertexSet s : subsetsColex(g.n(), m)) hits += g.isCompleteOn(s);
    return Rational(toInteger(hits), binomial(g.n(), m));
}

/// d(E_m, G): fraction of m-subsets spanning no edge.
inline Rational emptySetDensity(const Hypergraph& g, int m) {
    if (m < 0 || m > g.n()) throw std::invalid_argument("emptySetDensity: m outside [0, n]");
    long hits = 0;
    for (VertexSet s : subsetsColex(g.n(), m)) hits += g.isEmptyOn(s);
    return Rational(toInteger(hits), binomial(g.n(), m));
}

/// Completeness statistics of a vertex set S and its one-vertex extensions.
struct LocalStats {
    int q = 0;     // 1 iff G|S is complete
    int l = 0;     // #{v outside S : S + v complete}
    Rational r;    // l / (n - |S|), 0 when S = V(G)
    Rational rr;   // C(l,2) / C(n - |S|, 2), 0 when fewer than two outside vertices
};

inline LocalStats localStats(const Hypergraph& g, VertexSet s) {
    if (s & ~g.allVertices()) throw std::invalid_argument("localStats: S not a subset of V(G)");
    LocalStats st;
    st.q = g.isCompleteOn(s) ? 1 : 0;
    const int outside = g.n() - std::popcount(s);
    for (int v = 0; v < g.n(); ++v)
        if (!((s >> v) & 1U) && g.isCompleteOn(s | (VertexSet{1} << v))) ++st.l;
    if (outside > 0) st.r = Rational(st.l, outside);
    if (outside > 1) st.rr = Rational(binomial(st.l, 2), binomial(outside, 2));
    return st;
}

/// Size of the common intersection of all non-edges; n when G is complete.
inline int sStatistic(const Hypergraph& h) {
    VertexSet common = h.allVertices();
    for (VertexSet e : subsetsColex(h.n(), h.k()))
        if (!h.hasEdge(e)) common &= e;
    return std::popcount(common);
}

}  // namespace turankit
