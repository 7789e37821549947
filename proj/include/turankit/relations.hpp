#pragma once

// Brute-force checks of the linear clique-density relations on explicit
// hypergraphs: the single-square inequality, the local-statistic identities
// behind it, and the weighted rows that telescope to the bound.

#include "turankit/bounds.hpp"
#include "turankit/canonical.hpp"
#include "turankit/combinatorics.hpp"
#include "turankit/density.hpp"
#include "turankit/enumerate.hpp"
#include "turankit/hypergraph.hpp"
#include "turankit/rational.hpp"
#include "turankit/tridiagonal.hpp"

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace turankit {

/// Clique densities f_j = d(K_j, G) for j = 0..n.
inline std::vector<Rational> cliqueProfile(const Hypergraph& g) {
    std::vector<Rational> f;
    for (int j = 0; j <= g.n(); ++j) f.push_back(cliqueDensity(g, j));
    return f;
}

struct LemmaCheckResult {
    CanonicalCode graphCode;
    int m = 0;
    Rational x;
    /// The inequality's right side; must be <= 0.
    Rational value;
    /// -value; the inequality holds iff this is >= 0.
    Rational lhsSlack;
    bool holds = false;
};

/// Evaluates
///   -(1 - (k-1)/m)/x f_{m+1} + (2 - (k-1)/(m x) - 1/((n-m) x)) f_m - x f_{m-1}
/// exactly and checks that it is <= 0.
inline LemmaCheckResult checkMainLemma(const Hypergraph& g, int m, const Rational& x) {
    const int k = g.k();
    const int n = g.n();
    if (x.sign() <= 0) throw std::invalid_argument("checkMainLemma: x must be positive, got " + x.str());
    if (m < k || m >= n)
        throw std::invalid_argument("checkMainLemma: need k <= m < n, got m=" + std::to_string(m));
    const Rational fUp = cliqueDensity(g, m + 1);
    const Rational fMid = cliqueDensity(g, m);
    const Rational fDown = cliqueDensity(g, m - 1);
    const Rational km = Rational(k - 1, m);
    LemmaCheckResult res;
    res.graphCode = canonicalize(g);
    res.m = m;
    res.x = x;
    res.value = -(Rational(1) - km) / x * fUp +
                (Rational(2) - km / x - Rational(1) / (Rational(n - m) * x)) * fMid - x * fDown;
    res.lhsSlack = -res.value;
    res.holds = res.lhsSlack.sign() >= 0;
    return res;
}

struct SquareIntermediateResult {
    bool pointwiseSquareBound = true;  // r^2 <= rr + r/(n-m) on every (m-1)-set
    Rational expectedQR;               // E[q r] over (m-1)-sets
    Rational cliqueDensityM;           // d(K_m, G)
    Rational expectedQRR;              // E[q rr] over (m-1)-sets
    Rational sChainSum;                // sum_{H in H_{m+1}} C(s(H),2)/C(m+1,2) d(H, G)

    bool ok() const { return pointwiseSquareBound && expectedQR == cliqueDensityM && expectedQRR == sChainSum; }
};

/// Verifies, by enumerating every (m-1)-subset S of V(G):
///   r(S)^2 <= rr(S) + r(S)/(n-m),
///   E[q r] = d(K_m, G),
///   E[q rr] = sum over (m+1)-vertex classes H of C(s(H),2)/C(m+1,2) d(H, G).
inline SquareIntermediateResult checkSquareIntermediate(const Hypergraph& g, int m) {
    const int k = g.k();
    const int n = g.n();
    if (m < k || m >= n) throw std::invalid_argument("checkSquareIntermediate: need k <= m < n");
    SquareIntermediateResult res;
    const auto sets = subsetsColex(n, m - 1);
    Rational sumQR(0), sumQRR(0);
    for (VertexSet s : sets) {
        const LocalStats st = localStats(g, s);
        if (st.r * st.r > st.rr + st.r / Rational(n - m)) res.pointwiseSquareBound = false;
        if (st.q == 1) {
            sumQR += st.r;
            sumQRR += st.rr;
        }
    }
    const Rational count(toInteger(sets.size()));
    res.expectedQR = sumQR / count;
    res.expectedQRR = sumQRR / count;
    res.cliqueDensityM = cliqueDensity(g, m);

    // Right side through the class profile of (m+1)-subsets, computing s(H)
    // on each class representative.
    const Rational pairs(binomial(m + 1, 2));
    for (const auto& [mask, hits] : inducedProfile(g, m + 1)) {
        const Hypergraph h(m + 1, k, mask);
        res.sChainSum += Rational(binomial(sStatistic(h), 2)) / pairs * Rational(toInteger(hits), binomial(n, m + 1));
    }
    return res;
}

/// The rows E_m for m = k..r-1: the lemma at x = x_{m,r} with the term
/// 1/((n-m) x_{m,r}) replaced by the mode's epsilon.
inline std::vector<Rational> checkEmRows(const Hypergraph& g, int r, EpsilonMode mode) {
    const int k = g.k();
    const int n = g.n();
    if (n <= r) throw std::invalid_argument("checkEmRows: need |G| > r");
    if (k > r - 1) throw std::invalid_argument("checkEmRows: need k <= r-1");
    const Rational eps = epsilonValue(k, r, n, mode);
    const TridiagonalSystem sys(k, r);
    const auto f = cliqueProfile(g);
    std::vector<Rational> rows;
    for (int m = k; m <= r - 1; ++m) {
        Rational e = sys.columnCoefficient(m - 1, m) * f[static_cast<std::size_t>(m - 1)] +
                     (sys.columnCoefficient(m, m) - eps) * f[static_cast<std::size_t>(m)] +
                     sys.columnCoefficient(m + 1, m) * f[static_cast<std::size_t>(m + 1)];
        rows.push_back(e);
    }
    return rows;
}

struct TelescopeCheck {
    Rational weightedSum;  // sum_m delta_m E_m
    Rational boundaryForm; // -delta_k x_{k,r} f_{k-1} + f_g - delta_{r-1} (1-(k-1)/(r-1))/x_{r-1,r} f_r
    bool holds() const { return weightedSum == boundaryForm; }
};

/// Weights the rows by delta = (D - eps I)^{-1} e_g and compares with the
/// boundary form the combination must collapse to.
inline TelescopeCheck checkTelescoping(const Hypergraph& g, int gIdx, int r, EpsilonMode mode) {
    const int k = g.k();
    const auto rows = checkEmRows(g, r, mode);
    const Rational eps = epsilonValue(k, r, g.n(), mode);
    const auto delta = solveDelta(k, gIdx, r, eps);
    const auto f = cliqueProfile(g);
    TelescopeCheck out;
    for (std::size_t i = 0; i < rows.size(); ++i) out.weightedSum += delta[i] * rows[i];
    out.boundaryForm = -delta.front() * xRatio(k, k, r) * f[static_cast<std::size_t>(k - 1)] +
                       f[static_cast<std::size_t>(gIdx)] -
                       delta.back() * (Rational(1) - Rational(k - 1, r - 1)) / xRatio(k, r - 1, r) *
                           f[static_cast<std::size_t>(r)];
    return out;
}

/// Default x-grid: j/8 for j = 1..16 plus x_{m,r} for r = m+1..maxR.
inline std::vector<Rational> lemmaGrid(int k, int m, int maxR) {
    std::vector<Rational> xs;
    for (int j = 1; j <= 16; ++j) xs.emplace_back(j, 8);
    for (int r = m + 1; r <= maxR; ++r) xs.push_back(xRatio(k, m, r));
    return xs;
}

/// Outcome of one verification suite. Failures refute a claim; warnings are
/// diagnostics (PaperLiteral-mode E_m violations).
struct SuiteReport {
    std::string suite;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
    bool pass() const { return failures.empty(); }
};

inline std::string describe(const Hypergraph& g) {
    return "G[n=" + std::to_string(g.n()) + ",k=" + std::to_string(g.k()) + ",code=" + canonicalize(g).hex() + "]";
}

/// `count` random 3-graphs on n vertices from a fixed seed, cycling the edge
/// probability so dense (clique-rich) graphs are well represented.
inline std::vector<Hypergraph> randomSample(int n, int k, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    constexpr double probs[] = {0.3, 0.5, 0.7, 0.85, 0.95};
    std::vector<Hypergraph> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(Hypergraph::random(n, k, rng, probs[i % std::size(probs)]));
    return out;
}

/// Lemma 3 on every 3-graph with 4 or 5 vertices, all m in [k, n-1], over
/// the dyadic grid plus the x_{m,r} values with r up to 8.
inline SuiteReport runLemmaSuite() {
    SuiteReport rep{"lemma", 0, {}, {}};
    constexpr int k = 3;
    for (int n : {4, 5})
        for (const Hypergraph& g : enumerateAll(n, k))
            for (int m = k; m < n; ++m)
                for (const Rational& x : lemmaGrid(k, m, 8)) {
                    const LemmaCheckResult res = checkMainLemma(g, m, x);
                    ++rep.checks;
                    if (!res.holds)
                        rep.failures.push_back("Lemma 3 fails on " + describe(g) + " m=" + std::to_string(m) +
                                               " x=" + x.str() + " value=" + res.value.str());
                }
    return rep;
}

/// Claims 5 and 7 on all of H_5 and 200 random 6-vertex 3-graphs, m in
/// {3, 4}; plus s(H) <= k for every non-complete H in H_5.
inline SuiteReport runClaimsSuite(std::uint64_t seed = 20240601) {
    SuiteReport rep{"claims", 0, {}, {}};
    constexpr int k = 3;
    std::vector<Hypergraph> graphs = enumerateAll(5, k);
    for (const Hypergraph& g : randomSample(6, k, 200, seed)) graphs.push_back(g);
    for (const Hypergraph& g : graphs)
        for (int m : {3, 4}) {
            const SquareIntermediateResult res = checkSquareIntermediate(g, m);
            rep.checks += 3;
            const std::string where = describe(g) + " m=" + std::to_string(m);
            if (!res.pointwiseSquareBound) rep.failures.push_back("Claim 5 fails on " + where);
            if (res.expectedQR != res.cliqueDensityM)
                rep.failures.push_back("Claim 7.1 fails on " + where + ": " + res.expectedQR.str() +
                                       " != " + res.cliqueDensityM.str());
            if (res.expectedQRR != res.sChainSum)
                rep.failures.push_back("Claim 7.2 fails on " + where + ": " + res.expectedQRR.str() +
                                       " != " + res.sChainSum.str());
        }
    for (const Hypergraph& h : enumerateAll(5, k)) {
        ++rep.checks;
        const int s = sStatistic(h);
        if (h.isComplete() ? s != 5 : s > k)
            rep.failures.push_back("s(H)=" + std::to_string(s) + " out of range on " + describe(h));
    }
    return rep;
}

/// E_m rows and the telescoping identity on H_5 (r = 4), complete graphs,
/// and random graphs on 6..8 vertices for every admissible r. Corrected-mode
/// rows must be <= 0; PaperLiteral-mode positives become warnings.
inline SuiteReport runRowsSuite(std::uint64_t seed = 20240602) {
    SuiteReport rep{"rows", 0, {}, {}};
    constexpr int k = 3;
    std::vector<Hypergraph> graphs = enumerateAll(5, k);
    for (int n = 6; n <= kMaxVertices; ++n) {
        graphs.push_back(Hypergraph::complete(n, k));
        for (const Hypergraph& g : randomSample(n, k, 40, seed + static_cast<std::uint64_t>(n))) graphs.push_back(g);
    }
    // Coefficient-level erratum diagnostic: where the printed eps is smaller
    // than the term 1/((n-m) x_{m,r}) it replaces, the replacement increases
    // the row rather than decreasing it.
    for (int n = 5; n <= kMaxVertices; ++n)
        for (int r = k + 1; r < n; ++r) {
            const Rational literal = epsilonValue(k, r, n, EpsilonMode::PaperLiteral);
            for (int m = k; m <= r - 1; ++m) {
                const Rational needed = Rational(1) / (Rational(n - m) * xRatio(k, m, r));
                if (literal < needed)
                    rep.warnings.push_back("paper-literal eps " + literal.str() + " < 1/((n-m)x_{m,r}) = " +
                                           needed.str() + " at k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                           " n=" + std::to_string(n) + " m=" + std::to_string(m));
            }
        }
    for (const Hypergraph& g : graphs)
        for (int r = k + 1; r < g.n(); ++r)
            for (EpsilonMode mode : {EpsilonMode::Corrected, EpsilonMode::PaperLiteral}) {
                const auto rows = checkEmRows(g, r, mode);
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    ++rep.checks;
                    if (rows[i].sign() <= 0) continue;
                    const std::string msg = "E_" + std::to_string(k + static_cast<int>(i)) + " = " + rows[i].str() +
                                            " > 0 on " + describe(g) + " r=" + std::to_string(r) + " (" +
                                            std::string(toString(mode)) + ")";
                    (mode == EpsilonMode::Corrected ? rep.failures : rep.warnings).push_back(msg);
                }
                for (int gi = k; gi <= r - 1; ++gi) {
                    ++rep.checks;
                    const TelescopeCheck t = checkTelescoping(g, gi, r, mode);
                    if (!t.holds())
                        rep.failures.push_back("telescoping fails on " + describe(g) + " g=" + std::to_string(gi) +
                                               " r=" + std::to_string(r) + ": " + t.weightedSum.str() +
                                               " != " + t.boundaryForm.str());
                }
            }
    return rep;
}

}  // namespace turankit
