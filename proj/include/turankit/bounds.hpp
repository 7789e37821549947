#pragma once

// Upper and lower bounds on the maximum K_g density of K_r-free k-graphs.

#include "turankit/combinatorics.hpp"
#include "turankit/rational.hpp"
#include "turankit/tridiagonal.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace turankit {

inline void checkKgr(long k, long g, long r) {
    if (k < 2 || g < k || r <= g)
        throw std::invalid_argument("need 2 <= k <= g < r, got k=" + std::to_string(k) + " g=" + std::to_string(g) +
                                    " r=" + std::to_string(r));
}

/// prod_{m=k}^{g} x_{m,r}: the n -> infinity upper bound.
inline Rational asymptoticBound(long k, long g, long r) {
    Rational p(1);
    for (long m = k; m <= g; ++m) p *= xRatio(k, m, r);
    return p;
}

/// The closed-form finite-n factor
///   1 + (r-1)(r-k)^2 / ((k-1)^2 n - (r-1)(2k^2 - 2k(r+1) + r^2 + 1)).
inline Rational printedFiniteFactor(long k, long r, long n) {
    const long quad = 2 * k * k - 2 * k * (r + 1) + r * r + 1;
    const Rational den = Rational((k - 1) * (k - 1) * n) - Rational((r - 1) * quad);
    if (den.isZero()) throw std::domain_error("printedFiniteFactor: vanishing denominator");
    return Rational(1) + Rational((r - 1) * (r - k) * (r - k)) / den;
}

/// 1 / (1 - eps (r-1)(r-k)/(k-1)): the bound on delta_{k,g}(eps) / delta_{k,g}(0)
/// from the determinant lower bound.
inline Rational determinantFactor(long k, long r, const Rational& eps) {
    const Rational loss = eps * Rational((r - 1) * (r - k), k - 1);
    if (loss >= Rational(1)) throw std::domain_error("determinantFactor: eps at or past the singular threshold");
    return Rational(1) / (Rational(1) - loss);
}

/// Smallest n is threshold + 1: n must strictly exceed the returned value.
inline Rational vertexThreshold(long k, long r, EpsilonMode mode) {
    const Rational kk = Rational((k - 1) * (k - 1));
    if (mode == EpsilonMode::PaperLiteral)
        return Rational(r - 1) * (Rational(1) + Rational((r - k) * (r - k)) / kk);
    return Rational(r - 1) + Rational((r - 1) * (r - 1) * (r - k)) / kk;
}

inline Rational deCaenBound(long k, long r, long n) {
    if (k < 2 || r < k || n < r)
        throw std::invalid_argument("deCaenBound: need 2 <= k <= r <= n");
    return Rational(1) - (Rational(1) + Rational(r - k, n - r + 1)) / Rational(binomial(r - 1, k - 1));
}

inline Rational deCaenAsymptotic(long k, long r) {
    return Rational(1) - Rational(1) / Rational(binomial(r - 1, k - 1));
}

struct PartiteLowerBound {
    /// Exact limit density of K_g in the balanced l-part construction
    /// (edges are the k-sets not inside a single part).
    Rational direct;
    /// The displayed inclusion-exclusion expression evaluated term by term.
    Rational printedFormula;
    bool agree() const { return direct == printedFormula; }
};

namespace detail {

inline void forEachBoundedComposition(long total, long parts, long cap, std::vector<long>& cur,
                                      const std::function<void(const std::vector<long>&)>& visit) {
    if (parts == 0) {
        if (total == 0) visit(cur);
        return;
    }
    if (total > cap * parts) return;
    for (long c = 0; c <= std::min(cap, total); ++c) {
        cur.push_back(c);
        forEachBoundedComposition(total - c, parts - 1, cap, cur, visit);
        cur.pop_back();
    }
}

/// Ordered s-tuples with every entry >= lo and sum <= total.
inline void forEachLowerBoundedTuple(long s, long lo, long total, std::vector<long>& cur,
                                     const std::function<void(const std::vector<long>&)>& visit) {
    if (s == 0) {
        visit(cur);
        return;
    }
    for (long i = lo; i <= total; ++i) {
        cur.push_back(i);
        forEachLowerBoundedTuple(s - 1, lo, total - i, cur, visit);
        cur.pop_back();
    }
}

}  // namespace detail

/// Sum over compositions (c_1..c_l) of g with every c_j <= k-1 of
/// multinomial(g; c) l^{-g}.
inline Rational partiteDirect(long k, long g, long l) {
    if (l < 1 || g < k || k < 2) throw std::invalid_argument("partiteDirect: need l >= 1, g >= k >= 2");
    Integer count = 0;
    std::vector<long> cur;
    detail::forEachBoundedComposition(g, l, k - 1, cur, [&](const std::vector<long>& c) { count += multinomial(g, c); });
    Integer lg;
    mpz_ui_pow_ui(lg.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(g));
    return Rational(count, lg);
}

inline PartiteLowerBound partiteLowerBound(long k, long g, long l) {
    PartiteLowerBound out;
    out.direct = partiteDirect(k, g, l);
    Rational sum(0);
    for (long s = 0; s <= g / k; ++s) {
        Rational inner(0);
        std::vector<long> cur;
        detail::forEachLowerBoundedTuple(s, k, g, cur, [&](const std::vector<long>& idx) {
            std::vector<long> parts = idx;
            long used = 0;
            for (long i : idx) used += i;
            parts.push_back(g - used);
            inner += Rational(multinomial(g, parts)) * pow(Rational(l), static_cast<int>(-used));
        });
        const Rational term = Rational(binomial(l, s)) * inner;
        sum += (s % 2 == 0) ? term : -term;
    }
    out.printedFormula = sum;
    return out;
}

struct SandwichTable {
    long k = 0;
    long r = 0;
    long parts = 0;
    /// multinomial(r-1; k-1, ..., k-1) l^{-(r-1)}
    Rational multinomialLower;
    /// prod_{m=k}^{r-1} x_{m,r}
    Rational product;
    /// e^{(k-r)/k}; the only inexact quantity, rendered to 12 decimals.
    double expUpper = 0.0;
    std::string expUpperText;
    bool orderingHolds = false;
};

inline SandwichTable sandwichTable(long k, long r) {
    if (k < 2 || r <= k) throw std::invalid_argument("sandwichTable: need 2 <= k < r");
    if ((r - 1) % (k - 1) != 0)
        throw std::invalid_argument("sandwichTable: (k-1) must divide (r-1), got k=" + std::to_string(k) +
                                    " r=" + std::to_string(r));
    SandwichTable t;
    t.k = k;
    t.r = r;
    t.parts = (r - 1) / (k - 1);
    const std::vector<long> equal(static_cast<std::size_t>(t.parts), k - 1);
    t.multinomialLower = Rational(multinomial(r - 1, equal)) * pow(Rational(t.parts), static_cast<int>(-(r - 1)));
    t.product = asymptoticBound(k, r - 1, r);
    t.expUpper = std::exp(static_cast<double>(k - r) / static_cast<double>(k));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", t.expUpper);
    t.expUpperText = buf;
    t.orderingHolds = t.multinomialLower <= t.product && t.product.toDouble() <= t.expUpper;
    return t;
}

struct BoundReport {
    long k = 0, g = 0, r = 0, n = 0;
    EpsilonMode mode = EpsilonMode::PaperLiteral;
    Rational epsilon;
    /// n must exceed this for the finite bound to apply.
    Rational threshold;
    Rational finiteFactor;
    Rational asymptotic;
    Rational finiteBound;
    /// delta_{k,g}(eps) x_{k,r} from the exact solve; never above finiteBound.
    Rational solvedBound;
    std::optional<Rational> deCaen;
    std::optional<Rational> lowerBound;
    bool thresholdOk = false;
};

inline BoundReport upperBound(long k, long g, long r, long n, EpsilonMode mode) {
    checkKgr(k, g, r);
    BoundReport rep;
    rep.k = k;
    rep.g = g;
    rep.r = r;
    rep.n = n;
    rep.mode = mode;
    rep.threshold = vertexThreshold(k, r, mode);
    rep.thresholdOk = Rational(n) > rep.threshold;
    if (!rep.thresholdOk)
        throw std::invalid_argument("upperBound: n=" + std::to_string(n) + " must exceed the threshold " +
                                    rep.threshold.str() + " (" + std::string(toString(mode)) + " mode)");
    rep.epsilon = epsilonValue(k, r, n, mode);
    rep.finiteFactor = mode == EpsilonMode::PaperLiteral ? printedFiniteFactor(k, r, n)
                                                         : determinantFactor(k, r, rep.epsilon);
    rep.asymptotic = asymptoticBound(k, g, r);
    rep.finiteBound = rep.finiteFactor * rep.asymptotic;
    const std::vector<Rational> delta = solveDelta(k, g, r, rep.epsilon);
    rep.solvedBound = delta.front() * xRatio(k, k, r);
    if (g == k) rep.deCaen = deCaenBound(k, r, n);
    if ((r - 1) % (k - 1) == 0) rep.lowerBound = partiteDirect(k, g, (r - 1) / (k - 1));
    return rep;
}

}  // namespace turankit
