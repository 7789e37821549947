#pragma once

// Typed flags and exact evaluation of averaged flag expressions.
//
// A flag is a hypergraph together with an ordered injection of type labels
// into its vertices. Products are taken over ordered pairs of disjoint
// extension sets, so the expansion of a square at host size 2t - s is an
// identity, not an approximation. Averaging ranges over all injective
// s-tuples of the host; tuples that do not induce the type contribute zero.

#include "turankit/canonical.hpp"
#include "turankit/combinatorics.hpp"
#include "turankit/density.hpp"
#include "turankit/enumerate.hpp"
#include "turankit/hypergraph.hpp"
#include "turankit/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turankit {

/// A fully labeled hypergraph; labels 0..s-1 are part of its identity.
struct TypeSigma {
    std::string name;
    Hypergraph graph;

    int size() const { return graph.n(); }
    int k() const { return graph.k(); }

    friend bool operator==(const TypeSigma& a, const TypeSigma& b) { return a.graph == b.graph; }
};

/// The edgeless type on s vertices.
inline TypeSigma emptyType(int s, int k) { return {"P" + std::to_string(s), Hypergraph::empty(s, k)}; }
/// The complete type on s vertices.
inline TypeSigma completeType(int s, int k) { return {"T" + std::to_string(s), Hypergraph::complete(s, k)}; }

class Flag {
public:
    Flag(std::string name, Hypergraph host, std::vector<int> typeMap, TypeSigma sigma)
        : name_(std::move(name)), host_(host), typeMap_(std::move(typeMap)), sigma_(std::move(sigma)) {
        const int s = sigma_.size();
        const int t = host_.n();
        if (host_.k() != sigma_.k()) throw std::invalid_argument("Flag " + name_ + ": uniformity mismatch");
        if (static_cast<int>(typeMap_.size()) != s || t < s)
            throw std::invalid_argument("Flag " + name_ + ": type map size must equal |sigma| <= |host|");
        VertexSet used = 0;
        for (int v : typeMap_) {
            if (v < 0 || v >= t || ((used >> v) & 1U))
                throw std::invalid_argument("Flag " + name_ + ": type map is not an injection into the host");
            used |= VertexSet{1} << v;
        }
        if (host_.inducedOrdered(typeMap_) != sigma_.graph)
            throw std::invalid_argument("Flag " + name_ + ": host restricted to the type map does not equal " +
                                        sigma_.name);

        std::vector<int> order = typeMap_;
        for (int v = 0; v < t; ++v)
            if (!((used >> v) & 1U)) order.push_back(v);
        normalized_ = host_.inducedOrdered(order);

        // All masks obtained by permuting the untyped vertices.
        std::vector<int> perm(static_cast<std::size_t>(t));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            variants_.push_back(normalized_.permuted(perm).mask());
        } while (std::next_permutation(perm.begin() + s, perm.end()));
        std::sort(variants_.begin(), variants_.end());
        variants_.erase(std::unique(variants_.begin(), variants_.end()), variants_.end());
    }

    /// The flag consisting of the type alone.
    static Flag unit(const TypeSigma& sigma) {
        std::vector<int> ident(static_cast<std::size_t>(sigma.size()));
        std::iota(ident.begin(), ident.end(), 0);
        return Flag(sigma.name, sigma.graph, ident, sigma);
    }

    const std::string& name() const { return name_; }
    const Hypergraph& host() const { return host_; }
    const std::vector<int>& typeMap() const { return typeMap_; }
    const TypeSigma& sigma() const { return sigma_; }
    int size() const { return host_.n(); }
    int extra() const { return host_.n() - sigma_.size(); }

    /// Host relabeled so the type occupies vertices 0..s-1 in label order.
    const Hypergraph& normalized() const { return normalized_; }

    /// True iff `labeled` (t vertices, type first) is isomorphic to this flag
    /// by a map fixing the typed vertices pointwise.
    bool matches(const Hypergraph& labeled) const {
        return labeled.n() == size() && std::binary_search(variants_.begin(), variants_.end(), labeled.mask());
    }

private:
    std::string name_;
    Hypergraph host_;
    std::vector<int> typeMap_;
    TypeSigma sigma_;
    Hypergraph normalized_;
    std::vector<EdgeMask> variants_;
};

using Embedding = std::vector<int>;

/// All injective label-respecting maps theta of the type into H with
/// H|im(theta), labeled by theta, equal to sigma.
inline std::vector<Embedding> typeEmbeddings(const TypeSigma& sigma, const Hypergraph& h) {
    if (sigma.size() > h.n()) throw std::invalid_argument("typeEmbeddings: type larger than host");
    std::vector<Embedding> out;
    Embedding cur;
    VertexSet used = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == sigma.size()) {
            if (h.inducedOrdered(cur) == sigma.graph) out.push_back(cur);
            return;
        }
        for (int v = 0; v < h.n(); ++v) {
            if ((used >> v) & 1U) continue;
            cur.push_back(v);
            used |= VertexSet{1} << v;
            self(self);
            used &= ~(VertexSet{1} << v);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

/// Number of injective s-tuples into an n-set, the averaging denominator.
inline Integer injectiveTuples(int n, int s) {
    Integer out = 1;
    for (int i = 0; i < s; ++i) out *= n - i;
    return out;
}

namespace detail {

inline VertexSet freeVertices(const Hypergraph& h, const Embedding& theta) {
    VertexSet used = 0;
    for (int v : theta) used |= VertexSet{1} << v;
    return h.allVertices() & ~used;
}

/// Extension sets S (as vertex sets) of size |F| - s inside `freeSet` with
/// (H|(theta + S), theta) isomorphic to F.
inline std::vector<VertexSet> matchingExtensions(const Flag& f, const Hypergraph& h, const Embedding& theta,
                                                 VertexSet freeSet) {
    std::vector<VertexSet> out;
    const auto freeList = members(freeSet);
    for (VertexSet local : subsetsColex(static_cast<int>(freeList.size()), f.extra())) {
        Embedding order = theta;
        VertexSet chosen = 0;
        for (int i : members(local)) {
            order.push_back(freeList[static_cast<std::size_t>(i)]);
            chosen |= VertexSet{1} << freeList[static_cast<std::size_t>(i)];
        }
        if (f.matches(h.inducedOrdered(order))) out.push_back(chosen);
    }
    return out;
}

inline void checkSharedType(const Flag& a, const Flag& b) {
    if (!(a.sigma() == b.sigma()))
        throw std::invalid_argument("flags " + a.name() + " and " + b.name() + " have different types");
}

}  // namespace detail

/// Probability that a uniformly random (|F|-s)-subset of the free vertices
/// extends theta to a copy of F.
inline Rational extensionDensity(const Flag& f, const Hypergraph& h, const Embedding& theta) {
    const VertexSet freeSet = detail::freeVertices(h, theta);
    const int free = std::popcount(freeSet);
    if (free < f.extra()) throw std::invalid_argument("extensionDensity: not enough free vertices");
    const auto hits = detail::matchingExtensions(f, h, theta, freeSet);
    return Rational(toInteger(hits.size()), binomial(free, f.extra()));
}

/// Probability over uniformly random ordered pairs of disjoint extension
/// sets (Sa, Sb) that both extend theta to copies of Fa and Fb.
inline Rational pairDensity(const Flag& fa, const Flag& fb, const Hypergraph& h, const Embedding& theta) {
    detail::checkSharedType(fa, fb);
    const VertexSet freeSet = detail::freeVertices(h, theta);
    const int free = std::popcount(freeSet);
    if (free < fa.extra() + fb.extra())
        throw std::invalid_argument("pairDensity: host has " + std::to_string(free) + " free vertices, need " +
                                    std::to_string(fa.extra() + fb.extra()));
    const auto sa = detail::matchingExtensions(fa, h, theta, freeSet);
    const auto sb = detail::matchingExtensions(fb, h, theta, freeSet);
    long hits = 0;
    for (VertexSet a : sa)
        for (VertexSet b : sb) hits += (a & b) == 0;
    return Rational(toInteger(hits), binomial(free, fa.extra()) * binomial(free - fa.extra(), fb.extra()));
}

struct FlagTerm {
    Rational coefficient;
    Flag flag;
};

/// Coefficients over the classes of H_N, keyed by canonical mask.
struct ExpansionVector {
    int size = 0;
    int k = 0;
    std::map<EdgeMask, Rational> coefficients;

    Rational at(EdgeMask canonicalMask) const {
        auto it = coefficients.find(canonicalMask);
        return it == coefficients.end() ? Rational(0) : it->second;
    }
    Rational at(const Hypergraph& h) const { return at(canonicalize(h).mask); }
};

/// Shared isomorphism class list of H_n^(k), built once per (n, k).
inline const std::vector<Hypergraph>& classesOf(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Hypergraph>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::make_unique<std::vector<Hypergraph>>(enumerateAll(n, k));
    return *slot;
}

namespace detail {

inline int commonSize(const TypeSigma& sigma, const std::vector<FlagTerm>& terms) {
    int t = sigma.size();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!(terms[i].flag.sigma() == sigma))
            throw std::invalid_argument("flag " + terms[i].flag.name() + " does not have type " + sigma.name);
        if (i == 0) t = terms[i].flag.size();
        if (terms[i].flag.size() != t) throw std::invalid_argument("all flags in a square must have the same size");
    }
    return t;
}

}  // namespace detail

/// Value at the host H of [[ (sum_i a_i F_i - c sigma)^2 ]]_sigma.
inline Rational squareValue(const TypeSigma& sigma, const std::vector<FlagTerm>& terms, const Rational& constant,
                            const Hypergraph& h) {
    const int t = detail::commonSize(sigma, terms);
    const int s = sigma.size();
    if (h.n() < 2 * t - s)
        throw std::invalid_argument("squareValue: host has " + std::to_string(h.n()) + " vertices, need " +
                                    std::to_string(2 * t - s));
    const int extra = t - s;
    Rational total(0);
    for (const Embedding& theta : typeEmbeddings(sigma, h)) {
        const VertexSet freeSet = detail::freeVertices(h, theta);
        const int free = std::popcount(freeSet);
        std::vector<std::vector<VertexSet>> hits;
        for (const auto& term : terms) hits.push_back(detail::matchingExtensions(term.flag, h, theta, freeSet));
        Rational value = constant * constant;
        if (!terms.empty()) {
            const Integer singles = binomial(free, extra);
            const Integer pairs = singles * binomial(free - extra, extra);
            Rational linear(0);
            Rational quadratic(0);
            for (std::size_t i = 0; i < terms.size(); ++i) {
                linear += terms[i].coefficient * Rational(toInteger(hits[i].size()), singles);
                for (std::size_t j = 0; j < terms.size(); ++j) {
                    long both = 0;
                    for (VertexSet a : hits[i])
                        for (VertexSet b : hits[j]) both += (a & b) == 0;
                    if (both != 0)
                        quadratic += terms[i].coefficient * terms[j].coefficient * Rational(toInteger(both), pairs);
                }
            }
            value += quadratic - Rational(2) * constant * linear;
        }
        total += value;
    }
    return total / Rational(injectiveTuples(h.n(), s));
}

/// Value at the host H of [[ sum_i a_i F_i - c sigma ]]_sigma.
inline Rational linearValue(const TypeSigma& sigma, const std::vector<FlagTerm>& terms, const Rational& constant,
                            const Hypergraph& h) {
    detail::commonSize(sigma, terms);
    Rational total(0);
    for (const Embedding& theta : typeEmbeddings(sigma, h)) {
        Rational value = -constant;
        for (const auto& term : terms) value += term.coefficient * extensionDensity(term.flag, h, theta);
        total += value;
    }
    return total / Rational(injectiveTuples(h.n(), sigma.size()));
}

/// Coefficients at size N from coefficients at size t <= N, via
/// d(F, G) = sum_H d(F, H) d(H, G).
inline ExpansionVector chainLift(const ExpansionVector& v, int n) {
    if (n < v.size) throw std::invalid_argument("chainLift: target size below source size");
    if (n == v.size) return v;
    ExpansionVector out{n, v.k, {}};
    for (const Hypergraph& h : classesOf(n, v.k)) {
        Rational c(0);
        for (const auto& [mask, count] : inducedProfile(h, v.size)) {
            const Rational coeff = v.at(mask);
            if (!coeff.isZero()) c += coeff * Rational(toInteger(count), binomial(n, v.size));
        }
        out.coefficients.emplace(h.mask(), c);
    }
    return out;
}

/// sum_H v(H) d(H, G) for a host G with |G| >= v.size.
inline Rational evaluate(const ExpansionVector& v, const Hypergraph& g) {
    if (g.k() != v.k || g.n() < v.size) throw std::invalid_argument("evaluate: host too small or wrong uniformity");
    Rational out(0);
    for (const auto& [mask, count] : inducedProfile(g, v.size))
        out += v.at(mask) * Rational(toInteger(count), binomial(g.n(), v.size));
    return out;
}

/// The square expanded at its natural size 2t - s, then lifted to N.
inline ExpansionVector squareExpansion(const TypeSigma& sigma, const std::vector<FlagTerm>& terms,
                                       const Rational& constant, int n) {
    const int t = detail::commonSize(sigma, terms);
    const int natural = terms.empty() ? sigma.size() : 2 * t - sigma.size();
    if (natural > n)
        throw std::invalid_argument("squareExpansion: needs host size " + std::to_string(natural) + " > N=" +
                                    std::to_string(n));
    ExpansionVector v{natural, sigma.k(), {}};
    for (const Hypergraph& h : classesOf(natural, sigma.k()))
        v.coefficients.emplace(h.mask(), squareValue(sigma, terms, constant, h));
    return chainLift(v, n);
}

/// [[ sum_i a_i F_i - c sigma ]]_sigma expanded at size t, then lifted to N.
inline ExpansionVector linearExpansion(const TypeSigma& sigma, const std::vector<FlagTerm>& terms,
                                       const Rational& constant, int n) {
    const int t = detail::commonSize(sigma, terms);
    ExpansionVector v{t, sigma.k(), {}};
    for (const Hypergraph& h : classesOf(t, sigma.k()))
        v.coefficients.emplace(h.mask(), linearValue(sigma, terms, constant, h));
    return chainLift(v, n);
}

}  // namespace turankit
