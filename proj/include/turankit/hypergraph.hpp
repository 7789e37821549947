#pragma once

// Small k-uniform hypergraphs stored as a bitmask over k-subsets.
//
// Bit i of the mask corresponds to the i-th k-subset of {0..n-1} in
// colexicographic order, i.e. the subset {v_1 < ... < v_k} has index
// sum_j C(v_j, j). Colex order is prefix-stable: the k-subsets of
// {0..n-1} are exactly the first C(n,k) subsets of {0..n}.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace turankit {

using EdgeMask = std::uint64_t;
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 8;

namespace detail {

struct SmallBinomials {
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    constexpr SmallBinomials() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int j = 1; j <= n; ++j) c[n][j] = c[n - 1][j - 1] + (j <= n - 1 ? c[n - 1][j] : 0);
        }
    }
};

inline constexpr SmallBinomials kBinomials{};

}  // namespace detail

/// C(n, j) for 0 <= n <= 64 as a machine integer; 0 outside 0 <= j <= n.
constexpr std::uint64_t smallBinomial(int n, int j) {
    if (n < 0 || n > 64 || j < 0 || j > n) return 0;
    return detail::kBinomials.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

/// Colex index of a vertex set (its size is the subset size).
constexpr std::uint64_t colexRank(VertexSet set) {
    std::uint64_t rank = 0;
    int j = 1;
    while (set != 0) {
        const int v = std::countr_zero(set);
        rank += smallBinomial(v, j);
        set &= set - 1;
        ++j;
    }
    return rank;
}

/// All j-subsets of {0..n-1} as vertex bitsets, in colex order.
inline std::vector<VertexSet> subsetsColex(int n, int j) {
    std::vector<VertexSet> out;
    if (j < 0 || j > n) return out;
    if (j == 0) return {0};
    // Gosper's hack enumerates same-popcount masks in increasing numeric
    // order, which for bitsets is colex order.
    VertexSet s = (VertexSet{1} << j) - 1;
    const VertexSet limit = VertexSet{1} << n;
    while (s < limit) {
        out.push_back(s);
        const VertexSet c = s & (~s + 1);
        const VertexSet rr = s + c;
        s = (((rr ^ s) >> 2) / c) | rr;
    }
    return out;
}

inline std::vector<int> members(VertexSet set) {
    std::vector<int> out;
    for (; set != 0; set &= set - 1) out.push_back(std::countr_zero(set));
    return out;
}

class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, int k, EdgeMask edges = 0) : n_(n), k_(k), edges_(edges) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Hypergraph: n must be in [0, 8], got " + std::to_string(n));
        if (k < 1) throw std::invalid_argument("Hypergraph: k must be positive");
        if (edgeSlots() > 64)
            throw std::invalid_argument("Hypergraph: C(" + std::to_string(n) + "," + std::to_string(k) +
                                        ") k-subsets do not fit a 64-bit mask");
        if (edges & ~fullMask()) throw std::invalid_argument("Hypergraph: mask has bits beyond C(n,k)");
    }

    static Hypergraph complete(int n, int k) {
        Hypergraph h(n, k);
        h.edges_ = h.fullMask();
        return h;
    }
    static Hypergraph empty(int n, int k) { return Hypergraph(n, k); }

    static Hypergraph fromEdges(int n, int k, std::initializer_list<std::initializer_list<int>> edges) {
        Hypergraph h(n, k);
        for (const auto& e : edges) {
            VertexSet s = 0;
            for (int v : e) {
                if (v < 0 || v >= n) throw std::invalid_argument("fromEdges: vertex out of range");
                s |= VertexSet{1} << v;
            }
            h.addEdge(s);
        }
        return h;
    }

    /// Disjoint union of complete k-graphs with the given part sizes.
    static Hypergraph disjointCliques(std::span<const int> parts, int k) {
        int n = 0;
        for (int p : parts) n += p;
        Hypergraph h(n, k);
        std::vector<int> partOf;
        for (std::size_t i = 0; i < parts.size(); ++i) partOf.insert(partOf.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
        const auto subsets = subsetsColex(n, k);
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            const auto vs = members(subsets[i]);
            bool same = true;
            for (int v : vs) same = same && partOf[static_cast<std::size_t>(v)] == partOf[static_cast<std::size_t>(vs[0])];
            if (same) h.edges_ |= EdgeMask{1} << i;
        }
        return h;
    }

    static Hypergraph random(int n, int k, std::mt19937_64& rng, double edgeProbability = 0.5) {
        Hypergraph h(n, k);
        std::bernoulli_distribution coin(edgeProbability);
        for (std::uint64_t i = 0; i < h.edgeSlots(); ++i)
            if (coin(rng)) h.edges_ |= EdgeMask{1} << i;
        return h;
    }

    int n() const { return n_; }
    int k() const { return k_; }
    EdgeMask mask() const { return edges_; }
    std::uint64_t edgeSlots() const { return smallBinomial(n_, k_); }
    EdgeMask fullMask() const {
        const auto slots = edgeSlots();
        return slots == 64 ? ~EdgeMask{0} : (EdgeMask{1} << slots) - 1;
    }
    int edgeCount() const { return std::popcount(edges_); }
    VertexSet allVertices() const { return (VertexSet{1} << n_) - 1; }

    bool hasEdge(VertexSet edge) const {
        if (std::popcount(edge) != k_) return false;
        return (edges_ >> colexRank(edge)) & 1U;
    }
    void addEdge(VertexSet edge) {
        if (std::popcount(edge) != k_ || (edge & ~allVertices()))
            throw std::invalid_argument("addEdge: not a k-subset of the vertex set");
        edges_ |= EdgeMask{1} << colexRank(edge);
    }

    std::vector<VertexSet> edges() const {
        std::vector<VertexSet> out;
        const auto subsets = subsetsColex(n_, k_);
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if ((edges_ >> i) & 1U) out.push_back(subsets[i]);
        return out;
    }

    Hypergraph complement() const {
        Hypergraph h = *this;
        h.edges_ = ~edges_ & fullMask();
        return h;
    }

    bool isComplete() const { return edges_ == fullMask(); }

    /// True iff every k-subset of `set` is an edge (vacuously for |set| < k).
    bool isCompleteOn(VertexSet set) const {
        if (std::popcount(set) < k_) return true;
        for (VertexSet e : subsetsColex(n_, k_))
            if ((e & ~set) == 0 && !hasEdge(e)) return false;
        return true;
    }

    /// True iff `set` contains no edge.
    bool isEmptyOn(VertexSet set) const {
        for (VertexSet e : edges())
            if ((e & ~set) == 0) return false;
        return true;
    }

    /// Relabels vertex v as perm[v].
    Hypergraph permuted(std::span<const int> perm) const {
        if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permuted: wrong permutation size");
        Hypergraph h(n_, k_);
        for (VertexSet e : edges()) {
            VertexSet img = 0;
            for (int v : members(e)) img |= VertexSet{1} << perm[static_cast<std::size_t>(v)];
            h.edges_ |= EdgeMask{1} << colexRank(img);
        }
        return h;
    }

    /// Sub-hypergraph induced on `order`, with order[i] becoming vertex i.
    Hypergraph inducedOrdered(std::span<const int> order) const {
        const int t = static_cast<int>(order.size());
        Hypergraph h(t, k_);
        const auto local = subsetsColex(t, k_);
        for (std::size_t i = 0; i < local.size(); ++i) {
            VertexSet image = 0;
            for (int v : members(local[i])) image |= VertexSet{1} << order[static_cast<std::size_t>(v)];
            if (hasEdge(image)) h.edges_ |= EdgeMask{1} << i;
        }
        return h;
    }

    /// Sub-hypergraph induced on `set`, vertices relabeled in increasing order.
    Hypergraph induced(VertexSet set) const {
        const auto order = members(set);
        return inducedOrdered(order);
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    int k_ = 1;
    EdgeMask edges_ = 0;
};

}  // namespace turankit
