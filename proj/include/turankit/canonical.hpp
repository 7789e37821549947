#pragma once

// Canonical labeling by exhaustive minimization over vertex permutations.
//
// The canonical code of a hypergraph is the numerically smallest edge mask
// among all n! relabelings. For n <= 8 this is cheap enough that no
// refinement is needed, and it is exact by construction.

#include "turankit/hypergraph.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace turankit {

struct CanonicalCode {
    int n = 0;
    int k = 0;
    EdgeMask mask = 0;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

    /// Lowercase hex of the mask, bit 0 least significant.
    std::string hex() const {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(mask));
        return buf;
    }

    Hypergraph graph() const { return Hypergraph(n, k, mask); }
};

/// Precomputed action of S_n on the edge slots of k-graphs on n vertices.
class Canonicalizer {
public:
    Canonicalizer(int n, int k) : n_(n), k_(k), slots_(static_cast<int>(smallBinomial(n, k))) {
        if (n > kMaxVertices || slots_ > 64) throw std::invalid_argument("Canonicalizer: size out of range");
        const auto subsets = subsetsColex(n, k);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms_.push_back(perm);
            std::vector<std::uint8_t> image(static_cast<std::size_t>(slots_));
            for (int i = 0; i < slots_; ++i) {
                VertexSet img = 0;
                for (int v : members(subsets[static_cast<std::size_t>(i)])) img |= VertexSet{1} << perm[static_cast<std::size_t>(v)];
                image[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(colexRank(img));
            }
            images_.push_back(std::move(image));
        } while (std::next_permutation(perm.begin(), perm.end()));

        chunks_ = (slots_ + 7) / 8;
        const std::size_t tableBytes = perms_.size() * static_cast<std::size_t>(chunks_) * 256 * sizeof(EdgeMask);
        if (tableBytes <= kTableBudget) {
            tables_.assign(perms_.size() * static_cast<std::size_t>(chunks_) * 256, 0);
            for (std::size_t p = 0; p < perms_.size(); ++p)
                for (int c = 0; c < chunks_; ++c)
                    for (int byte = 0; byte < 256; ++byte) {
                        EdgeMask out = 0;
                        for (int b = 0; b < 8; ++b) {
                            const int slot = c * 8 + b;
                            if (slot < slots_ && ((byte >> b) & 1))
                                out |= EdgeMask{1} << images_[p][static_cast<std::size_t>(slot)];
                        }
                        tables_[(p * static_cast<std::size_t>(chunks_) + static_cast<std::size_t>(c)) * 256 +
                                static_cast<std::size_t>(byte)] = out;
                    }
        }
    }

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t permutationCount() const { return perms_.size(); }
    const std::vector<int>& permutation(std::size_t p) const { return perms_[p]; }

    /// Mask of the graph relabeled by permutation p.
    EdgeMask apply(std::size_t p, EdgeMask mask) const {
        EdgeMask out = 0;
        if (!tables_.empty()) {
            const EdgeMask* t = &tables_[p * static_cast<std::size_t>(chunks_) * 256];
            for (int c = 0; c < chunks_; ++c, t += 256, mask >>= 8) out |= t[mask & 0xFF];
            return out;
        }
        const auto& image = images_[p];
        for (; mask != 0; mask &= mask - 1) out |= EdgeMask{1} << image[static_cast<std::size_t>(std::countr_zero(mask))];
        return out;
    }

    EdgeMask canonicalMask(EdgeMask mask) const {
        EdgeMask best = mask;
        for (std::size_t p = 1; p < perms_.size(); ++p) best = std::min(best, apply(p, mask));
        return best;
    }

    /// True iff no relabeling produces a smaller mask.
    bool isCanonical(EdgeMask mask) const {
        for (std::size_t p = 1; p < perms_.size(); ++p)
            if (apply(p, mask) < mask) return false;
        return true;
    }

    /// Indices of permutations fixing the mask (the automorphism group).
    std::vector<std::size_t> automorphisms(EdgeMask mask) const {
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < perms_.size(); ++p)
            if (apply(p, mask) == mask) out.push_back(p);
        return out;
    }

private:
    static constexpr std::size_t kTableBudget = std::size_t{16} << 20;

    int n_;
    int k_;
    int slots_;
    int chunks_ = 0;
    std::vector<std::vector<int>> perms_;
    std::vector<std::vector<std::uint8_t>> images_;
    std::vector<EdgeMask> tables_;
};

/// Shared, lazily built canonicalizer for (n, k). Thread-safe.
inline const Canonicalizer& canonicalizerFor(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<Canonicalizer>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::make_unique<Canonicalizer>(n, k);
    return *slot;
}

inline CanonicalCode canonicalize(const Hypergraph& g) {
    return {g.n(), g.k(), canonicalizerFor(g.n(), g.k()).canonicalMask(g.mask())};
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    return a.n() == b.n() && a.k() == b.k() && a.edgeCount() == b.edgeCount() && canonicalize(a) == canonicalize(b);
}

}  // namespace turankit
