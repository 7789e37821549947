#pragma once

// One representative per isomorphism class of k-graphs on n vertices.

#include "turankit/canonical.hpp"
#include "turankit/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace turankit {

/// Largest C(n,k) for which all 2^C(n,k) labeled masks are scanned.
inline constexpr int kMaxEnumerationSlots = 20;

/// A post-dedup predicate with a stable name used in cache headers.
struct GraphFilter {
    std::string tag = "none";
    std::function<bool(const Hypergraph&)> accept;

    bool operator()(const Hypergraph& g) const { return !accept || accept(g); }
};

/// True iff every `size`-subset of V(G) contains at least one edge.
inline bool hasNoEmptySet(const Hypergraph& g, int size) {
    if (size < 0 || size > g.n()) throw std::invalid_argument("hasNoEmptySet: size must be in [0, n]");
    for (VertexSet s : subsetsColex(g.n(), size))
        if (g.isEmptyOn(s)) return false;
    return true;
}

inline GraphFilter noFilter() { return {}; }

inline GraphFilter noEmptySetFilter(int size) {
    return {"no-empty-" + std::to_string(size), [size](const Hypergraph& g) { return hasNoEmptySet(g, size); }};
}

/// Parses "none" or "no-empty-<m>".
inline GraphFilter parseFilter(std::string_view tag) {
    if (tag == "none" || tag.empty()) return noFilter();
    constexpr std::string_view prefix = "no-empty-";
    if (tag.substr(0, prefix.size()) == prefix) {
        const std::string rest(tag.substr(prefix.size()));
        if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return noEmptySetFilter(std::stoi(rest));
    }
    throw std::invalid_argument("unknown filter '" + std::string(tag) + "' (expected none|no-empty-<m>)");
}

/// Canonical representatives of all isomorphism classes, ascending by
/// canonical mask, with `filter` applied after deduplication.
inline std::vector<Hypergraph> enumerateAll(int n, int k, const GraphFilter& filter = {}) {
    const auto slots = smallBinomial(n, k);
    if (n > kMaxVertices || slots > static_cast<std::uint64_t>(kMaxEnumerationSlots))
        throw std::invalid_argument("enumerateAll: C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                    std::to_string(slots) + " exceeds the " +
                                    std::to_string(kMaxEnumerationSlots) + "-slot limit");
    const Canonicalizer& canon = canonicalizerFor(n, k);
    const EdgeMask total = EdgeMask{1} << slots;

    // Disjoint mask ranges per worker; each worker's output is already
    // sorted, so concatenation in range order keeps the global order.
    const unsigned workers = total < 4096 ? 1U : std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    std::vector<std::vector<EdgeMask>> found(workers);
    auto scan = [&](unsigned w) {
        const EdgeMask lo = total * w / workers;
        const EdgeMask hi = total * (w + 1) / workers;
        for (EdgeMask m = lo; m < hi; ++m)
            if (canon.isCanonical(m)) found[w].push_back(m);
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    }

    std::vector<Hypergraph> out;
    for (const auto& part : found)
        for (EdgeMask m : part) {
            Hypergraph g(n, k, m);
            if (filter(g)) out.push_back(g);
        }
    return out;
}

}  // namespace turankit
