#pragma once

// HGR1 cache files: one canonical representative per isomorphism class.
//
//   HGR1 <k> <n> <count> <filter-tag>
//   <lowercase hex mask>        (one per line, ascending)
//
// Files are written to a temporary name with exclusive create and then
// renamed into place, so readers never see a partial file.

#include "turankit/canonical.hpp"
#include "turankit/enumerate.hpp"
#include "turankit/hypergraph.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <unistd.h>
#include <vector>

namespace turankit {

namespace fs = std::filesystem;

struct CacheHeader {
    int k = 0;
    int n = 0;
    std::size_t count = 0;
    std::string filterTag = "none";
};

/// `TURANKIT_CACHE` when set and non-empty, else `./.hgr-cache`.
inline fs::path defaultCacheDir() {
    if (const char* env = std::getenv("TURANKIT_CACHE"); env && *env) return fs::path(env);
    return fs::path(".hgr-cache");
}

inline fs::path cachePath(const fs::path& dir, int k, int n, const std::string& filterTag) {
    return dir / ("hgr1-k" + std::to_string(k) + "-n" + std::to_string(n) + "-" + filterTag + ".txt");
}

inline std::string formatCache(const std::vector<Hypergraph>& graphs, int k, int n, const std::string& filterTag) {
    std::ostringstream out;
    out << "HGR1 " << k << ' ' << n << ' ' << graphs.size() << ' ' << filterTag << '\n';
    for (const Hypergraph& g : graphs) {
        if (g.k() != k || g.n() != n) throw std::invalid_argument("formatCache: graph size mismatch");
        out << CanonicalCode{n, k, g.mask()}.hex() << '\n';
    }
    return out.str();
}

/// Parses and validates HGR1 text: header fields, count, ascending order,
/// and that every mask is canonical and within range.
inline std::vector<Hypergraph> parseCache(std::istream& in, CacheHeader* headerOut = nullptr) {
    std::string magic;
    CacheHeader h;
    std::string headerLine;
    if (!std::getline(in, headerLine)) throw std::runtime_error("HGR1: empty file");
    std::istringstream hs(headerLine);
    if (!(hs >> magic >> h.k >> h.n >> h.count >> h.filterTag) || magic != "HGR1")
        throw std::runtime_error("HGR1: malformed header '" + headerLine + "'");
    if (h.n < 0 || h.n > kMaxVertices || h.k < 1 || h.k > h.n) throw std::runtime_error("HGR1: bad k/n in header");
    const Canonicalizer& canon = canonicalizerFor(h.n, h.k);
    const EdgeMask full = Hypergraph::empty(h.n, h.k).fullMask();

    std::vector<Hypergraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(line, &used, 16);
        } catch (const std::exception&) {
            throw std::runtime_error("HGR1: bad mask line '" + line + "'");
        }
        if (used != line.size()) throw std::runtime_error("HGR1: bad mask line '" + line + "'");
        const EdgeMask mask = value;
        if (mask & ~full) throw std::runtime_error("HGR1: mask " + line + " out of range");
        if (!canon.isCanonical(mask)) throw std::runtime_error("HGR1: mask " + line + " is not canonical");
        if (!out.empty() && out.back().mask() >= mask) throw std::runtime_error("HGR1: masks not strictly ascending");
        out.emplace_back(h.n, h.k, mask);
    }
    if (out.size() != h.count)
        throw std::runtime_error("HGR1: header count " + std::to_string(h.count) + " but " +
                                 std::to_string(out.size()) + " masks");
    if (headerOut) *headerOut = h;
    return out;
}

inline std::vector<Hypergraph> readCache(const fs::path& path, CacheHeader* headerOut = nullptr) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("HGR1: cannot open " + path.string());
    return parseCache(in, headerOut);
}

/// Writes atomically: exclusive-create a temporary sibling, then rename.
inline void writeCache(const fs::path& path, const std::vector<Hypergraph>& graphs, int k, int n,
                       const std::string& filterTag) {
    const std::string text = formatCache(graphs, k, n, filterTag);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
    std::FILE* f = std::fopen(tmp.c_str(), "wx");
    if (!f) throw std::system_error(errno, std::generic_category(), "HGR1: cannot create " + tmp.string());
    const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    if (std::fclose(f) != 0 || !ok) {
        fs::remove(tmp);
        throw std::runtime_error("HGR1: write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

struct CacheLoad {
    std::vector<Hypergraph> graphs;
    fs::path path;
    bool built = false;  // true when the file was missing and has been written now
};

/// Reads the cache for (k, n, filter) from `dir`, enumerating and writing it
/// first when absent.
inline CacheLoad loadOrBuild(const fs::path& dir, int n, int k, const GraphFilter& filter) {
    CacheLoad res;
    res.path = cachePath(dir, k, n, filter.tag);
    if (fs::exists(res.path)) {
        CacheHeader h;
        res.graphs = readCache(res.path, &h);
        if (h.k != k || h.n != n || h.filterTag != filter.tag)
            throw std::runtime_error("HGR1: header of " + res.path.string() + " does not match the request");
        return res;
    }
    res.graphs = enumerateAll(n, k, filter);
    writeCache(res.path, res.graphs, k, n, filter.tag);
    res.built = true;
    return res;
}

}  // namespace turankit
