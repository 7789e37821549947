#pragma once

// The turankit command line: argument parsing, dispatch, and rendering.
// `run` never calls exit(), so tests can drive it with in-memory streams.

#include "turankit/turankit.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace turankit::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kUsageError = 2 };

/// Raised for inputs that parse but violate a documented range.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    long k = 3, g = 4, r = 5, n = 100;
    std::optional<long> parts;
    std::string mode = "paper-literal";
    std::string format;
    std::string filter = "none";
    std::string suite;
    std::string eps = "0";
    std::string cacheDir;
    std::uint64_t seed = 0;
    bool entries = false;
};

namespace detail {

inline void require(bool ok, const std::string& constraint) {
    if (!ok) throw UsageError("invalid arguments: " + constraint);
}

inline void checkKgr(const RunConfig& c) {
    require(c.k >= 2, "need k >= 2");
    require(c.g >= c.k, "need g >= k");
    require(c.r > c.g, "need r > g");
}

inline EpsilonMode mode(const RunConfig& c) {
    try {
        return parseEpsilonMode(c.mode);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline std::filesystem::path cacheDir(const RunConfig& c) {
    return c.cacheDir.empty() ? defaultCacheDir() : std::filesystem::path(c.cacheDir);
}

/// Renders a JSON report in the requested format ("json" or "text").
inline void emit(const Json& j, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << '\n';
    }
}

inline std::string csvField(const std::optional<Rational>& q) { return q ? q->str() : ""; }

inline int runBound(const RunConfig& c, const std::string& format, std::ostream& out) {
    checkKgr(c);
    const EpsilonMode m = mode(c);
    const Rational threshold = vertexThreshold(c.k, c.r, m);
    require(Rational(c.n) > threshold, "n must exceed " + threshold.str() + " (Theorem 1 threshold, " +
                                           std::string(toString(m)) + " mode)");
    emit(toJson(upperBound(c.k, c.g, c.r, c.n, m)), format, out);
    return kSuccess;
}

inline int runTable(const RunConfig& c, const std::string& format, std::ostream& out) {
    require(c.k >= 2 && c.r > c.k, "need 2 <= k < r");
    const EpsilonMode m = mode(c);
    const Rational threshold = vertexThreshold(c.k, c.r, m);
    require(Rational(c.n) > threshold, "n must exceed " + threshold.str() + " (Theorem 1 threshold)");
    std::vector<BoundReport> rows;
    for (long g = c.k; g < c.r; ++g) rows.push_back(upperBound(c.k, g, c.r, c.n, m));
    if (format == "csv") {
        out << "k,g,r,n,mode,asymptotic,finiteBound,deCaen,lowerBound,finiteBoundApprox\n";
        for (const auto& b : rows)
            out << b.k << ',' << b.g << ',' << b.r << ',' << b.n << ',' << toString(b.mode) << ','
                << b.asymptotic.str() << ',' << b.finiteBound.str() << ',' << csvField(b.deCaen) << ','
                << csvField(b.lowerBound) << ',' << b.finiteBound.decimal() << '\n';
        return kSuccess;
    }
    Json arr = Json::array();
    for (const auto& b : rows) arr.push_back(toJson(b));
    Json j;
    j["rows"] = arr;
    emit(j, format, out);
    return kSuccess;
}

inline int runLower(const RunConfig& c, const std::string& format, std::ostream& out) {
    checkKgr(c);
    long parts = 0;
    if (c.parts) {
        parts = *c.parts;
        require(parts >= 1, "need parts >= 1");
    } else {
        require((c.r - 1) % (c.k - 1) == 0, "(k-1) must divide (r-1) unless --parts is given");
        parts = (c.r - 1) / (c.k - 1);
    }
    const PartiteLowerBound lb = partiteLowerBound(c.k, c.g, parts);
    const Rational upper = asymptoticBound(c.k, c.g, c.r);
    Json j;
    j["k"] = c.k;
    j["g"] = c.g;
    j["r"] = c.r;
    j["parts"] = parts;
    j["lower"] = toJson(lb);
    j["asymptoticUpper"] = upper.str();
    // The construction is K_r-free only with exactly (r-1)/(k-1) parts.
    const bool admissible = parts * (c.k - 1) <= c.r - 1;
    j["admissible"] = admissible;
    const bool consistent = !admissible || lb.direct <= upper;
    j["directWithinUpper"] = consistent;
    if (!lb.agree())
        j["diagnostic"] = "printed formula " + lb.printedFormula.str() + " disagrees with direct count " +
                          lb.direct.str();
    if (c.g == c.r - 1 && (c.r - 1) % (c.k - 1) == 0) j["sandwich"] = toJson(sandwichTable(c.k, c.r));
    emit(j, format, out);
    return consistent ? kSuccess : kMathFailure;
}

inline int runEnumerate(const RunConfig& c, const std::string& format, std::ostream& out) {
    require(c.k >= 1 && c.n >= c.k, "need 1 <= k <= n");
    require(c.n <= kMaxVertices, "need n <= " + std::to_string(kMaxVertices));
    require(smallBinomial(static_cast<int>(c.n), static_cast<int>(c.k)) <=
                static_cast<std::uint64_t>(kMaxEnumerationSlots),
            "C(n,k) must be at most " + std::to_string(kMaxEnumerationSlots));
    GraphFilter filter;
    try {
        filter = parseFilter(c.filter);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const int k = static_cast<int>(c.k);
    const int n = static_cast<int>(c.n);
    const auto graphs = enumerateAll(n, k, filter);
    const auto path = cachePath(cacheDir(c), k, n, filter.tag);
    writeCache(path, graphs, k, n, filter.tag);
    Json j;
    j["k"] = k;
    j["n"] = n;
    j["filter"] = filter.tag;
    j["count"] = graphs.size();
    j["cache"] = path.string();
    emit(j, format, out);
    return kSuccess;
}

inline int runCertificate(const RunConfig& c, const std::string& format, std::ostream& out, std::ostream& err) {
    const CacheLoad load = loadOrBuild(cacheDir(c), 6, 3, noEmptySetFilter(5));
    if (load.built) err << "note: built missing cache " << load.path.string() << '\n';
    const CertificateReport rep = verifyCertificate(load.graphs);
    Json j = toJson(rep, c.entries);
    Json construction = Json::object();
    bool decreasing = true;
    Rational previous;
    for (int n = 6; n <= 16; n += 2) {
        const Rational d = twoCliqueDensity(n);
        if (n > 6) decreasing = decreasing && d < previous && d > certificateBound();
        construction[std::to_string(n)] = d.str();
        previous = d;
    }
    j["bound"] = certificateBound().str();
    j["twoCliqueDensity"] = construction;
    j["twoCliqueDecreasing"] = decreasing;
    j["cache"] = load.path.string();
    emit(j, format, out);
    return rep.pass && decreasing ? kSuccess : kMathFailure;
}

inline int runVerify(const RunConfig& c, const std::string& format, std::ostream& out) {
    SuiteReport rep;
    if (c.suite == "lemma")
        rep = runLemmaSuite();
    else if (c.suite == "claims")
        rep = c.seed ? runClaimsSuite(c.seed) : runClaimsSuite();
    else if (c.suite == "rows")
        rep = c.seed ? runRowsSuite(c.seed) : runRowsSuite();
    else
        throw UsageError("invalid arguments: --suite must be lemma, claims or rows");
    Json j;
    j["suite"] = rep.suite;
    j["checks"] = rep.checks;
    j["failures"] = rep.failures;
    j["warnings"] = rep.warnings;
    j["verdict"] = rep.pass() ? "pass" : "fail";
    emit(j, format, out);
    return rep.pass() ? kSuccess : kMathFailure;
}

inline int runSolve(const RunConfig& c, const std::string& format, std::ostream& out) {
    checkKgr(c);
    Rational eps;
    try {
        eps = Rational::parse(c.eps);
    } catch (const std::exception&) {
        throw UsageError("invalid arguments: --eps must be a rational p/q, got '" + c.eps + "'");
    }
    const TridiagonalSystem sys(c.k, c.r);
    const RecurrenceTables tables = recurrences(sys, eps);
    require(!tables.determinant.isZero(), "D - eps I is singular at eps = " + eps.str());
    const auto delta = solveDelta(c.k, c.g, c.r, eps);
    Json j;
    j["k"] = c.k;
    j["g"] = c.g;
    j["r"] = c.r;
    j["epsilon"] = eps.str();
    j["positivityThreshold"] = positivityThreshold(c.k, c.r).str();
    j["delta"] = toJson(delta);
    j["bound"] = (delta.front() * xRatio(c.k, c.k, c.r)).str();
    j["recurrences"] = toJson(tables);
    emit(j, format, out);
    return kSuccess;
}

}  // namespace detail

/// Parses `args` (without the program name), runs the subcommand, and
/// returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypergraph Turan bounds, lower-bound constructions, and exact certificate checks", "turankit"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig c;
    app.add_option("--format", c.format, "Output format: json (default), text, or csv (table only)")
        ->check(CLI::IsMember({"json", "text", "csv"}));

    auto kgrn = [&](CLI::App* sub, bool withG, bool withN) {
        sub->add_option("--k", c.k, "Uniformity k")->required();
        if (withG) sub->add_option("--g", c.g, "Clique size g")->required();
        sub->add_option("--r", c.r, "Forbidden clique size r")->required();
        if (withN) sub->add_option("--n", c.n, "Number of vertices n")->required();
    };

    auto* bound = app.add_subcommand("bound", "Finite-n upper bound on the K_g density of K_r-free k-graphs");
    kgrn(bound, true, true);
    bound->add_option("--mode", c.mode, "Epsilon mode: paper-literal or corrected");

    auto* table = app.add_subcommand("table", "Bounds for every g in [k, r-1], as CSV");
    kgrn(table, false, true);
    table->add_option("--mode", c.mode, "Epsilon mode: paper-literal or corrected");

    auto* lower = app.add_subcommand("lower", "Partite lower-bound construction");
    kgrn(lower, true, false);
    lower->add_option("--parts", c.parts, "Number of parts (default (r-1)/(k-1))");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate isomorphism classes and write the cache");
    enumerate->add_option("--k", c.k, "Uniformity k")->required();
    enumerate->add_option("--n", c.n, "Number of vertices")->required();
    enumerate->add_option("--filter", c.filter, "none or no-empty-<m>");
    enumerate->add_option("--cache-dir", c.cacheDir, "Cache directory (default $TURANKIT_CACHE or ./.hgr-cache)");

    auto* certificate = app.add_subcommand("certificate", "Verify the 3/8 certificate over E5-free 6-vertex 3-graphs");
    certificate->add_option("--cache-dir", c.cacheDir, "Cache directory (default $TURANKIT_CACHE or ./.hgr-cache)");
    certificate->add_flag("--entries", c.entries, "Include every graph's slack in the report");

    auto* verify = app.add_subcommand("verify", "Exhaustive checks of the density relations");
    verify->add_option("--suite", c.suite, "lemma, claims or rows")->required();
    verify->add_option("--seed", c.seed, "Seed for the random graph sample");

    auto* solve = app.add_subcommand("solve", "Delta vector and recurrence tables of D - eps I");
    kgrn(solve, true, false);
    solve->add_option("--eps", c.eps, "Shift eps as p/q (default 0)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    c.subcommand = chosen->get_name();
    const std::string format = c.format.empty() ? (c.subcommand == "table" ? "csv" : "json") : c.format;
    try {
        detail::require(format != "csv" || c.subcommand == "table", "--format csv is only supported by table");
        if (c.subcommand == "bound") return detail::runBound(c, format, out);
        if (c.subcommand == "table") return detail::runTable(c, format, out);
        if (c.subcommand == "lower") return detail::runLower(c, format, out);
        if (c.subcommand == "enumerate") return detail::runEnumerate(c, format, out);
        if (c.subcommand == "certificate") return detail::runCertificate(c, format, out, err);
        if (c.subcommand == "verify") return detail::runVerify(c, format, out);
        if (c.subcommand == "solve") return detail::runSolve(c, format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        // Library precondition violations are argument errors too.
        err << "error: invalid arguments: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: invalid arguments: " << e.what() << '\n';
        return kUsageError;
    }
    err << "error: unknown subcommand\n";
    return kUsageError;
}

}  // namespace turankit::cli
