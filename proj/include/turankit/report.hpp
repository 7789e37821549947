#pragma once

// JSON renderings of the library's reports. Rationals are always exact
// "p/q" strings; decimals appear only under "...Approx" keys.

#include "turankit/bounds.hpp"
#include "turankit/certificate.hpp"
#include "turankit/combinatorics.hpp"
#include "turankit/rational.hpp"
#include "turankit/tridiagonal.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace turankit {

using Json = nlohmann::ordered_json;

inline Json toJson(const Rational& q) { return q.str(); }

inline Json toJson(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const Rational& q : v) arr.push_back(q.str());
    return arr;
}

inline Json toJson(const BoundReport& b) {
    Json j;
    j["k"] = b.k;
    j["g"] = b.g;
    j["r"] = b.r;
    j["n"] = b.n;
    j["mode"] = std::string(toString(b.mode));
    j["epsilon"] = b.epsilon.str();
    j["threshold"] = b.threshold.str();
    j["thresholdOk"] = b.thresholdOk;
    j["finiteFactor"] = b.finiteFactor.str();
    j["asymptotic"] = b.asymptotic.str();
    j["finiteBound"] = b.finiteBound.str();
    j["solvedBound"] = b.solvedBound.str();
    j["deCaen"] = b.deCaen ? Json(b.deCaen->str()) : Json(nullptr);
    j["lowerBound"] = b.lowerBound ? Json(b.lowerBound->str()) : Json(nullptr);
    j["finiteBoundApprox"] = b.finiteBound.decimal();
    return j;
}

inline Json toJson(const PartiteLowerBound& p) {
    Json j;
    j["direct"] = p.direct.str();
    j["printedFormula"] = p.printedFormula.str();
    j["agree"] = p.agree();
    return j;
}

inline Json toJson(const SandwichTable& t) {
    Json j;
    j["k"] = t.k;
    j["r"] = t.r;
    j["parts"] = t.parts;
    j["multinomialLower"] = t.multinomialLower.str();
    j["product"] = t.product.str();
    j["expUpperApprox"] = t.expUpperText;
    j["orderingHolds"] = t.orderingHolds;
    return j;
}

inline Json toJson(const RecurrenceTables& t) {
    Json j;
    j["k"] = t.k;
    j["r"] = t.r;
    j["epsilon"] = t.epsilon.str();
    j["theta"] = toJson(t.theta);
    j["phi"] = toJson(t.phi);
    j["zeta"] = toJson(t.zeta);
    j["determinant"] = t.determinant.str();
    j["allPositive"] = t.allPositive;
    return j;
}

inline Json toJson(const CertificateReport& rep, bool includeEntries = false) {
    Json j;
    j["k"] = rep.k;
    j["n"] = rep.n;
    j["graphCount"] = rep.graphCount;
    j["minSlack"] = rep.minSlack.str();
    Json tight = Json::array();
    for (const auto& c : rep.tightGraphs) tight.push_back(c.hex());
    j["tightGraphs"] = tight;
    j["negativeSquareGraphs"] = rep.negativeSquareGraphs;
    j["terms"] = rep.termLabels;
    j["verdict"] = rep.pass ? "pass" : "fail";
    if (includeEntries) {
        Json entries = Json::array();
        for (const auto& e : rep.entries) {
            Json row;
            row["code"] = e.code.hex();
            row["emptyFourDensity"] = e.emptyFourDensity.str();
            row["squares"] = toJson(e.squares);
            row["slack"] = e.slack.str();
            entries.push_back(row);
        }
        j["entries"] = entries;
    }
    return j;
}

}  // namespace turankit
