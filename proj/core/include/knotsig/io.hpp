#pragma once

#include <string>

#include <json.hpp>

#include "knotsig/covers.hpp"
#include "knotsig/families.hpp"
#include "knotsig/laurent.hpp"
#include "knotsig/obstruct.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

using Json = nlohmann::ordered_json;

// Polynomials serialize as arrays of [exponent, coefficient] pairs;
// coefficients that do not fit in 64 bits become strings.
Json toJson(const LaurentPoly& p);
LaurentPoly laurentFromJson(const Json& j);
// accepts either the JSON array form or a human string like "2t^2-3t+2"
LaurentPoly laurentFromText(const std::string& text);

// {"matrix": [[...]], "components": m, "surface_components": mu, "name": "..."}
Json toJson(const SeifertMatrix& s);
SeifertMatrix seifertFromJson(const Json& j);
SeifertMatrix seifertFromText(const std::string& text);

Json toJson(const SignatureProfile& p);
Json toJson(const BranchedCoverReport& r);
Json toJson(const N3Result& r);

// family strings: "pretzel:3,5,-7", "twobridge:7/2", "kl:2,1", "kkm:2,2",
// "chain:1,1,inf", "torus:2,5"
struct FamilySpec {
    enum class Kind { Pretzel, TwoBridge, TwoBridgeKl, Kkm, Chain, Torus } kind;
    std::vector<long> args;            // numeric arguments in order
    std::vector<bool> infinite;        // per-arg infinity flags (chain only)
};

FamilySpec parseFamily(const std::string& text);

// Alexander polynomial of a family string (the invariant every family yields).
LaurentPoly familyAlexander(const FamilySpec& f);

}  // namespace knotsig
