#include "knotsig/io.hpp"

#include <sstream>
#include <stdexcept>

namespace knotsig {

namespace {

Json intToJson(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Int intFromJson(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

}  // namespace

Json toJson(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.toMap()) arr.push_back(Json::array({e, intToJson(c)}));
    return arr;
}

LaurentPoly laurentFromJson(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of pairs");
    std::map<int, Int> coeffs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
        coeffs[pair[0].get<int>()] += intFromJson(pair[1]);
    }
    return LaurentPoly::fromMap(coeffs);
}

LaurentPoly laurentFromText(const std::string& text) {
    std::string trimmed = text;
    size_t a = trimmed.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) throw std::invalid_argument("empty polynomial");
    if (trimmed[a] == '[') return laurentFromJson(Json::parse(trimmed));
    return parseLaurent(trimmed);
}

Json toJson(const SeifertMatrix& s) {
    Json m = Json::array();
    for (const auto& row : s.entries) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(intToJson(v));
        m.push_back(std::move(r));
    }
    Json j;
    j["matrix"] = std::move(m);
    j["components"] = s.components;
    j["surface_components"] = s.surfaceComponents;
    if (!s.name.empty()) j["name"] = s.name;
    return j;
}

SeifertMatrix seifertFromJson(const Json& j) {
    if (!j.contains("matrix")) throw std::invalid_argument("missing \"matrix\"");
    SeifertMatrix s;
    for (const auto& row : j["matrix"]) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(intFromJson(v));
        s.entries.push_back(std::move(r));
    }
    for (const auto& row : s.entries)
        if (row.size() != s.entries.size())
            throw std::invalid_argument("Seifert matrix must be square");
    s.components = j.value("components", 1);
    s.surfaceComponents = j.value("surface_components", 1);
    s.name = j.value("name", std::string{});
    if (s.components < 1 || s.surfaceComponents < 1)
        throw std::invalid_argument("components and surface_components must be >= 1");
    return s;
}

SeifertMatrix seifertFromText(const std::string& text) {
    return seifertFromJson(Json::parse(text));
}

Json toJson(const SignatureProfile& p) {
    Json j;
    j["degenerate"] = p.degenerate;
    j["form_size"] = p.formSize;
    j["delta"] = toJson(p.delta);
    Json arcs = Json::array();
    for (const auto& a : p.arcs) {
        Json e;
        e["sample"] = {{"c", toString(a.sample.c)}, {"s", toString(a.sample.s)}};
        e["sigma"] = a.sigma;
        e["eta"] = a.eta;
        arcs.push_back(std::move(e));
    }
    j["arcs"] = std::move(arcs);
    Json jumps = Json::array();
    for (size_t i = 0; i < p.jumps.size(); ++i) {
        Json e;
        e["x_interval"] = {toString(p.roots.pairs[i].x.iv.lo), toString(p.roots.pairs[i].x.iv.hi)};
        e["multiplicity"] = p.jumps[i].multiplicity;
        if (p.jumps[i].rootOfUnity) {
            e["angle"] = {{"j", p.jumps[i].rootOfUnity->first},
                          {"n", p.jumps[i].rootOfUnity->second}};
        }
        if (p.jumps[i].atJump) {
            e["sigma_at_jump"] = p.jumps[i].atJump->sigma;
            e["eta_at_jump"] = p.jumps[i].atJump->eta;
        }
        jumps.push_back(std::move(e));
    }
    j["jumps"] = std::move(jumps);
    j["root_at_one"] = p.roots.rootAtOne;
    j["root_at_minus_one"] = p.roots.rootAtMinusOne;
    j["off_circle_roots"] = p.roots.offCircleCount;
    if (p.atMinusOne) {
        j["at_minus_one"] = {{"sigma", p.atMinusOne->sigma}, {"eta", p.atMinusOne->eta}};
    }
    return j;
}

Json toJson(const BranchedCoverReport& r) {
    Json j;
    j["n"] = r.n;
    if (r.h1Order) j["h1_order"] = intToJson(*r.h1Order);
    else j["h1_order"] = "infinite";
    j["is_qhs"] = r.isQHS;
    if (r.etaKnown) j["betti1"] = r.betti1;
    Json per = Json::array();
    for (const auto& pj : r.perJ) {
        Json e;
        e["j"] = pj.j;
        e["delta_nonzero"] = pj.deltaNonzero;
        if (pj.eta) e["eta"] = *pj.eta;
        else e["eta"] = "unknown";
        per.push_back(std::move(e));
    }
    j["per_j"] = std::move(per);
    Json norms;
    for (const auto& [d, v] : r.normPerDivisor) norms[std::to_string(d)] = intToJson(v);
    j["norm_per_divisor"] = std::move(norms);
    return j;
}

Json toJson(const N3Result& r) {
    switch (r.kind) {
        case N3Result::Kind::Value: return Json(r.value);
        case N3Result::Kind::Unbounded: return Json("unbounded");
        default: return Json("undefined");
    }
}

FamilySpec parseFamily(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family string needs the form kind:args");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    FamilySpec f;
    if (kind == "pretzel") f.kind = FamilySpec::Kind::Pretzel;
    else if (kind == "twobridge") f.kind = FamilySpec::Kind::TwoBridge;
    else if (kind == "kl") f.kind = FamilySpec::Kind::TwoBridgeKl;
    else if (kind == "kkm") f.kind = FamilySpec::Kind::Kkm;
    else if (kind == "chain") f.kind = FamilySpec::Kind::Chain;
    else if (kind == "torus") f.kind = FamilySpec::Kind::Torus;
    else throw std::invalid_argument("unknown family kind: " + kind);
    std::string token;
    std::istringstream is(rest);
    while (std::getline(is, token, kind == "twobridge" ? '/' : ',')) {
        size_t a = token.find_first_not_of(" \t");
        size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty family argument");
        token = token.substr(a, b - a + 1);
        if (token == "inf") {
            f.args.push_back(0);
            f.infinite.push_back(true);
        } else {
            f.args.push_back(std::stol(token));
            f.infinite.push_back(false);
        }
    }
    return f;
}

LaurentPoly familyAlexander(const FamilySpec& f) {
    switch (f.kind) {
        case FamilySpec::Kind::Pretzel: {
            if (f.args.size() != 3)
                throw std::invalid_argument("pretzel Alexander data needs 3 odd strands");
            auto g = pretzelGenus1Alexander(f.args[0], f.args[1], f.args[2]);
            return normalize(g.delta).poly;
        }
        case FamilySpec::Kind::TwoBridge: {
            if (f.args.size() != 2) throw std::invalid_argument("twobridge needs p/q");
            return minkusAlexander(f.args[0], f.args[1]);
        }
        case FamilySpec::Kind::TwoBridgeKl: {
            if (f.args.size() != 2) throw std::invalid_argument("kl needs k,l");
            return normalize(genus1TwoBridge(f.args[0], f.args[1]).delta).poly;
        }
        case FamilySpec::Kind::Kkm: {
            if (f.args.size() != 2) throw std::invalid_argument("kkm needs k,m");
            return normalize(kkmAlexander(f.args[0], f.args[1])).poly;
        }
        case FamilySpec::Kind::Torus: {
            if (f.args.size() != 2) throw std::invalid_argument("torus needs p,q");
            return torusAlexander(f.args[0], f.args[1]);
        }
        case FamilySpec::Kind::Chain:
            throw std::invalid_argument("chains provide determinants, not Alexander polynomials");
    }
    throw std::logic_error("unreachable");
}

}  // namespace knotsig
