// Command-line front end. Exit codes: 0 = computed, 1 = an obstruction fired
// (obstruction subcommands only), 2 = input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "knotsig/braid.hpp"
#include "knotsig/corpus.hpp"
#include "knotsig/covers.hpp"
#include "knotsig/families.hpp"
#include "knotsig/obstruct.hpp"

using namespace knotsig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitObstruction = 1;
constexpr int kExitInput = 2;

std::string readAll(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// polynomial from --delta, --family, or stdin (JSON array or human string)
LaurentPoly inputDelta(const std::string& deltaOpt, const std::string& familyOpt) {
    if (!familyOpt.empty()) return familyAlexander(parseFamily(familyOpt));
    std::string text = deltaOpt.empty() ? readAll(std::cin) : deltaOpt;
    return laurentFromText(text);
}

// Seifert matrix from --matrix (inline JSON or @file), --braid, or stdin
SeifertMatrix inputMatrix(const std::string& matrixOpt, const std::string& braidOpt, int strands) {
    if (!braidOpt.empty()) return braidSeifertMatrix(parseBraid(braidOpt, strands));
    std::string text = matrixOpt;
    if (!text.empty() && text[0] == '@') {
        std::ifstream f(text.substr(1));
        if (!f.good()) throw std::invalid_argument("cannot open " + text.substr(1));
        text = readAll(f);
    }
    if (text.empty()) text = readAll(std::cin);
    return seifertFromText(text);
}

void emit(const Json& j, bool jsonMode, const std::string& plain) {
    if (jsonMode) std::cout << j.dump(2) << "\n";
    else std::cout << plain << "\n";
}

std::string n3Plain(const N3Result& r) {
    switch (r.kind) {
        case N3Result::Kind::Value: return std::to_string(r.value);
        case N3Result::Kind::Unbounded: return "unbounded";
        default: return "undefined";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact link invariants and branched-cover obstructions"};
    app.require_subcommand(1);
    bool jsonMode = false;
    app.add_flag("--json", jsonMode, "JSON output");

    std::string matrixOpt, braidOpt, deltaOpt, familyOpt;
    int strands = 2;

    auto addMatrixInputs = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", matrixOpt, "Seifert matrix JSON (inline or @file; default stdin)");
        cmd->add_option("--braid", braidOpt, "braid word; the closure's braid surface is used");
        cmd->add_option("--strands", strands, "strand count for --braid");
    };
    auto addDeltaInputs = [&](CLI::App* cmd) {
        cmd->add_option("--delta", deltaOpt, "polynomial, e.g. \"2t^2-3t+2\" (default stdin)");
        cmd->add_option("--family", familyOpt,
                        "family string: pretzel:3,5,-7 twobridge:7/2 kl:2,1 kkm:2,2 torus:2,5");
    };

    auto* cmdAlexander = app.add_subcommand("alexander", "Alexander polynomial of a Seifert matrix");
    addMatrixInputs(cmdAlexander);

    auto* cmdProfile = app.add_subcommand("signature-profile", "signature/nullity across the circle");
    addMatrixInputs(cmdProfile);
    int jumpBound = 30;
    cmdProfile->add_option("--jump-bound", jumpBound, "evaluate jumps at roots of unity up to this index");

    auto* cmdCover = app.add_subcommand("branched-cover", "branched cyclic cover homology");
    addMatrixInputs(cmdCover);
    addDeltaInputs(cmdCover);
    int coverN = 2;
    cmdCover->add_option("--n", coverN, "cover order")->required();

    auto* cmdN3 = app.add_subcommand("n3", "largest cover order with all roots inside the plus arc");
    addDeltaInputs(cmdN3);

    auto* cmdN4 = app.add_subcommand("n4", "largest cover order with enough roots inside the plus arc");
    addDeltaInputs(cmdN4);
    int g4 = 0, mComponents = 1;
    cmdN4->add_option("--g4", g4, "smooth four-genus")->required();
    cmdN4->add_option("--m", mComponents, "number of link components");

    auto* cmdClassify = app.add_subcommand("classify", "cyclotomic admissibility at a cover order");
    addDeltaInputs(cmdClassify);
    int classifyN = 2;
    bool knotFlag = false;
    cmdClassify->add_option("--n", classifyN, "cover order in 2..5")->required();
    cmdClassify->add_flag("--knot", knotFlag, "apply the knot-only factor exclusions");

    auto* cmdSqp = app.add_subcommand("sqp-obstruct",
                                      "L-space cover constraints for an asserted SQP link");
    addMatrixInputs(cmdSqp);
    int sqpN = 2;
    cmdSqp->add_option("--n", sqpN, "cover order")->required();

    auto* cmdPretzel = app.add_subcommand("pretzel", "pretzel classifiers");
    std::vector<long> pretzelArgs;
    cmdPretzel->add_option("params", pretzelArgs, "signed twist counts")->required()->expected(-3);
    bool wantSqp = false, wantSigma = false, wantLspace2 = false, wantGenus1 = false;
    std::string orientation = "none";
    cmdPretzel->add_flag("--sqp", wantSqp, "strong quasipositivity (knots)");
    cmdPretzel->add_flag("--sigma", wantSigma, "signature for the (+,..,+,-) all-odd pattern");
    cmdPretzel->add_flag("--lspace2", wantLspace2, "is the double branched cover an L-space");
    cmdPretzel->add_flag("--genus1", wantGenus1, "genus-1 Alexander data (all-odd 3-strand)");
    cmdPretzel->add_option("--orientation", orientation, "a|b|c|d for 3-strand links");

    auto* cmdTwoBridge = app.add_subcommand("twobridge", "two-bridge knot invariants");
    std::string fraction;
    cmdTwoBridge->add_option("fraction", fraction, "p/q, p odd")->required();

    auto* cmdKl = app.add_subcommand("kl", "genus-1 two-bridge family [2k, -2l]");
    std::vector<long> klArgs;
    cmdKl->add_option("params", klArgs, "k l")->required()->expected(2);

    auto* cmdKkm = app.add_subcommand("kkm", "the twist family of two-bridge knots");
    std::vector<long> kkmArgs;
    cmdKkm->add_option("params", kkmArgs, "k m")->required()->expected(2);
    bool kkmRoots = false;
    cmdKkm->add_flag("--roots", kkmRoots, "report circle-root locations");

    auto* cmdChain = app.add_subcommand("chain-det", "tangle chain determinant");
    std::vector<std::string> chainArgs;
    cmdChain->add_option("params", chainArgs, "k1 k2 k3 (inf allowed)")->required()->expected(3);

    auto* cmdTorus = app.add_subcommand("torus", "torus knot Alexander polynomial");
    std::vector<long> torusArgs;
    cmdTorus->add_option("params", torusArgs, "p q")->required()->expected(2);

    auto* cmdCorpus = app.add_subcommand("corpus", "batch runner");
    auto* cmdCorpusRun = cmdCorpus->add_subcommand("run", "evaluate a CSV corpus");
    std::string corpusFile;
    int threads = 1;
    cmdCorpusRun->add_option("file", corpusFile, "CSV input")->required();
    cmdCorpusRun->add_option("--threads", threads, "worker threads");

    // global flags remain usable after a subcommand name
    for (auto* sc : app.get_subcommands({})) {
        sc->fallthrough();
        for (auto* nested : sc->get_subcommands({})) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmdAlexander) {
            auto alex = alexander(inputMatrix(matrixOpt, braidOpt, strands));
            if (alex.zero) {
                emit(Json{{"delta", nullptr}, {"zero", true}}, jsonMode, "0 (degenerate)");
                return kExitOk;
            }
            emit(toJson(alex.delta), jsonMode, alex.delta.str());
        } else if (*cmdProfile) {
            auto prof = signatureProfile(inputMatrix(matrixOpt, braidOpt, strands), jumpBound);
            std::ostringstream plain;
            plain << "delta = " << (prof.degenerate ? "0" : prof.delta.str());
            for (size_t i = 0; i < prof.arcs.size(); ++i) {
                plain << "\narc " << i << ": sigma = " << prof.arcs[i].sigma
                      << ", eta = " << prof.arcs[i].eta;
                if (i < prof.jumps.size()) {
                    plain << "\njump " << i << ": multiplicity " << prof.jumps[i].multiplicity;
                    if (prof.jumps[i].atJump)
                        plain << ", at jump sigma = " << prof.jumps[i].atJump->sigma
                              << ", eta = " << prof.jumps[i].atJump->eta;
                }
            }
            emit(toJson(prof), jsonMode, plain.str());
        } else if (*cmdCover) {
            BranchedCoverReport rep;
            if (!matrixOpt.empty() || !braidOpt.empty())
                rep = branchedCoverHomology(inputMatrix(matrixOpt, braidOpt, strands), coverN);
            else rep = branchedCoverHomology(inputDelta(deltaOpt, familyOpt), coverN);
            std::string plain = rep.h1Order ? "|H1| = " + rep.h1Order->get_str()
                                            : std::string("|H1| infinite");
            if (rep.etaKnown && !rep.h1Order) plain += ", betti1 = " + std::to_string(rep.betti1);
            emit(toJson(rep), jsonMode, plain);
        } else if (*cmdN3) {
            auto r = computeN3(inputDelta(deltaOpt, familyOpt));
            emit(toJson(r), jsonMode, n3Plain(r));
        } else if (*cmdN4) {
            auto r = computeN4(inputDelta(deltaOpt, familyOpt), g4, mComponents);
            emit(r ? Json(*r) : Json("undefined"), jsonMode,
                 r ? std::to_string(*r) : "undefined");
        } else if (*cmdClassify) {
            auto r = monicClassification(inputDelta(deltaOpt, familyOpt), classifyN, knotFlag);
            Json j{{"pass", r.pass}};
            if (!r.reason.empty()) j["reason"] = r.reason;
            if (!r.factors.empty()) {
                Json factors;
                for (const auto& [k, e] : r.factors) factors[std::to_string(k)] = e;
                j["factors"] = factors;
            }
            emit(j, jsonMode, r.pass ? "pass" : "fail (" + r.reason + ")");
            return r.pass ? kExitOk : kExitObstruction;
        } else if (*cmdSqp) {
            auto v = sqpLspaceObstruction(inputMatrix(matrixOpt, braidOpt, strands), sqpN);
            emit(Json{{"rules_out", v.rulesOut}, {"reason", v.reasonCode}}, jsonMode,
                 v.rulesOut ? "rules out an L-space cover (" + v.reasonCode + ")"
                            : "consistent with an L-space cover");
            return v.rulesOut ? kExitObstruction : kExitOk;
        } else if (*cmdPretzel) {
            PretzelParams params{pretzelArgs, PretzelOrientation::None};
            if (orientation == "a") params.orientation = PretzelOrientation::A;
            else if (orientation == "b") params.orientation = PretzelOrientation::B;
            else if (orientation == "c") params.orientation = PretzelOrientation::C;
            else if (orientation == "d") params.orientation = PretzelOrientation::D;
            if (wantSigma) {
                int sig = pretzelAllOddSignature(params);
                emit(Json{{"sigma", sig}}, jsonMode, "sigma = " + std::to_string(sig));
            } else if (wantLspace2) {
                std::vector<long> pos, neg;
                for (long v : pretzelArgs) (v > 0 ? pos : neg).push_back(std::abs(v));
                std::sort(pos.begin(), pos.end());
                std::sort(neg.begin(), neg.end());
                if (pos.size() < neg.size()) std::swap(pos, neg);  // mirror image
                bool ls = pretzelSigma2IsLspace(pos, neg);
                emit(Json{{"double_cover_lspace", ls}}, jsonMode,
                     ls ? "double branched cover is an L-space"
                        : "double branched cover is not an L-space");
            } else if (wantGenus1) {
                if (pretzelArgs.size() != 3) throw std::invalid_argument("genus-1 needs 3 strands");
                auto g = pretzelGenus1Alexander(pretzelArgs[0], pretzelArgs[1], pretzelArgs[2]);
                Json j{{"a", g.a.get_si()}, {"delta", toJson(g.delta)}};
                std::string plain = "a = " + g.a.get_str() + ", delta = " + g.delta.str();
                if (g.a > 0) {
                    int bound = genus1NBound(g.a);
                    j["n_bound"] = bound;
                    plain += ", covers ruled out above n = " + std::to_string(bound);
                } else {
                    plain += ", no circle roots";
                }
                emit(j, jsonMode, plain);
            } else if (wantSqp) {
                if (params.orientation == PretzelOrientation::None) {
                    auto r = pretzelKnotIsSQP(params);
                    const char* verdict = r.verdict == Verdict3::Yes    ? "SQP"
                                          : r.verdict == Verdict3::No ? "not SQP"
                                                                      : "unknown";
                    emit(Json{{"verdict", verdict}, {"rule", r.rule}}, jsonMode,
                         std::string(verdict) + " (" + r.rule + ")");
                    return r.verdict == Verdict3::No ? kExitObstruction : kExitOk;
                }
                if (pretzelArgs.size() != 3)
                    throw std::invalid_argument("oriented 3-strand classification needs 3 entries");
                bool sqp = pretzelLinkIsSQP3(pretzelArgs[0], pretzelArgs[1], pretzelArgs[2],
                                             params.orientation);
                emit(Json{{"verdict", sqp ? "SQP" : "not SQP"}}, jsonMode,
                     sqp ? "SQP" : "not SQP");
                return sqp ? kExitOk : kExitObstruction;
            } else {
                throw std::invalid_argument("pick one of --sqp --sigma --lspace2 --genus1");
            }
        } else if (*cmdTwoBridge) {
            size_t slash = fraction.find('/');
            if (slash == std::string::npos) throw std::invalid_argument("fraction needs p/q");
            long p = std::stol(fraction.substr(0, slash));
            long q = std::stol(fraction.substr(slash + 1));
            LaurentPoly delta = minkusAlexander(p, q);
            Json j{{"p", p}, {"q", q}, {"delta", toJson(delta)}};
            if (q % 2 == 0 && q > 1 && p > q) {
                auto cf = evenContinuedFraction(p, q);
                j["even_continued_fraction"] = cf;
                j["genus"] = cf.size() / 2;
            }
            emit(j, jsonMode, delta.str());
        } else if (*cmdKl) {
            auto r = genus1TwoBridge(klArgs[0], klArgs[1]);
            Json j{{"p", r.p.get_si()},
                   {"q", r.q.get_si()},
                   {"delta", toJson(r.delta)},
                   {"sigma_abs", r.sigmaAbs},
                   {"sqp", r.isSQP},
                   {"lspace_for_all_n", r.lspaceForAllN}};
            if (r.nBound) j["n_bound"] = *r.nBound;
            std::ostringstream plain;
            plain << "p/q = " << r.p.get_str() << "/" << r.q.get_str()
                  << ", delta = " << r.delta.str() << ", " << (r.isSQP ? "SQP" : "not SQP");
            if (r.nBound) plain << ", covers ruled out above n = " << *r.nBound;
            if (r.lspaceForAllN) plain << ", every cover is an L-space";
            emit(j, jsonMode, plain.str());
        } else if (*cmdKkm) {
            LaurentPoly delta = kkmAlexander(kkmArgs[0], kkmArgs[1]);
            Json j{{"delta", toJson(delta)}};
            std::ostringstream plain;
            plain << delta.str();
            if (kkmRoots) {
                auto loc = kkmRootLocationCheck(kkmArgs[0], kkmArgs[1]);
                j["root_in_2pi3_pi"] = loc.hasRootIn23PiToPi;
                j["root_in_pi2_pi"] = loc.hasRootInPi2ToPi;
                plain << "\nroot in (2pi/3, pi): " << (loc.hasRootIn23PiToPi ? "yes" : "no")
                      << "\nroot in (pi/2, pi): " << (loc.hasRootInPi2ToPi ? "yes" : "no");
            }
            emit(j, jsonMode, plain.str());
        } else if (*cmdChain) {
            TangleChain chain;
            auto parseSlot = [](const std::string& s) -> std::optional<long> {
                if (s == "inf") return std::nullopt;
                return std::stol(s);
            };
            chain.k1 = parseSlot(chainArgs[0]);
            chain.k2 = parseSlot(chainArgs[1]);
            chain.k3 = parseSlot(chainArgs[2]);
            Int det = chainLinkDet(chain);
            emit(Json{{"det", det.get_si()}}, jsonMode, det.get_str());
        } else if (*cmdTorus) {
            LaurentPoly delta = torusAlexander(torusArgs[0], torusArgs[1]);
            emit(toJson(delta), jsonMode, delta.str());
        } else if (*cmdCorpusRun) {
            std::ifstream in(corpusFile);
            if (!in.good()) throw std::invalid_argument("cannot open " + corpusFile);
            auto reports = corpusRun(parseCorpusCsv(in), threads);
            bool fired = false;
            Json arr = Json::array();
            for (const auto& r : reports) {
                arr.push_back(toJson(r));
                if (r.sqpStatus == SqpStatus::NotSQP || !r.contradictedAssertions.empty())
                    fired = true;
            }
            if (jsonMode) {
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& r : reports)
                    std::cout << r.name << ": "
                              << (r.ok ? (r.sqpStatus == SqpStatus::NotSQP ? "not SQP" : "ok")
                                       : "error: " + r.error)
                              << "\n";
            }
            return fired ? kExitObstruction : kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
