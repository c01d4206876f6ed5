#include "knotsig/corpus.hpp"

#include <atomic>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "knotsig/braid.hpp"

namespace knotsig {

namespace {

std::vector<std::string> splitCsvLine(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::optional<int> optInt(const std::string& cell) {
    std::string t = trimmed(cell);
    if (t.empty()) return std::nullopt;
    return std::stoi(t);
}

std::optional<bool> optBool(const std::string& cell) {
    std::string t = trimmed(cell);
    if (t.empty()) return std::nullopt;
    if (t == "1" || t == "true" || t == "yes") return true;
    if (t == "0" || t == "false" || t == "no") return false;
    throw std::invalid_argument("bad boolean cell: " + t);
}

}  // namespace

std::vector<CorpusEntry> parseCorpusCsv(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        auto cells = splitCsvLine(line);
        if (first && trimmed(cells[0]) == "name") {
            first = false;
            continue;  // header row
        }
        first = false;
        cells.resize(10);
        CorpusEntry e;
        e.name = trimmed(cells[0]);
        e.presentationKind = trimmed(cells[1]);
        e.presentation = trimmed(cells[2]);
        e.m = optInt(cells[3]);
        e.g = optInt(cells[4]);
        e.g4 = optInt(cells[5]);
        e.sigma = optInt(cells[6]);
        e.sqp = optBool(cells[7]);
        e.qp = optBool(cells[8]);
        std::istringstream covers(trimmed(cells[9]));
        std::string tok;
        while (std::getline(covers, tok, ';'))
            if (!trimmed(tok).empty()) e.coverLspaceN.push_back(std::stoi(trimmed(tok)));
        entries.push_back(std::move(e));
    }
    return entries;
}

ObstructionReport evaluateEntry(const CorpusEntry& entry) {
    ObstructionReport rep;
    rep.name = entry.name;
    try {
        std::optional<SeifertMatrix> matrix;
        LaurentPoly delta;
        if (entry.presentationKind == "matrix") {
            matrix = seifertFromText(entry.presentation);
        } else if (entry.presentationKind == "braid") {
            size_t bar = entry.presentation.find('|');
            if (bar == std::string::npos)
                throw std::invalid_argument("braid presentation needs \"strands|word\"");
            int strands = std::stoi(entry.presentation.substr(0, bar));
            matrix = braidSeifertMatrix(parseBraid(entry.presentation.substr(bar + 1), strands));
        } else if (entry.presentationKind == "family") {
            delta = familyAlexander(parseFamily(entry.presentation));
        } else {
            throw std::invalid_argument("unknown presentation kind: " + entry.presentationKind);
        }

        int m = entry.m.value_or(matrix ? matrix->components : 1);
        if (matrix) {
            matrix->components = m;
            AlexanderResult alex = alexander(*matrix);
            if (!alex.zero) delta = alex.delta;
            int sigma = murasugiSignature(*matrix);
            rep.sigmaComputed = sigma;
            if (entry.sigma && *entry.sigma != sigma)
                rep.contradictedAssertions.push_back("sigma");
            int n = matrix->size();
            rep.definite = std::abs(sigma) == n;
            if (!alex.zero) rep.degEqualsMaxSignature = alex.delta.span() == std::abs(sigma);
        }

        if (!delta.isZero()) {
            rep.n3 = computeN3(delta);
            if (rep.n3.kind == N3Result::Kind::Value) {
                rep.ruledOutAbove = rep.n3.value;
                rep.ruledOutAboveReason = "roots-leave-plus-arc";
            }
            if (entry.g4) {
                try {
                    rep.n4 = computeN4(delta, *entry.g4, m);
                    if (rep.n4 && (!rep.ruledOutAbove || *rep.n4 < *rep.ruledOutAbove)) {
                        rep.ruledOutAbove = *rep.n4;
                        rep.ruledOutAboveReason = "root-multiplicity-below-four-genus-threshold";
                    }
                } catch (const std::invalid_argument&) {
                    // hypothesis violated: (t-1)^{2g4+m-1} divides delta
                }
            }
            try {
                for (int n = 2; n <= 5; ++n)
                    rep.monicClass[n] = monicClassification(delta, n, m == 1).pass;
                if (entry.sqp == true) {
                    for (int n = 2; n <= 5; ++n)
                        if (!rep.monicClass[n])
                            rep.ruledOutCovers.emplace(n, "monic-classification-fails");
                }
            } catch (const std::invalid_argument&) {
                // non-monic: classification not applicable
            }
        }

        // the workflow obstruction: an asserted L-space cover plus an
        // indefinite signature rules out strong quasipositivity
        if (!entry.coverLspaceN.empty() && rep.sigmaComputed) {
            std::optional<int> g = entry.g;
            if (!g && matrix) {
                int twice = matrix->size() - (m - 1);
                if (twice >= 0 && twice % 2 == 0) g = twice / 2;
            }
            if (g) {
                rep.sqpStatus = sqpStatusObstruction(*rep.sigmaComputed, *g, m, true);
                if (rep.sqpStatus == SqpStatus::NotSQP && entry.sqp == true)
                    rep.contradictedAssertions.push_back("sqp");
            }
        }
        if (rep.ruledOutAbove) {
            for (int n : entry.coverLspaceN)
                if (n > *rep.ruledOutAbove)
                    rep.contradictedAssertions.push_back("cover_lspace_n:" + std::to_string(n));
        }
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.error = e.what();
    }
    return rep;
}

std::vector<ObstructionReport> corpusRun(const std::vector<CorpusEntry>& entries, int threads) {
    std::vector<ObstructionReport> out(entries.size());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, std::max<size_t>(entries.size(), 1));
    if (threads == 1) {
        for (size_t i = 0; i < entries.size(); ++i) out[i] = evaluateEntry(entries[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= entries.size()) return;
                out[i] = evaluateEntry(entries[i]);
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

Json toJson(const ObstructionReport& r) {
    Json j;
    j["schema"] = 1;
    j["name"] = r.name;
    j["ok"] = r.ok;
    if (!r.ok) {
        j["error"] = r.error;
        return j;
    }
    if (r.definite.has_value()) j["definite"] = *r.definite;
    if (r.degEqualsMaxSignature.has_value())
        j["deg_equals_max_signature"] = *r.degEqualsMaxSignature;
    if (r.sigmaComputed.has_value()) j["sigma"] = *r.sigmaComputed;
    j["n3"] = toJson(r.n3);
    if (r.n4) j["n4"] = *r.n4;
    if (!r.monicClass.empty()) {
        Json mc;
        for (const auto& [n, pass] : r.monicClass) mc[std::to_string(n)] = pass ? "pass" : "fail";
        j["monic_class"] = std::move(mc);
    }
    if (!r.ruledOutCovers.empty()) {
        Json ro = Json::array();
        for (const auto& [n, reason] : r.ruledOutCovers)
            ro.push_back({{"n", n}, {"reason", reason}});
        j["ruled_out_covers"] = std::move(ro);
    }
    if (r.ruledOutAbove) {
        j["ruled_out_above"] = *r.ruledOutAbove;
        j["ruled_out_above_reason"] = r.ruledOutAboveReason;
    }
    if (r.sqpStatus)
        j["sqp_status"] = *r.sqpStatus == SqpStatus::NotSQP ? "not_sqp" : "no_obstruction";
    if (!r.contradictedAssertions.empty()) j["contradicted"] = r.contradictedAssertions;
    return j;
}

}  // namespace knotsig
