#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/io.hpp"

namespace knotsig {

// One row of the batch input. Presentation kinds: "matrix" (Seifert matrix
// JSON), "braid" ("strands|word"), "family" (family string).
struct CorpusEntry {
    std::string name;
    std::string presentationKind;
    std::string presentation;
    std::optional<int> m, g, g4, sigma;
    std::optional<bool> sqp, qp;
    std::vector<int> coverLspaceN;  // cover orders asserted to be L-spaces
};

struct ObstructionReport {
    std::string name;
    bool ok = true;
    std::string error;  // set when the entry failed to evaluate

    std::optional<bool> definite;
    std::optional<bool> degEqualsMaxSignature;
    std::optional<int> sigmaComputed;
    N3Result n3;
    std::optional<int> n4;
    std::map<int, bool> monicClass;             // n in {2..5} -> pass (monic delta only)
    std::map<int, std::string> ruledOutCovers;  // specific cover orders with reasons
    std::optional<int> ruledOutAbove;           // every n > this is ruled out
    std::string ruledOutAboveReason;
    std::optional<SqpStatus> sqpStatus;
    std::vector<std::string> contradictedAssertions;
};

// CSV columns: name, presentation_kind, presentation, m, g, g4, sigma, sqp,
// qp, cover_lspace_n (semicolon-separated). Unknown cells empty. Fields may be
// double-quoted; quotes escape as "".
std::vector<CorpusEntry> parseCorpusCsv(std::istream& in);

ObstructionReport evaluateEntry(const CorpusEntry& entry);

// Deterministic output order equal to input order regardless of thread count;
// per-entry errors are recorded and the run continues.
std::vector<ObstructionReport> corpusRun(const std::vector<CorpusEntry>& entries, int threads = 1);

Json toJson(const ObstructionReport& r);

}  // namespace knotsig
