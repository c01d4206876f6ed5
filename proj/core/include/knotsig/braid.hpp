#pragma once

#include <string>
#include <vector>

#include "knotsig/seifert.hpp"

namespace knotsig {

// One braid letter: a standard generator sigma_i^{+-1} or a positive band
// generator joining strands i < j.
struct BraidLetter {
    enum class Kind { Sigma, Band } kind = Kind::Sigma;
    int i = 1;
    int j = 2;      // band target strand (Kind::Band only)
    int sign = 1;   // Kind::Sigma only; bands are positive

    static BraidLetter sigma(int i, int sign) { return {Kind::Sigma, i, i + 1, sign}; }
    static BraidLetter band(int i, int j) { return {Kind::Band, i, j, 1}; }
};

struct BraidWord {
    int strands = 2;
    std::vector<BraidLetter> letters;
};

// Grammar: whitespace-separated tokens "s3", "s3^-1", "b(1,4)", or a compact
// signed list "[1,1,-2]" (sign = generator sign). Errors carry the position.
BraidWord parseBraid(const std::string& text, int strands);

// Band generators expanded to conjugates of standard generators.
std::vector<BraidLetter> expandToStandard(const BraidWord& w);

// Number of components of the braid closure (cycles of the underlying
// permutation).
int closureComponents(const BraidWord& w);

struct BennequinData {
    int euler = 0;       // chi of the band surface
    int components = 1;  // m of the closure
    int bigGenus = 0;    // G = (m - chi)/2
    int genus = 0;       // g = G - (m - 1), the connected-surface genus
};

// Surface data of the Bennequin surface of an all-positive band word.
BennequinData bennequinSurfaceData(const BraidWord& w);

// Seifert matrix of the closure's braid surface (Seifert's algorithm on the
// closure diagram after band expansion). Basis ordering is internal; Delta,
// sigma and eta are the contractual outputs.
SeifertMatrix braidSeifertMatrix(const BraidWord& w);

}  // namespace knotsig
