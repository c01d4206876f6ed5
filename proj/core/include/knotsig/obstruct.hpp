#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "knotsig/seifert.hpp"

namespace knotsig {

// Largest r >= 2 with all roots of delta strictly inside the plus arc of
// zeta_r. Unbounded when delta is a constant times a power of (t-1);
// undefined when a root lies off the circle or at t = -1.
struct N3Result {
    enum class Kind { Value, Unbounded, Undefined } kind = Kind::Undefined;
    int value = 0;  // meaningful only for Kind::Value

    bool operator==(const N3Result& o) const { return kind == o.kind && value == o.value; }
    static N3Result of(int v) { return {Kind::Value, v}; }
    static N3Result unbounded() { return {Kind::Unbounded, 0}; }
    static N3Result undefined() { return {Kind::Undefined, 0}; }
};

N3Result computeN3(const LaurentPoly& delta);

// Largest n >= 2 such that the multiplicity sum of circle roots inside the
// plus arc of zeta_n (t = 1 roots included) reaches 2 g4 + (m-1). nullopt when
// no n qualifies. Throws "Hypothesis" when (t-1)^{2 g4 + (m-1)} divides delta.
std::optional<int> computeN4(const LaurentPoly& delta, int g4, int m);

struct MonicClassification {
    bool pass = false;
    std::map<int, int> factors;  // cyclotomic exponents when fully factored
    std::string reason;
};

// Admissibility of delta for a strongly quasipositive link with an L-space
// n-fold cover, n in {2,3,4,5}. With `knot` the factor sets exclude the
// cyclotomics vanishing at 1 and at prime-power roots of unity of index 4.
MonicClassification monicClassification(const LaurentPoly& delta, int n, bool knot = false);

// Cover orders n in {2,3,4,5} not excluded for an L-space knot with this
// Alexander polynomial. With enforceCoefficientCondition the +-1 coefficient
// requirement is checked up front (empty result when violated).
std::set<int> lspaceKnotScreen(const LaurentPoly& delta, bool enforceCoefficientCondition = false);

struct ObstructionVerdict {
    bool rulesOut = false;
    std::string reasonCode;  // machine-readable; empty when consistent
};

// Checks a caller-asserted strongly quasipositive link with genus-realizing
// Seifert matrix against the constraints an L-space n-fold cover imposes.
ObstructionVerdict sqpLspaceObstruction(const SeifertMatrix& s, int n);

enum class SqpStatus { NoObstruction, NotSQP };

// NotSQP when some cover is an L-space but |sigma| != 2g + (m-1).
SqpStatus sqpStatusObstruction(int sigma, int g, int m, bool someCoverIsLSpace);

}  // namespace knotsig
