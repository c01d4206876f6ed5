#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotsig/circle.hpp"
#include "knotsig/laurent.hpp"
#include "knotsig/linalg.hpp"

namespace knotsig {

// Square integer Seifert matrix with link metadata: m link components and mu
// surface components.
struct SeifertMatrix {
    Matrix<Int> entries;
    int components = 1;         // m
    int surfaceComponents = 1;  // mu
    std::string name;

    int size() const { return static_cast<int>(entries.size()); }
};

// Normalized det(S - t S^T); `zero` flags a vanishing determinant (mu > 1 or a
// degenerate surface).
struct AlexanderResult {
    LaurentPoly delta;  // normalized, or the zero polynomial
    bool zero = false;
    PalindromeType type = PalindromeType::None;
};

AlexanderResult alexander(const SeifertMatrix& s);

Matrix<Int> symmetrize(const SeifertMatrix& s);  // S + S^T

// Exact inertia of (1-zeta)S + (1-conj zeta)S^T at the rational circle point
// zeta = c + is, via the real symmetric doubling [[A, -B], [B, A]].
Inertia inertiaAtRationalPoint(const SeifertMatrix& s, const RationalCirclePoint& p);

// Corank of S - zeta^{-1} S^T over Q[t]/Phi_{n'}, n' = n/gcd(j, n).
int nullityAtRootOfUnity(const SeifertMatrix& s, int n, int j);

struct SigEta {
    int sigma = 0;
    int eta = 0;
    bool operator==(const SigEta& o) const { return sigma == o.sigma && eta == o.eta; }
};

// (sigma, eta) at zeta_n^j, exact also when zeta_n^j is a root of the
// Alexander polynomial (Hermitian congruence over the cyclotomic field).
SigEta signatureAtRootOfUnity(const SeifertMatrix& s, int n, int j);

struct ArcValue {
    RationalCirclePoint sample;  // one exact witness point inside the arc
    int sigma = 0;
    int eta = 0;
};

struct JumpValue {
    int multiplicity = 1;
    // set when the jump angle is 2*pi*j/n with n small enough to evaluate
    std::optional<std::pair<int, int>> rootOfUnity;  // (j, n), gcd(j,n)=1
    std::optional<SigEta> atJump;
};

// Piecewise-constant description of sigma and eta over the upper half circle.
struct SignatureProfile {
    LaurentPoly delta;       // normalized
    bool degenerate = false; // det(S - tS^T) == 0
    CircleRootProfile roots;
    std::vector<ArcValue> arcs;   // ascending angle; size == roots.pairs.size() + 1
    std::vector<JumpValue> jumps; // parallel to roots.pairs
    std::optional<SigEta> atMinusOne;  // set when t = -1 is a root of delta
    int formSize = 0;

    // arc value at angle 2*pi*j/n; throws "JumpPoint" if the angle is a root
    // of delta. Angle 0 reports (0, formSize), the degenerate form at t = 1.
    SigEta evaluateAt(int n, int j) const;
};

// jumpIndexBound: evaluate (sigma, eta) exactly at jump angles that are roots
// of unity of index <= bound (0 disables jump evaluation).
SignatureProfile signatureProfile(const SeifertMatrix& s, int jumpIndexBound = 0);

// sigma at zeta = -1, the classical signature.
int murasugiSignature(const SeifertMatrix& s);

struct DefiniteReport {
    bool definite = false;
    int maxPossible = 0;  // 2g(L) + (m-1) = N for a genus-realizing surface
    int sigmaAbs = 0;
};

// |sigma(L)| == 2g(L) + (m-1), with g read off from the caller-asserted
// genus-realizing matrix. Throws "InconsistentMetadata" when N - m + 1 is odd
// or negative.
DefiniteReport isDefinite(const SeifertMatrix& s);

// P S P^T for unimodular P; throws on |det P| != 1.
SeifertMatrix congruenceTransform(const SeifertMatrix& s, const Matrix<Int>& p);

}  // namespace knotsig
