#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotsig/laurent.hpp"
#include "knotsig/linalg.hpp"

namespace knotsig {

// Pretzel link parameters: signed twist counts, |entry| >= 2. The orientation
// enum applies to 3-strand links only and follows the four coherent ways of
// orienting the strand pairs (caller-supplied; see README for conventions).
enum class PretzelOrientation { A, B, C, D, None };

struct PretzelParams {
    std::vector<long> strands;
    PretzelOrientation orientation = PretzelOrientation::None;
};

enum class Verdict3 { Yes, No, Unknown };

struct SqpRuling {
    Verdict3 verdict = Verdict3::Unknown;
    std::string rule;  // which classifier clause fired
};

// Strong quasipositivity of a pretzel knot. UNKNOWN in the conjectural
// all-odd |d| <= n-4 region. Throws "NotAKnot" when the parameters give a link.
SqpRuling pretzelKnotIsSQP(const PretzelParams& p);

// Strong quasipositivity of an oriented 3-strand pretzel link (2 or 3
// components, p even after the caller's normalization).
bool pretzelLinkIsSQP3(long p, long q, long r, PretzelOrientation orientation);

// Signature of P(p_1, ..., p_{n-1}, -p_n), all entries odd and >= 3:
// (n-2) + sign(1/p_n - sum 1/p_i).
int pretzelAllOddSignature(const PretzelParams& p);

struct SymmetrizedForm {
    Matrix<Int> matrix;  // [[p+r, r], [r, q+r]]
    Int det;             // pq + qr + rp
    Inertia inertia;
};

SymmetrizedForm pretzel3SymmetrizedForm(long p, long q, long r);

// Whether the double branched cover of P(pos_1,...,pos_n, -neg_1,...,-neg_r)
// is an L-space; pos ascending, n >= r, n + r >= 3.
bool pretzelSigma2IsLspace(const std::vector<long>& pos, const std::vector<long>& neg);

struct Genus1Alexander {
    Int a;              // (1 + pq + qr + rp) / 4
    LaurentPoly delta;  // a t^2 + (1-2a) t + a
};

Genus1Alexander pretzelGenus1Alexander(long p, long q, long r);

// Largest n with n < 2*pi / arccos(1 - 1/2a), decided exactly. Throws
// "NoCircleRoots" for a <= 0.
int genus1NBound(const Int& a);

struct TwoBridgeGenus1 {
    Int p, q;            // the fraction p/q in lowest terms
    LaurentPoly delta;   // kl t^2 + (1-2kl) t + kl
    int sigmaAbs = 0;    // |sigma|: 2 iff l > 0
    bool isSQP = false;
    bool lspaceForAllN = false;     // l < 0
    std::optional<int> nBound;      // set when l > 0
};

TwoBridgeGenus1 genus1TwoBridge(long k, long l);

// All-even continued fraction [a_1, ..., a_{2g}] with
// p/q = a_1 + 1/(a_2 + 1/(...)); p odd, q even, 1 < q < p, coprime.
std::vector<long> evenContinuedFraction(long p, long q);

// Alexander polynomial of the 2-bridge knot K(p/q) via the alternating-sign
// partial sum formula; even q is replaced by the mirror's odd p - q.
LaurentPoly minkusAlexander(long p, long q);

// k - (2k-1)t + (2k-1)t^2 - ... - (2k-1)t^{2m-1} + k t^{2m}
LaurentPoly kkmAlexander(long k, long m);

struct RootLocation {
    bool hasRootIn23PiToPi = false;  // a circle root with angle in (2pi/3, pi)
    bool hasRootInPi2ToPi = false;   // a circle root with angle in (pi/2, pi)
};

RootLocation kkmRootLocationCheck(long k, long m);

// Chain of three two-strand tangles; infinity entries use the clasp-free tangle.
struct TangleChain {
    std::optional<long> k1, k2, k3;  // nullopt encodes infinity

    int finiteCount() const {
        return (k1 ? 1 : 0) + (k2 ? 1 : 0) + (k3 ? 1 : 0);
    }
};

Int chainLinkDet(const TangleChain& chain);

// det L = det L0 + det Linf for the two skein-triple patterns; false when the
// chains do not match either pattern or a sub-determinant vanishes.
bool additiveTripleCheck(const TangleChain& l, const TangleChain& l0, const TangleChain& linf);

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q >= 2.
LaurentPoly torusAlexander(long p, long q);

}  // namespace knotsig
