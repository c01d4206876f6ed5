#pragma once

#include <optional>
#include <vector>

#include "knotsig/laurent.hpp"
#include "knotsig/realroots.hpp"

namespace knotsig {

// Exact point on the unit circle, c^2 + s^2 = 1.
struct RationalCirclePoint {
    Rat c, s;
    bool isOne() const { return c == 1 && s == 0; }
};

// Point from the tangent half-angle parametrisation ((1-u^2)/(1+u^2), 2u/(1+u^2)).
RationalCirclePoint circlePointFromParameter(const Rat& u);

// Upper-half-circle point whose doubled cosine lies strictly inside (xlo, xhi).
RationalCirclePoint circlePointWithCosBetween(const Rat& xlo, const Rat& xhi);

// The algebraic number x* = 2cos(2*pi*j/n) with its minimal polynomial and an
// isolating interval. Normalised to gcd(j, n) = 1 and 0 < j/n <= 1/2.
class CosineBoundary {
public:
    CosineBoundary(int j, int n);

    int j() const { return j_; }
    int n() const { return n_; }
    const Poly& minimalPoly() const { return root_.p; }
    const IsolatedRoot& root() const { return root_; }
    // -1, 0, +1 comparison of x* against a rational value
    int compareTo(const Rat& v) const { return root_.compareTo(v); }

private:
    int j_, n_;
    IsolatedRoot root_;
};

// Conjugate pair of unit-circle roots at x = t + 1/t, x strictly inside (-2, 2).
struct CircleRootPair {
    IsolatedRoot x;
    int multiplicity = 1;
};

// Multiset of unit-circle roots of a Laurent polynomial, in the x = t + 1/t
// coordinate, plus the off-circle count.
struct CircleRootProfile {
    std::vector<CircleRootPair> pairs;  // x descending, i.e. angle ascending
    int rootAtOne = 0;
    int rootAtMinusOne = 0;
    int offCircleCount = 0;
    int degree = 0;  // degree of the normalized polynomial

    int pairMultiplicitySum() const;
    int totalCircleCount() const { return 2 * pairMultiplicitySum() + rootAtOne + rootAtMinusOne; }
};

// Certified isolation of all unit-circle roots of p (p != 0). Roots at t = 1
// and t = -1 are stripped first; the reciprocal part of what remains is
// Chebyshev-reduced and isolated by Sturm sequences.
CircleRootProfile isolateCircleRoots(const LaurentPoly& p);

struct ArcClassification {
    int inside = 0;
    int onBoundary = 0;
    int outside = 0;
};

// Classifies every circle root (with multiplicity, conjugate pairs counting
// twice) against the open arc of the circle bounded by zeta_n, conj(zeta_n)
// that contains +1. Roots at t = 1 count as inside.
ArcClassification countRootsInPlusArc(const CircleRootProfile& profile, int n);

// One rational circle point strictly inside each maximal open arc of the upper
// half circle cut by the profile's roots and the extra boundary angles.
// Ordered by increasing angle.
std::vector<RationalCirclePoint> samplePointsBetweenRoots(
    const CircleRootProfile& profile, const std::vector<CosineBoundary>& extra = {});

// Rational x strictly between consecutive cut values (the x-coordinate version
// of samplePointsBetweenRoots); returned in descending x order.
std::vector<Rat> sampleAbscissaeBetweenRoots(const CircleRootProfile& profile,
                                             const std::vector<CosineBoundary>& extra = {});

}  // namespace knotsig
