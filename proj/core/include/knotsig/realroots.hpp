#pragma once

#include <vector>

#include "knotsig/numeric.hpp"
#include "knotsig/poly.hpp"

namespace knotsig {

// Sturm chain of a polynomial, built with primitive pseudo-remainders so all
// entries stay in Z[x].
class SturmChain {
public:
    explicit SturmChain(const Poly& p);

    // number of sign variations of the chain at x
    int variations(const Rat& x) const;
    // distinct real roots in (a, b], a < b
    int countRoots(const Rat& a, const Rat& b) const;
    // distinct real roots in the open interval (a, b)
    int countRootsOpen(const Rat& a, const Rat& b) const;

    const Poly& poly() const { return chain_.front(); }

private:
    std::vector<Poly> chain_;
};

// One isolated real root of a square-free polynomial. The interval never has
// a root of `p` at its endpoints unless it is a point interval (exact root).
struct IsolatedRoot {
    Poly p;           // square-free defining polynomial
    RatInterval iv;

    bool isExact() const { return iv.isPoint(); }
    // halve the interval width (no-op on exact roots)
    void refine();
    void refineBelow(const Rat& width);
    // exact comparison with a rational value
    int compareTo(const Rat& v) const;
};

// Isolating intervals for all distinct real roots of square-free p inside the
// open interval (lo, hi), ordered by increasing root value.
std::vector<IsolatedRoot> isolateRoots(const Poly& p, const Rat& lo, const Rat& hi);

// Exact order comparison of two isolated roots (-1, 0, +1). Roots of the same
// polynomial in disjoint intervals compare fast; equality is decided via the
// gcd of the defining polynomials.
int compareRoots(const IsolatedRoot& a, const IsolatedRoot& b);

// Upper bound B such that all real roots of p lie in [-B, B] (Cauchy bound).
Rat rootBound(const Poly& p);

}  // namespace knotsig
