#include "knotsig/circle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace knotsig {

RationalCirclePoint circlePointFromParameter(const Rat& u) {
    Rat den = 1 + u * u;
    return {(1 - u * u) / den, 2 * u / den};
}

CosineBoundary::CosineBoundary(int j, int n) {
    if (n < 1 || j < 1 || j >= n) throw std::invalid_argument("bad cosine boundary j/n");
    int g = std::gcd(j, n);
    j /= g;
    n /= g;
    if (2 * j > n) j = n - j;
    j_ = j;
    n_ = n;
    if (n == 2) {
        root_ = {Poly({Int(2), Int(1)}), {Rat(-2), Rat(-2)}};
        return;
    }
    Poly m = chebyshevReduce(cyclotomic(n));
    auto roots = isolateRoots(m, Rat(-2), Rat(2));
    // roots of the minimal polynomial are 2cos(2*pi*k/n) for k coprime to n,
    // 1 <= k <= n/2; descending x order matches ascending k
    std::vector<int> ks;
    for (int k = 1; 2 * k <= n; ++k)
        if (std::gcd(k, n) == 1) ks.push_back(k);
    assert(roots.size() == ks.size());
    size_t pos = std::find(ks.begin(), ks.end(), j) - ks.begin();
    root_ = roots[roots.size() - 1 - pos];
}

int CircleRootProfile::pairMultiplicitySum() const {
    int s = 0;
    for (const auto& p : pairs) s += p.multiplicity;
    return s;
}

namespace {

Poly reversedPoly(const Poly& p) {
    std::vector<Int> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(std::move(c));
}

void refineInsideOpenTwoTwo(IsolatedRoot& r) {
    while (!(r.iv.lo > -2 && r.iv.hi < 2)) r.refine();
}

void makePairwiseDisjoint(std::vector<CircleRootPair>& pairs) {
    for (bool again = true; again;) {
        again = false;
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t k = i + 1; k < pairs.size(); ++k)
                if (!pairs[i].x.iv.disjointFrom(pairs[k].x.iv)) {
                    pairs[i].x.refine();
                    pairs[k].x.refine();
                    again = true;
                }
    }
}

}  // namespace

CircleRootProfile isolateCircleRoots(const LaurentPoly& p) {
    CircleRootProfile out;
    Normalized norm = normalize(p);
    out.degree = norm.poly.span();
    Poly work = norm.poly.polyPart();
    Poly tMinus1({Int(-1), Int(1)}), tPlus1({Int(1), Int(1)});
    while (work.degree() > 0 && work.eval(Int(1)) == 0) {
        work = divExact(work, tMinus1);
        ++out.rootAtOne;
    }
    while (work.degree() > 0 && work.eval(Int(-1)) == 0) {
        work = divExact(work, tPlus1);
        ++out.rootAtMinusOne;
    }
    if (work.degree() > 0) {
        // the reciprocal part carries every remaining circle root with full
        // multiplicity; its Chebyshev image keeps circle roots inside (-2, 2)
        Poly g = gcd(work, reversedPoly(work));
        if (g.degree() > 0) {
            Poly q = chebyshevReduce(LaurentPoly(g, 0));
            for (const auto& [factor, mult] : squareFreeDecomposition(q)) {
                for (auto& r : isolateRoots(factor, Rat(-2), Rat(2))) {
                    refineInsideOpenTwoTwo(r);
                    out.pairs.push_back({std::move(r), mult});
                }
            }
        }
    }
    makePairwiseDisjoint(out.pairs);
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const CircleRootPair& a, const CircleRootPair& b) {
                  return a.x.iv.lo > b.x.iv.lo;
              });
    out.offCircleCount = out.degree - out.totalCircleCount();
    assert(out.offCircleCount >= 0);
    return out;
}

ArcClassification countRootsInPlusArc(const CircleRootProfile& profile, int n) {
    if (n < 2) throw std::invalid_argument("arc index must be >= 2");
    ArcClassification res;
    res.inside += profile.rootAtOne;  // t = 1 lies in every plus arc
    if (n == 2) {
        // boundary point is t = -1; every conjugate pair is interior
        for (const auto& pr : profile.pairs) res.inside += 2 * pr.multiplicity;
        res.onBoundary += profile.rootAtMinusOne;
        return res;
    }
    res.outside += profile.rootAtMinusOne;
    CosineBoundary boundary(1, n);
    for (const auto& pr : profile.pairs) {
        int cmp = compareRoots(pr.x, boundary.root());
        if (cmp > 0) res.inside += 2 * pr.multiplicity;
        else if (cmp == 0) res.onBoundary += 2 * pr.multiplicity;
        else res.outside += 2 * pr.multiplicity;
    }
    return res;
}

namespace {

// distinct cut abscissae (profile pairs plus extra angles), x descending,
// refined until pairwise disjoint and strictly inside (-2, 2)
std::vector<IsolatedRoot> collectCuts(const CircleRootProfile& profile,
                                      const std::vector<CosineBoundary>& extra) {
    std::vector<IsolatedRoot> cuts;
    for (const auto& pr : profile.pairs) cuts.push_back(pr.x);
    for (const auto& e : extra) {
        if (e.n() <= 2) continue;  // x = -2 is the arc end, never an interior cut
        IsolatedRoot r = e.root();
        refineInsideOpenTwoTwo(r);
        bool dup = false;
        for (const auto& c : cuts)
            if (compareRoots(c, r) == 0) { dup = true; break; }
        if (!dup) cuts.push_back(std::move(r));
    }
    std::sort(cuts.begin(), cuts.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return compareRoots(a, b) > 0;
    });
    for (bool again = true; again;) {
        again = false;
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            if (!cuts[i].iv.disjointFrom(cuts[i + 1].iv)) {
                cuts[i].refine();
                cuts[i + 1].refine();
                again = true;
            }
    }
    return cuts;
}

// rational (xlo, xhi) gaps between consecutive cuts, descending, with the
// outer ends at +-2
std::vector<std::pair<Rat, Rat>> gapsBetween(const std::vector<IsolatedRoot>& cuts) {
    std::vector<std::pair<Rat, Rat>> gaps;
    Rat upper(2);
    for (const auto& c : cuts) {
        gaps.emplace_back(c.iv.hi, upper);
        upper = c.iv.lo;
    }
    gaps.emplace_back(Rat(-2), upper);
    return gaps;
}

}  // namespace

std::vector<Rat> sampleAbscissaeBetweenRoots(const CircleRootProfile& profile,
                                             const std::vector<CosineBoundary>& extra) {
    std::vector<Rat> xs;
    for (const auto& [lo, hi] : gapsBetween(collectCuts(profile, extra)))
        xs.push_back((lo + hi) / 2);
    return xs;
}

RationalCirclePoint circlePointWithCosBetween(const Rat& xlo, const Rat& xhi) {
    // c(u) = (1-u^2)/(1+u^2) decreases from 1 to -1 on u in (0, inf); bisect u
    // until the cosine lands strictly inside the target gap
    Rat tl = xlo / 2, th = xhi / 2;
    Rat ul(0), uh(1);
    auto cOf = [](const Rat& u) -> Rat { return (1 - u * u) / (1 + u * u); };
    while (cOf(uh) >= th) uh *= 2;
    for (;;) {
        Rat m = (ul + uh) / 2;
        Rat c = cOf(m);
        if (c >= th) ul = m;
        else if (c <= tl) uh = m;
        else return circlePointFromParameter(m);
    }
}

std::vector<RationalCirclePoint> samplePointsBetweenRoots(
    const CircleRootProfile& profile, const std::vector<CosineBoundary>& extra) {
    std::vector<RationalCirclePoint> pts;
    for (const auto& [lo, hi] : gapsBetween(collectCuts(profile, extra)))
        pts.push_back(circlePointWithCosBetween(lo, hi));
    return pts;
}

}  // namespace knotsig
