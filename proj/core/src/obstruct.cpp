#include "knotsig/obstruct.hpp"

#include <cmath>
#include <stdexcept>

namespace knotsig {

namespace {

bool allInsidePlusArc(const CircleRootProfile& profile, int r) {
    ArcClassification c = countRootsInPlusArc(profile, r);
    return c.inside == profile.totalCircleCount() && profile.offCircleCount == 0;
}

// rough double-precision angle of the outermost pair, for a search hint only
double angleEstimate(const CircleRootProfile& profile) {
    IsolatedRoot r = profile.pairs.back().x;
    r.refineBelow(Rat(1, 1024));
    double x = r.iv.mid().get_d();
    if (x < -2) x = -2;
    if (x > 2) x = 2;
    return std::acos(x / 2);
}

}  // namespace

N3Result computeN3(const LaurentPoly& delta) {
    CircleRootProfile profile = isolateCircleRoots(delta);
    if (profile.pairs.empty() && profile.offCircleCount == 0 && profile.rootAtMinusOne == 0)
        return N3Result::unbounded();  // constant times a power of (t-1)
    if (profile.offCircleCount > 0 || profile.rootAtMinusOne > 0)
        return N3Result::undefined();
    // all roots on the circle away from -1 and at least one conjugate pair:
    // the arc test fails for r large, so the maximum exists
    int guess = std::max(2, static_cast<int>(2 * M_PI / angleEstimate(profile)) - 2);
    while (guess > 2 && !allInsidePlusArc(profile, guess)) --guess;
    int r = guess;
    while (allInsidePlusArc(profile, r + 1)) ++r;
    if (!allInsidePlusArc(profile, r)) return N3Result::undefined();  // unreachable
    return N3Result::of(r);
}

std::optional<int> computeN4(const LaurentPoly& delta, int g4, int m) {
    if (g4 < 0 || m < 1) throw std::invalid_argument("bad n4 parameters");
    int threshold = 2 * g4 + (m - 1);
    CircleRootProfile profile = isolateCircleRoots(delta);
    if (profile.rootAtOne >= threshold)
        throw std::invalid_argument("Hypothesis");  // (t-1)^{2g4+m-1} divides delta
    auto insideCount = [&](int n) { return countRootsInPlusArc(profile, n).inside; };
    if (insideCount(2) < threshold) return std::nullopt;
    int n = 2;
    while (insideCount(n + 1) >= threshold) ++n;
    return n;
}

MonicClassification monicClassification(const LaurentPoly& delta, int n, bool knot) {
    if (n < 2 || n > 5) throw std::invalid_argument("classification defined for n in {2,..,5}");
    Normalized norm = normalize(delta);
    if (norm.poly.polyPart().leading() != 1) throw std::invalid_argument("NonMonic");
    MonicClassification out;
    auto fact = cyclotomicFactorization(norm.poly);
    if (fact.remainder != LaurentPoly::constant(1)) {
        out.reason = "not-a-cyclotomic-product";
        return out;
    }
    out.factors = fact.exponents;
    if (fact.exponents.empty()) {
        out.reason = "trivial-product";
        return out;
    }
    std::set<int> allowed;
    if (n == 3) allowed = {1, 4, 6, 10};
    else if (n >= 4) allowed = {1, 6};
    for (const auto& [k, e] : fact.exponents) {
        (void)e;
        if (n >= 3 && allowed.count(k) == 0) {
            out.reason = "factor-outside-allowed-set";
            return out;
        }
        if (knot && (k == 1 || k == 4)) {
            out.reason = "factor-excluded-for-knots";
            return out;
        }
    }
    out.pass = true;
    return out;
}

std::set<int> lspaceKnotScreen(const LaurentPoly& delta, bool enforceCoefficientCondition) {
    Normalized norm = normalize(delta);
    if (norm.poly.polyPart().leading() != 1) throw std::invalid_argument("NonMonic");
    if (enforceCoefficientCondition) {
        for (const auto& [e, c] : norm.poly.toMap()) {
            (void)e;
            if (c != 1 && c != -1) return {};
        }
    }
    std::set<int> admissible;
    if (monicClassification(norm.poly, 2, true).pass) admissible.insert(2);
    LaurentPoly phi6 = cyclotomic(6), phi10 = cyclotomic(10);
    if (norm.poly == phi6 || norm.poly == phi10) admissible.insert(3);
    if (norm.poly == phi6) {
        admissible.insert(4);
        admissible.insert(5);
    }
    return admissible;
}

ObstructionVerdict sqpLspaceObstruction(const SeifertMatrix& s, int n) {
    if (n < 2) throw std::invalid_argument("cover order must be >= 2");
    const int formSize = s.size();
    AlexanderResult alex = alexander(s);
    if (alex.zero) return {true, "degenerate-alexander"};
    if (alex.delta.span() != formSize) return {true, "delta-degree-below-form-size"};
    CircleRootProfile profile = isolateCircleRoots(alex.delta);
    if (profile.offCircleCount > 0) return {true, "root-off-unit-circle"};
    ArcClassification arc = countRootsInPlusArc(profile, n);
    if (arc.inside != profile.totalCircleCount()) return {true, "root-not-inside-plus-arc"};
    // every root now lies strictly inside the plus arc, so sigma is constant
    // on the closed minus arc and its value there is the Murasugi signature
    if (std::abs(murasugiSignature(s)) != formSize)
        return {true, "signature-not-maximal-on-minus-arc"};
    return {false, ""};
}

SqpStatus sqpStatusObstruction(int sigma, int g, int m, bool someCoverIsLSpace) {
    if (!someCoverIsLSpace) return SqpStatus::NoObstruction;
    return std::abs(sigma) == 2 * g + (m - 1) ? SqpStatus::NoObstruction : SqpStatus::NotSQP;
}

}  // namespace knotsig
