#include "knotsig/covers.hpp"

#include <cmath>
#include <stdexcept>

namespace knotsig {

namespace {

// |Norm_{Q(zeta_d)/Q} of delta(zeta_d)| from the residue representation
Int normOfValue(const LaurentPoly& delta, int d) {
    if (d == 1) return abs(delta.evalAtOne());
    RootOfUnityValue v = evalAtRootOfUnity(delta, d, 1);
    if (v.isZero()) return 0;
    Poly phi = cyclotomic(d).polyPart();
    // clear denominators: Res(phi, D*r) = D^phi(d) Res(phi, r)
    Int den(1);
    for (const auto& c : v.residue) den = den * c.get_den() / gcd(den, Int(c.get_den()));
    std::vector<Int> ic(v.residue.size());
    for (size_t i = 0; i < ic.size(); ++i) {
        Rat scaled = v.residue[i] * Rat(den);
        ic[i] = scaled.get_num();
    }
    Int res = resultant(phi, Poly(std::move(ic)));
    Int scale = pow(den, static_cast<unsigned long>(phi.degree()));
    return abs(res / scale);
}

BranchedCoverReport buildReport(const LaurentPoly& delta, bool deltaZero, int n,
                                const SeifertMatrix* s) {
    if (n < 2) throw std::invalid_argument("cover order must be >= 2");
    BranchedCoverReport rep;
    rep.n = n;
    rep.etaKnown = s != nullptr;
    if (!deltaZero) {
        rep.h1Order = resultantWithCyclotomicTower(delta, n);
        for (int d = 2; d <= n; ++d)
            if (n % d == 0) rep.normPerDivisor[d] = normOfValue(delta, d);
    }
    for (int j = 1; j <= n - 1; ++j) {
        BranchedCoverReport::PerJ pj;
        pj.j = j;
        pj.deltaNonzero = !deltaZero && !evalAtRootOfUnity(delta, n, j).isZero();
        if (s != nullptr) {
            pj.eta = nullityAtRootOfUnity(*s, n, j);
            rep.betti1 += *pj.eta;
        } else if (pj.deltaNonzero) {
            pj.eta = 0;  // certified: nonzero delta value forces zero nullity
        }
        rep.perJ.push_back(std::move(pj));
    }
    rep.isQHS = rep.h1Order.has_value();
    return rep;
}

}  // namespace

BranchedCoverReport branchedCoverHomology(const SeifertMatrix& s, int n) {
    AlexanderResult alex = alexander(s);
    return buildReport(alex.delta, alex.zero, n, &s);
}

BranchedCoverReport branchedCoverHomology(const LaurentPoly& delta, int n) {
    return buildReport(normalize(delta).poly, false, n, nullptr);
}

bool murasugiTristramCheck(int sigma, int eta, int mu, int gF, int m) {
    if (mu < 1 || m < mu || gF < 0 || eta < 0)
        throw std::invalid_argument("bad Murasugi-Tristram parameters");
    return std::abs(sigma) + std::abs(eta - (mu - 1)) <= 2 * gF + (m - mu);
}

int topFourGenusLowerBound(const SeifertMatrix& s) {
    if (s.components != 1)
        throw std::invalid_argument("topFourGenusLowerBound needs a knot; use the big-genus form");
    SignatureProfile prof = signatureProfile(s);
    int best = 0;
    for (const auto& arc : prof.arcs) {
        int v = (std::abs(arc.sigma) + 1) / 2;
        best = std::max(best, v);
    }
    return best;
}

int bigGenus(int gF, int m, int mu) {
    if (mu < 1 || m < mu || gF < 0) throw std::invalid_argument("bad big-genus parameters");
    return gF + m - mu;
}

int satelliteSignature(const SignatureProfile& companion, const SignatureProfile& pattern,
                       int w, int n, int j) {
    if (n < 2 || j < 0) throw std::invalid_argument("bad satellite angle");
    long wj = static_cast<long>(w) * j;
    int jc = static_cast<int>(((wj % n) + n) % n);
    int sC = companion.evaluateAt(n, jc).sigma;  // angle 0 contributes 0
    int sK1 = pattern.evaluateAt(n, j % n).sigma;
    return sC + sK1;
}

int satelliteGenusBound(int gC, int gK1, int w) {
    if (gC < 0 || gK1 < 0) throw std::invalid_argument("genera must be >= 0");
    return std::abs(w) * gC + gK1;
}

}  // namespace knotsig
