#pragma once

#include <map>
#include <optional>

#include "knotsig/seifert.hpp"

namespace knotsig {

// Homology data of the n-fold cyclic branched cover.
struct BranchedCoverReport {
    int n = 2;
    std::optional<Int> h1Order;  // nullopt encodes INFINITE (positive b_1)
    bool isQHS = false;
    bool etaKnown = false;       // true when a Seifert matrix was supplied
    int betti1 = 0;              // sum of nullities; valid when etaKnown

    struct PerJ {
        int j = 0;
        bool deltaNonzero = false;
        std::optional<int> eta;  // known exactly only with a Seifert matrix
    };
    std::vector<PerJ> perJ;
    // |Norm of delta(zeta_d)| per divisor d > 1 of n; the product over all d
    // equals h1Order when finite
    std::map<int, Int> normPerDivisor;
};

BranchedCoverReport branchedCoverHomology(const SeifertMatrix& s, int n);
BranchedCoverReport branchedCoverHomology(const LaurentPoly& delta, int n);

// |sigma| + |eta - (mu-1)| <= 2 gF + (m - mu)
bool murasugiTristramCheck(int sigma, int eta, int mu, int gF, int m);

// max over arcs of ceil(|sigma|/2); knots only (m == 1)
int topFourGenusLowerBound(const SeifertMatrix& s);

// G(F) = g(F) + (m - mu)
int bigGenus(int gF, int m, int mu);

// sigma_K(zeta_n^j) = sigma_C(zeta_n^{wj}) + sigma_{K1}(zeta_n^j) for a
// satellite with companion profile C, pattern-closure profile K1 and winding
// number w. Throws "JumpPoint" when either profile jumps at the needed angle.
int satelliteSignature(const SignatureProfile& companion, const SignatureProfile& pattern,
                       int w, int n, int j);

// g(K) >= |w| g(C) + g(K1)
int satelliteGenusBound(int gC, int gK1, int w);

}  // namespace knotsig
