#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "knotsig/braid.hpp"
#include "knotsig/laurent.hpp"
#include "knotsig/linalg.hpp"
#include "knotsig/realroots.hpp"
#include "knotsig/seifert.hpp"

namespace oracles {

using knotsig::Int;
using knotsig::Rat;

// Durand-Kerner root finder at double precision; coarse, test use only.
inline std::vector<std::complex<double>> complexRoots(const knotsig::LaurentPoly& p) {
    auto poly = knotsig::normalize(p).poly.polyPart();
    int d = poly.degree();
    std::vector<std::complex<double>> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = poly.coeff(i).get_d();
    std::vector<std::complex<double>> z(d);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        acc *= seed;
        z[i] = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int i = d; i >= 0; --i) v = v * x + c[i];
        return v;
    };
    for (int iter = 0; iter < 600; ++iter) {
        for (int i = 0; i < d; ++i) {
            std::complex<double> denom = c[d];
            for (int k = 0; k < d; ++k)
                if (k != i) denom *= z[i] - z[k];
            z[i] -= eval(z[i]) / denom;
        }
    }
    return z;
}

// count roots with |z| within tol of the unit circle (multiplicity included,
// as the finder returns a root list with repeats)
inline int unitCircleRootCount(const knotsig::LaurentPoly& p, double tol = 1e-6) {
    int n = 0;
    for (const auto& z : complexRoots(p))
        if (std::abs(std::abs(z) - 1.0) < tol) ++n;
    return n;
}

// Signature of a symmetric integer matrix through its characteristic
// polynomial: positive and negative eigenvalue counts by Sturm root counting.
// A different route from the library's congruence diagonalization.
inline knotsig::Inertia charPolySignature(const knotsig::Matrix<Int>& m) {
    const int n = static_cast<int>(m.size());
    // char poly via Faddeev-LeVerrier: integer matrix, rational trace steps
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    std::vector<Rat> coeff(n + 1, Rat(0));
    coeff[n] = 1;
    std::vector<std::vector<Rat>> mk = a;
    for (int k = 1; k <= n; ++k) {
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += mk[i][i];
        Rat ck = -tr / k;
        coeff[n - k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) mk[i][i] += ck;
        std::vector<std::vector<Rat>> next(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
            }
        mk = std::move(next);
    }
    Int den(1);
    for (const auto& c : coeff) den = den * c.get_den() / knotsig::gcd(den, Int(c.get_den()));
    std::vector<Int> ic(n + 1);
    for (int i = 0; i <= n; ++i) ic[i] = Rat(coeff[i] * Rat(den)).get_num();
    knotsig::Poly chi{std::vector<Int>(ic)};
    knotsig::Inertia res;
    // count sign-weighted roots per square-free factor, multiplicity included
    Rat bound = knotsig::rootBound(chi);
    for (const auto& [factor, mult] : knotsig::squareFreeDecomposition(chi)) {
        knotsig::SturmChain chain(factor);
        int pos = chain.countRoots(Rat(0), bound);
        int neg = chain.countRoots(-bound, Rat(0));
        if (factor.eval(Rat(0)) == 0) --neg;  // zero root lands in (-bound, 0]
        int zero = factor.eval(Rat(0)) == 0 ? 1 : 0;
        res.nPlus += mult * pos;
        res.nMinus += mult * neg;
        res.nZero += mult * zero;
    }
    return res;
}

inline knotsig::Matrix<Int> randomIntMatrix(std::mt19937& rng, int n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    knotsig::Matrix<Int> m(n, std::vector<Int>(n));
    for (auto& row : m)
        for (auto& v : row) v = dist(rng);
    return m;
}

// random product of elementary unimodular operations
inline knotsig::Matrix<Int> randomUnimodular(std::mt19937& rng, int n, int steps = 12) {
    knotsig::Matrix<Int> p(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    if (n < 2) return p;
    std::uniform_int_distribution<int> row(0, n - 1), coef(-2, 2), op(0, 2);
    for (int s = 0; s < steps; ++s) {
        int i = row(rng), j = row(rng);
        if (i == j) continue;
        switch (op(rng)) {
            case 0: {
                int c = coef(rng);
                for (int k = 0; k < n; ++k) p[i][k] += c * p[j][k];
                break;
            }
            case 1:
                std::swap(p[i], p[j]);
                break;
            default:
                for (int k = 0; k < n; ++k) p[i][k] = -p[i][k];
        }
    }
    return p;
}

// Alexander polynomial of a braid closure through the reduced Burau
// representation: det(B(beta) - I) (t - 1) / (t^s - 1) up to units. Knot
// closures only. Entirely independent of the Seifert-matrix route.
namespace burau_detail {

using Mat = std::vector<std::vector<knotsig::LaurentPoly>>;

inline Mat identity(int n) {
    Mat m(n, std::vector<knotsig::LaurentPoly>(n));
    for (int i = 0; i < n; ++i) m[i][i] = knotsig::LaurentPoly::constant(1);
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat r(n, std::vector<knotsig::LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

inline Mat generator(int s, int i, int sign) {
    Mat m = identity(s - 1);
    knotsig::LaurentPoly t = knotsig::LaurentPoly::monomial(1, 1);
    knotsig::LaurentPoly tinv = knotsig::LaurentPoly::monomial(-1, 1);
    int k = i - 1;
    if (sign > 0) {
        m[k][k] = -t;
        if (k > 0) m[k][k - 1] = t;
        if (k + 1 < s - 1) m[k][k + 1] = knotsig::LaurentPoly::constant(1);
    } else {
        m[k][k] = -tinv;
        if (k > 0) m[k][k - 1] = knotsig::LaurentPoly::constant(1);
        if (k + 1 < s - 1) m[k][k + 1] = tinv;
    }
    return m;
}

inline knotsig::LaurentPoly det(Mat m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    knotsig::LaurentPoly acc;
    for (int c = 0; c < n; ++c) {
        Mat sub(n - 1, std::vector<knotsig::LaurentPoly>(n - 1));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                sub[i - 1][cc++] = m[i][j];
            }
        }
        knotsig::LaurentPoly term = m[0][c] * det(std::move(sub));
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace burau_detail

inline knotsig::LaurentPoly burauAlexander(const knotsig::BraidWord& w) {
    using namespace burau_detail;
    auto word = knotsig::expandToStandard(w);
    Mat b = identity(w.strands - 1);
    for (const auto& l : word) b = mul(b, generator(w.strands, l.i, l.sign));
    for (int i = 0; i < w.strands - 1; ++i)
        b[i][i] = b[i][i] - knotsig::LaurentPoly::constant(1);
    knotsig::LaurentPoly num =
        det(std::move(b)) * (knotsig::LaurentPoly::monomial(1, 1) - knotsig::LaurentPoly::constant(1));
    if (num.isZero()) return {};
    knotsig::Poly den = knotsig::Poly::monomial(w.strands, 1) - knotsig::Poly::constant(1);
    knotsig::LaurentPoly shifted(num.polyPart(), 0);
    knotsig::Poly q = knotsig::divExact(shifted.polyPart(), den);
    return knotsig::normalize(knotsig::LaurentPoly(q, 0)).poly;
}

// Double branched cover of a pretzel is not an L-space iff the Seifert-fibred
// obstruction search finds a compatible pair, following the proof's
// inequalities: exists coprime a, m with q < m/a < p1 and m < p2 (r = 1 case).
inline bool sigma2LspaceSearchOracle(const std::vector<long>& pos, const std::vector<long>& neg) {
    if (neg.empty()) return true;
    if (neg.size() >= 2) return false;
    long q = neg[0], p1 = pos[0], p2 = pos[1];
    for (long m = 2; m < p2; ++m) {
        for (long a = 1; 2 * a <= m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            // q < m/a < p1
            if (q * a < m && m < p1 * a) return false;
        }
    }
    return true;
}

}  // namespace oracles
