#include "knotsig/seifert.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace knotsig {

namespace {

// determinant of a polynomial matrix, fraction-free
Poly determinantPoly(Matrix<Poly> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Poly::constant(1);
    Poly prev = Poly::constant(1);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].isZero()) { piv = r; break; }
        if (piv < 0) return {};
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r)
            for (int c = col + 1; c < n; ++c)
                m[r][c] = divExact(m[r][c] * m[col][col] - m[r][col] * m[col][c], prev);
        prev = m[col][col];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

AlexanderResult alexander(const SeifertMatrix& s) {
    const int n = s.size();
    Matrix<Poly> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = Poly({s.entries[i][j], -s.entries[j][i]});
    Poly det = determinantPoly(std::move(m));
    AlexanderResult out;
    if (det.isZero()) {
        out.zero = true;
        return out;
    }
    Normalized norm = normalize(LaurentPoly(det, 0));
    out.delta = norm.poly;
    out.type = norm.type;
    return out;
}

Matrix<Int> symmetrize(const SeifertMatrix& s) {
    const int n = s.size();
    Matrix<Int> m(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = s.entries[i][j] + s.entries[j][i];
    return m;
}

Inertia inertiaAtRationalPoint(const SeifertMatrix& s, const RationalCirclePoint& p) {
    if (p.isOne()) throw std::invalid_argument("inertia undefined at t = 1");
    assert(p.c * p.c + p.s * p.s == 1);
    const int n = s.size();
    // A = (1-c)(S + S^T) symmetric, B = s(S^T - S) antisymmetric; the doubled
    // matrix [[A, -B], [B, A]] has exactly twice the Hermitian inertia
    Matrix<Rat> m(2 * n, std::vector<Rat>(2 * n, Rat(0)));
    Rat oneMinusC = 1 - p.c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat a = oneMinusC * Rat(s.entries[i][j] + s.entries[j][i]);
            Rat b = p.s * Rat(s.entries[j][i] - s.entries[i][j]);
            m[i][j] = a;
            m[n + i][n + j] = a;
            m[i][n + j] = -b;
            m[n + i][j] = b;
        }
    Inertia doubled = symmetricInertia(std::move(m));
    assert(doubled.nPlus % 2 == 0 && doubled.nZero % 2 == 0 && doubled.nMinus % 2 == 0);
    return {doubled.nPlus / 2, doubled.nZero / 2, doubled.nMinus / 2};
}

int nullityAtRootOfUnity(const SeifertMatrix& s, int n, int j) {
    if (n < 2 || j < 1 || j > n - 1) throw std::invalid_argument("nullity needs 1 <= j <= n-1");
    int g = std::gcd(j, n);
    int np = n / g, jp = j / g;
    QuotientField f(cyclotomic(np).polyPart());
    QuotientField::Elem zetaBar = f.rootOfUnityPower(-jp, np);
    const int len = s.size();
    Matrix<QuotientField::Elem> m(len, std::vector<QuotientField::Elem>(len, f.zero()));
    for (int a = 0; a < len; ++a)
        for (int b = 0; b < len; ++b) {
            QuotientField::Elem e = f.mulRat(zetaBar, Rat(-s.entries[b][a]));
            e[0] += Rat(s.entries[a][b]);
            m[a][b] = std::move(e);
        }
    return len - rankOverField(f, std::move(m));
}

namespace {

// exact (sigma, eta) at a jump point: Hermitian congruence over
// Q(2cos(theta))[w], w = i sin(theta)
SigEta signatureAtJump(const SeifertMatrix& s, int np, int jp) {
    if (np == 2) {
        Inertia in = symmetricInertia([&] {
            const int n = s.size();
            Matrix<Rat> m(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m[i][j] = Rat(2 * (s.entries[i][j] + s.entries[j][i]));
            return m;
        }());
        return {in.signature(), in.nZero};
    }
    CosineBoundary angle(jp, np);
    RealAlgebraicField realField(angle.minimalPoly(), angle.root());
    const QuotientField& f = realField.field();
    // w^2 = (x/2)^2 - 1 = cos^2(theta) - 1
    QuotientField::Elem d = f.fromIntPoly(Poly({Int(-4), Int(0), Int(1)}));
    d = f.mulRat(d, Rat(1, 4));
    QuadraticExtension ext(f, d);
    QuotientField::Elem oneMinusC = f.fromIntPoly(Poly::monomial(1, -1));
    oneMinusC = f.mulRat(oneMinusC, Rat(1, 2));
    oneMinusC[0] += 1;
    const int n = s.size();
    Matrix<QuadExtElem> h(n, std::vector<QuadExtElem>(n, ext.zero()));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // (1-zeta)S_ab + (1-conj zeta)S_ba with zeta = c + w
            h[a][b].re = f.mulRat(oneMinusC, Rat(s.entries[a][b] + s.entries[b][a]));
            h[a][b].im = f.fromRat(Rat(s.entries[b][a] - s.entries[a][b]));
        }
    Inertia in = hermitianInertia(ext, realField, std::move(h));
    return {in.signature(), in.nZero};
}

}  // namespace

SigEta signatureAtRootOfUnity(const SeifertMatrix& s, int n, int j) {
    if (n < 2 || j < 1 || j > n - 1) throw std::invalid_argument("need 1 <= j <= n-1");
    if (2 * j > n) j = n - j;  // sigma and eta are conjugation invariant
    int g = std::gcd(j, n);
    int np = n / g, jp = j / g;
    AlexanderResult alex = alexander(s);
    bool atRoot = alex.zero || evalAtRootOfUnity(alex.delta, np, jp % np).isZero();
    if (atRoot) {
        SigEta v = signatureAtJump(s, np, jp);
        assert(v.eta == nullityAtRootOfUnity(s, n, j));
        return v;
    }
    // off the roots of delta the value is the arc value; sample the arc
    CircleRootProfile profile = isolateCircleRoots(alex.delta);
    auto samples = samplePointsBetweenRoots(profile);
    size_t idx = 0;
    if (np == 2) {
        idx = profile.pairs.size();  // angle pi: the last arc
    } else {
        CosineBoundary boundary(jp, np);
        for (const auto& pr : profile.pairs) {
            if (compareRoots(pr.x, boundary.root()) > 0) ++idx;
        }
    }
    Inertia in = inertiaAtRationalPoint(s, samples[idx]);
    return {in.signature(), in.nZero};
}

SigEta SignatureProfile::evaluateAt(int n, int j) const {
    if (n < 1 || j < 0) throw std::invalid_argument("bad angle index");
    j %= n;
    if (j == 0) return {0, formSize};
    if (2 * j > n) j = n - j;
    int g = std::gcd(j, n);
    int np = n / g, jp = j / g;
    if (degenerate) throw std::domain_error("JumpPoint");
    if (np == 2) {
        if (roots.rootAtMinusOne > 0) throw std::domain_error("JumpPoint");
        const ArcValue& a = arcs.back();
        return {a.sigma, a.eta};
    }
    CosineBoundary boundary(jp, np);
    size_t idx = 0;
    for (const auto& pr : roots.pairs) {
        int cmp = compareRoots(pr.x, boundary.root());
        if (cmp == 0) throw std::domain_error("JumpPoint");
        if (cmp > 0) ++idx;
    }
    const ArcValue& a = arcs[idx];
    return {a.sigma, a.eta};
}

SignatureProfile signatureProfile(const SeifertMatrix& s, int jumpIndexBound) {
    SignatureProfile out;
    out.formSize = s.size();
    AlexanderResult alex = alexander(s);
    if (alex.zero) {
        out.degenerate = true;
        Inertia in = inertiaAtRationalPoint(s, circlePointFromParameter(Rat(1)));
        out.arcs.push_back({circlePointFromParameter(Rat(1)), in.signature(), in.nZero});
        return out;
    }
    out.delta = alex.delta;
    out.roots = isolateCircleRoots(alex.delta);
    for (const auto& pt : samplePointsBetweenRoots(out.roots)) {
        Inertia in = inertiaAtRationalPoint(s, pt);
        out.arcs.push_back({pt, in.signature(), in.nZero});
    }
    out.jumps.resize(out.roots.pairs.size());
    for (size_t i = 0; i < out.jumps.size(); ++i)
        out.jumps[i].multiplicity = out.roots.pairs[i].multiplicity;
    if (jumpIndexBound >= 2 && out.roots.rootAtMinusOne > 0)
        out.atMinusOne = signatureAtRootOfUnity(s, 2, 1);
    if (jumpIndexBound >= 3) {
        // identify jump angles that are roots of unity via the cyclotomic
        // factors of delta
        auto fact = cyclotomicFactorization(alex.delta);
        for (const auto& [d, mult] : fact.exponents) {
            if (d < 3 || d > jumpIndexBound) continue;
            for (int k = 1; 2 * k < d; ++k) {
                if (std::gcd(k, d) != 1) continue;
                CosineBoundary angle(k, d);
                for (size_t i = 0; i < out.roots.pairs.size(); ++i) {
                    if (compareRoots(out.roots.pairs[i].x, angle.root()) == 0) {
                        out.jumps[i].rootOfUnity = {k, d};
                        out.jumps[i].atJump = signatureAtRootOfUnity(s, d, k);
                        break;
                    }
                }
            }
        }
    }
    return out;
}

int murasugiSignature(const SeifertMatrix& s) {
    return inertiaAtRationalPoint(s, {Rat(-1), Rat(0)}).signature();
}

DefiniteReport isDefinite(const SeifertMatrix& s) {
    int n = s.size();
    int twoG = n - (s.components - 1);
    if (twoG < 0 || twoG % 2 != 0) throw std::invalid_argument("InconsistentMetadata");
    DefiniteReport rep;
    rep.maxPossible = n;
    rep.sigmaAbs = std::abs(murasugiSignature(s));
    rep.definite = rep.sigmaAbs == n;
    return rep;
}

SeifertMatrix congruenceTransform(const SeifertMatrix& s, const Matrix<Int>& p) {
    const int n = s.size();
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("size mismatch");
    Int det = determinant(p);
    if (det != 1 && det != -1) throw std::invalid_argument("transform must be unimodular");
    Matrix<Int> tmp(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (p[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) tmp[i][j] += p[i][k] * s.entries[k][j];
        }
    SeifertMatrix out = s;
    out.entries.assign(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.entries[i][j] += tmp[i][k] * p[j][k];
    return out;
}

}  // namespace knotsig
