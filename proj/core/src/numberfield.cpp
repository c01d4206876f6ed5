#include "knotsig/numberfield.hpp"

#include <cassert>
#include <stdexcept>

namespace knotsig {

namespace {

// little dense Q[t] helpers for the extended Euclid
using RatVec = std::vector<Rat>;

int degOf(const RatVec& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

RatVec scaled(RatVec v, const Rat& c) {
    for (auto& x : v) x *= c;
    return v;
}

RatVec subShifted(RatVec a, const RatVec& b, const Rat& c, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    return a;
}

// (quotient, remainder) of a / b over Q
std::pair<RatVec, RatVec> divmod(RatVec a, const RatVec& b) {
    int db = degOf(b);
    assert(db >= 0);
    RatVec q(std::max<size_t>(1, a.size()), Rat(0));
    for (int da = degOf(a); da >= db; da = degOf(a)) {
        Rat c = a[da] / b[db];
        q[da - db] = c;
        a = subShifted(std::move(a), b, c, da - db);
    }
    return {q, a};
}

}  // namespace

QuotientField::QuotientField(Poly monicModulus) : modulus_(std::move(monicModulus)) {
    if (modulus_.degree() < 1 || modulus_.leading() != 1)
        throw std::invalid_argument("quotient modulus must be monic of degree >= 1");
}

QuotientField::Elem QuotientField::reduce(std::vector<Rat> v) const {
    int d = degree();
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        Rat top = v[i];
        if (top == 0) continue;
        v[i] = 0;
        for (int j = 0; j < d; ++j) v[i - d + j] -= top * Rat(modulus_.coeff(j));
    }
    v.resize(d, Rat(0));
    return v;
}

QuotientField::Elem QuotientField::fromRat(const Rat& v) const {
    Elem e = zero();
    e[0] = v;
    return e;
}

QuotientField::Elem QuotientField::fromIntPoly(const Poly& p) const {
    std::vector<Rat> v(p.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(p.coeffs()[i]);
    if (v.empty()) return zero();
    return reduce(std::move(v));
}

QuotientField::Elem QuotientField::rootOfUnityPower(long e, int n) const {
    long r = e % n;
    if (r < 0) r += n;
    std::vector<Rat> v(static_cast<size_t>(r) + 1, Rat(0));
    v[static_cast<size_t>(r)] = 1;
    return reduce(std::move(v));
}

bool QuotientField::isZero(const Elem& a) const {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

bool QuotientField::equal(const Elem& a, const Elem& b) const { return a == b; }

QuotientField::Elem QuotientField::neg(const Elem& a) const {
    Elem r = a;
    for (auto& v : r) v = -v;
    return r;
}

QuotientField::Elem QuotientField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

QuotientField::Elem QuotientField::sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

QuotientField::Elem QuotientField::mul(const Elem& a, const Elem& b) const {
    int d = degree();
    std::vector<Rat> r(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return reduce(std::move(r));
}

QuotientField::Elem QuotientField::mulRat(const Elem& a, const Rat& v) const {
    Elem r = a;
    for (auto& x : r) x *= v;
    return r;
}

QuotientField::Elem QuotientField::inverse(const Elem& a) const {
    if (isZero(a)) throw std::domain_error("inverse of zero field element");
    // extended Euclid: s*a + t*m = gcd; gcd must be a nonzero constant
    RatVec r0(modulus_.coeffs().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(modulus_.coeffs()[i]);
    RatVec r1 = a;
    RatVec s0{Rat(0)}, s1{Rat(1)};
    while (degOf(r1) > 0) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // s_{k+1} = s_{k-1} - q*s_k
        RatVec qs(q.size() + s1.size(), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        RatVec next = s0;
        if (next.size() < qs.size()) next.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    int d1 = degOf(r1);
    if (d1 != 0) throw std::domain_error("element not invertible: modulus is reducible");
    Rat c = r1[0];
    Elem result = reduce(std::move(s1));
    for (auto& v : result) v /= c;
    return result;
}

RealAlgebraicField::RealAlgebraicField(Poly monicModulus, IsolatedRoot root)
    : f_(std::move(monicModulus)), root_(std::move(root)) {}

int RealAlgebraicField::sign(const Elem& a) {
    if (f_.isZero(a)) return 0;
    for (;;) {
        RatInterval x = {root_.iv.lo, root_.iv.hi};
        RatInterval acc(Rat(0), Rat(0));
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
            acc = acc * x;
            acc.lo += a[i];
            acc.hi += a[i];
        }
        int s = acc.definiteSign();
        if (s != 0) return s;
        // a is nonzero and the modulus is irreducible, so a(root) != 0 and
        // the enclosure separates from zero under refinement
        root_.refine();
    }
}

RatInterval RealAlgebraicField::enclose(const Elem& a, const Rat& maxWidth) {
    for (;;) {
        RatInterval x = {root_.iv.lo, root_.iv.hi};
        RatInterval acc(Rat(0), Rat(0));
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
            acc = acc * x;
            acc.lo += a[i];
            acc.hi += a[i];
        }
        if (acc.width() < maxWidth) return acc;
        root_.refine();
    }
}

}  // namespace knotsig
