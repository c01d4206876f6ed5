#include "knotsig/families.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "knotsig/circle.hpp"

namespace knotsig {

namespace {

bool isOdd(long v) { return std::abs(v) % 2 == 1; }

void validateStrands(const std::vector<long>& strands) {
    if (strands.size() < 3)
        throw std::invalid_argument("pretzel classifiers need at least 3 strands");
    for (long v : strands)
        if (std::abs(v) < 2) throw std::invalid_argument("pretzel entries need |p_i| >= 2");
}

}  // namespace

SqpRuling pretzelKnotIsSQP(const PretzelParams& p) {
    validateStrands(p.strands);
    const size_t n = p.strands.size();
    size_t evens = 0, evenIdx = 0;
    long d = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!isOdd(p.strands[i])) {
            ++evens;
            evenIdx = i;
        }
        d += p.strands[i] > 0 ? 1 : -1;
    }
    if (evens >= 2 || (evens == 0 && n % 2 == 0))
        throw std::invalid_argument("NotAKnot");
    long absd = std::abs(d);
    if (evens == 1) {
        // rotate the even entry to the front; the conditions only see the
        // signs of the remaining entries
        bool othersEqual = true;
        int firstOdd = 0;
        for (size_t i = 1; i < n; ++i) {
            long v = p.strands[(evenIdx + i) % n];
            int s = v > 0 ? 1 : -1;
            if (i == 1) firstOdd = s;
            else if (s != firstOdd) othersEqual = false;
        }
        if (absd == static_cast<long>(n) && n % 2 == 0)
            return {Verdict3::Yes, "even-strand, alternating, even count"};
        if (absd == static_cast<long>(n) - 2 && n % 2 == 1 && othersEqual)
            return {Verdict3::Yes, "even-strand opposite to equal odd strands"};
        return {Verdict3::No, "even-strand pattern fails both clauses"};
    }
    // all entries odd, n odd
    if (absd == static_cast<long>(n))
        return {Verdict3::Yes, "all-odd, all same sign"};
    if (absd == static_cast<long>(n) - 2) {
        // mirror so the majority sign is positive, rotate the minority last
        long minority = 0, minOthers = 0;
        bool first = true;
        int majority = d > 0 ? 1 : -1;
        for (long v : p.strands) {
            int s = v > 0 ? 1 : -1;
            if (s != majority) {
                minority = std::abs(v);
            } else {
                if (first || std::abs(v) < minOthers) minOthers = std::abs(v);
                first = false;
            }
        }
        if (minority < minOthers)
            return {Verdict3::Yes, "all-odd, one opposite strand smaller than the rest"};
        return {Verdict3::No, "all-odd, opposite strand not smaller than the rest"};
    }
    return {Verdict3::Unknown, "all-odd |d| <= n-4: open region"};
}

bool pretzelLinkIsSQP3(long p, long q, long r, PretzelOrientation orientation) {
    if (p < 2 || q < 2 || std::abs(r) < 2 || isOdd(p))
        throw std::invalid_argument("need p even, p, q >= 2, |r| >= 2");
    if (orientation == PretzelOrientation::B || orientation == PretzelOrientation::C)
        return false;  // these orientations never bound a quasipositive fibre
    int evens = (isOdd(p) ? 0 : 1) + (isOdd(q) ? 0 : 1) + (isOdd(r) ? 0 : 1);
    if (evens < 2) throw std::invalid_argument("parameters give a knot, not a link");
    if (orientation == PretzelOrientation::A && (isOdd(q) || isOdd(r)))
        throw std::invalid_argument("orientation (a) needs all entries even");
    if (orientation == PretzelOrientation::D && isOdd(r))
        throw std::invalid_argument("orientation (d) needs r even");
    if (r > 0) return orientation == PretzelOrientation::A && !isOdd(q) && !isOdd(r);
    if (orientation == PretzelOrientation::D) return true;
    return orientation == PretzelOrientation::A && -r < std::min(p, q);
}

int pretzelAllOddSignature(const PretzelParams& p) {
    const size_t n = p.strands.size();
    if (n < 3) throw std::invalid_argument("need at least 3 strands");
    for (size_t i = 0; i < n; ++i) {
        long v = p.strands[i];
        if (!isOdd(v) || std::abs(v) < 3)
            throw std::invalid_argument("signature formula needs odd entries >= 3");
        if (i + 1 < n ? v < 0 : v > 0)
            throw std::invalid_argument("signature formula needs the pattern (+,...,+,-)");
    }
    Rat sum(0);
    for (size_t i = 0; i + 1 < n; ++i) sum += Rat(1, p.strands[i]);
    Rat last(1, -p.strands[n - 1]);
    return static_cast<int>(n) - 2 + sgn(last - sum);
}

SymmetrizedForm pretzel3SymmetrizedForm(long p, long q, long r) {
    SymmetrizedForm out;
    out.matrix = {{Int(p + r), Int(r)}, {Int(r), Int(q + r)}};
    out.det = Int(p) * q + Int(q) * r + Int(r) * p;
    assert(out.det == out.matrix[0][0] * out.matrix[1][1] - out.matrix[0][1] * out.matrix[1][0]);
    Matrix<Rat> m(2, std::vector<Rat>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = Rat(out.matrix[i][j]);
    out.inertia = symmetricInertia(std::move(m));
    return out;
}

bool pretzelSigma2IsLspace(const std::vector<long>& pos, const std::vector<long>& neg) {
    const size_t n = pos.size(), r = neg.size();
    if (n < r || n + r < 3) throw std::invalid_argument("need |pos| >= |neg| and >= 3 strands");
    if (!std::is_sorted(pos.begin(), pos.end()))
        throw std::invalid_argument("pos entries must be sorted ascending");
    for (long v : pos)
        if (v < 2) throw std::invalid_argument("entries must be >= 2");
    for (long v : neg)
        if (v < 2) throw std::invalid_argument("entries must be >= 2");
    if (r == 0) return true;
    if (r >= 2) return false;
    long q = neg[0];
    if (q >= pos[0]) return true;
    return q == pos[0] - 1 && 2 * q + 1 >= pos[1];
}

Genus1Alexander pretzelGenus1Alexander(long p, long q, long r) {
    if (!isOdd(p) || !isOdd(q) || !isOdd(r))
        throw std::invalid_argument("genus-1 formula needs odd entries");
    Int s = Int(p) * q + Int(q) * r + Int(r) * p + 1;
    assert(s % 4 == 0);
    Genus1Alexander out;
    out.a = s / 4;
    out.delta = LaurentPoly::fromMap({{2, out.a}, {1, 1 - 2 * out.a}, {0, out.a}});
    return out;
}

int genus1NBound(const Int& a) {
    if (a <= 0) throw std::invalid_argument("NoCircleRoots");
    // the conjugate roots sit at x = 2 - 1/a; find the largest n with
    // x > 2cos(2pi/n), all comparisons exact
    Rat x = 2 - Rat(1, 1) / Rat(a);
    auto inside = [&](int n) {
        if (n == 2) return true;
        return CosineBoundary(1, n).compareTo(x) < 0;
    };
    double theta = std::acos(x.get_d() / 2);
    int guess = std::max(2, static_cast<int>(2 * M_PI / theta) - 2);
    while (guess > 2 && !inside(guess)) --guess;
    int n = guess;
    while (inside(n + 1)) ++n;
    return n;
}

TwoBridgeGenus1 genus1TwoBridge(long k, long l) {
    if (k < 1 || l == 0) throw std::invalid_argument("need k >= 1 and l != 0");
    TwoBridgeGenus1 out;
    Rat v(4 * k * l - 1, 2 * l);
    v.canonicalize();
    out.p = v.get_num();
    out.q = v.get_den();
    Int kl = Int(k) * l;
    out.delta = LaurentPoly::fromMap({{2, kl}, {1, 1 - 2 * kl}, {0, kl}});
    out.sigmaAbs = l > 0 ? 2 : 0;
    out.isSQP = l > 0;
    if (l < 0) out.lspaceForAllN = true;
    else out.nBound = genus1NBound(kl);
    return out;
}

std::vector<long> evenContinuedFraction(long p, long q) {
    if (p < 3 || q <= 1 || q >= p || isOdd(q) || !isOdd(p) || std::gcd(p, q) != 1)
        throw std::invalid_argument("need p odd, q even, 1 < q < p, coprime");
    std::vector<long> terms;
    Rat x(p, q);
    for (;;) {
        if (x.get_den() == 1) {
            long a = static_cast<long>(x.get_num().get_si());
            assert(a % 2 == 0);
            terms.push_back(a);
            break;
        }
        // nearest even integer; x is never an odd integer nor halfway between
        Rat half = x / 2 + Rat(1, 2);
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
        long a = 2 * fl.get_si();
        terms.push_back(a);
        x = Rat(1) / (x - a);
    }
    assert(terms.size() % 2 == 0);
    return terms;
}

LaurentPoly minkusAlexander(long p, long q) {
    if (p < 3 || !isOdd(p) || q <= 0 || q >= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("need p odd >= 3 and 0 < q < p coprime");
    if (!isOdd(q)) q = p - q;  // mirror image, same Alexander polynomial
    std::map<int, Int> coeffs;
    long s = 0;
    coeffs[0] += 1;  // j = 0 term
    for (long i = 1; i <= p - 1; ++i) {
        long eps = ((i * q / p) % 2 == 0) ? 1 : -1;
        s += eps;
        coeffs[static_cast<int>(s)] += (s % 2 == 0) ? 1 : -1;
    }
    return normalize(LaurentPoly::fromMap(coeffs)).poly;
}

LaurentPoly kkmAlexander(long k, long m) {
    if (k < 1 || m < 1) throw std::invalid_argument("need k, m >= 1");
    std::map<int, Int> coeffs;
    coeffs[0] = k;
    coeffs[static_cast<int>(2 * m)] = k;
    for (long i = 1; i <= 2 * m - 1; ++i)
        coeffs[static_cast<int>(i)] = (i % 2 == 0) ? Int(2 * k - 1) : Int(1 - 2 * k);
    return LaurentPoly::fromMap(coeffs);
}

RootLocation kkmRootLocationCheck(long k, long m) {
    LaurentPoly delta = kkmAlexander(k, m);
    CircleRootProfile profile = isolateCircleRoots(delta);
    RootLocation out;
    for (const auto& pr : profile.pairs) {
        if (pr.x.compareTo(Rat(-1)) < 0) out.hasRootIn23PiToPi = true;
        if (pr.x.compareTo(Rat(0)) < 0) out.hasRootInPi2ToPi = true;
    }
    return out;
}

Int chainLinkDet(const TangleChain& chain) {
    for (const auto& k : {chain.k1, chain.k2, chain.k3})
        if (k && *k < 1) throw std::invalid_argument("chain entries must be positive");
    std::vector<long> finite;
    for (const auto& k : {chain.k1, chain.k2, chain.k3})
        if (k) finite.push_back(*k);
    switch (finite.size()) {
        case 3: {
            Int k1(finite[0]), k2(finite[1]), k3(finite[2]);
            return 3 * (k1 * k2 + k2 * k3 + k3 * k1) - 4 * (k1 + k2 + k3) + 4;
        }
        case 2:
            return Int(3) * (finite[0] + finite[1]) - 4;
        case 1:
            return 3;  // the chain closes up to the (3,4) torus knot
        default:
            throw std::invalid_argument("chain needs at least one finite entry");
    }
}

namespace {

using Slot = std::optional<long>;

std::array<Slot, 3> slots(const TangleChain& c) { return {c.k1, c.k2, c.k3}; }

std::array<Slot, 3> rotate(const std::array<Slot, 3>& s, int r) {
    return {s[r % 3], s[(r + 1) % 3], s[(r + 2) % 3]};
}

}  // namespace

bool additiveTripleCheck(const TangleChain& l, const TangleChain& l0, const TangleChain& linf) {
    auto sl = slots(l), sl0 = slots(l0), slinf = slots(linf);
    bool matched = false;
    for (int r = 0; r < 3 && !matched; ++r) {
        auto a = rotate(sl, r), b = rotate(sl0, r);
        for (int rr = 0; rr < 3 && !matched; ++rr) {
            auto c = rotate(slinf, rr);
            for (int i = 0; i < 3; ++i) {
                if (!a[i] || !b[i] || *a[i] != *b[i] + 1) continue;
                bool othersEqual = true;
                for (int j = 0; j < 3; ++j)
                    if (j != i && a[j] != b[j]) othersEqual = false;
                if (!othersEqual) continue;
                // linf must be l0 with position i resolved to infinity, up to
                // the rotation rr; the two-infinity chain stands for T(3,4)
                std::array<Slot, 3> expect = b;
                expect[i] = std::nullopt;
                int expectInf = 0, haveInf = 0;
                for (int j = 0; j < 3; ++j) {
                    if (!expect[j]) ++expectInf;
                    if (!c[j]) ++haveInf;
                }
                if (expectInf >= 2) {
                    if (haveInf == 2) matched = true;  // both are T(3,4)
                } else if (c == expect) {
                    matched = true;
                }
                if (matched) break;
            }
        }
    }
    if (!matched) return false;
    Int d0 = chainLinkDet(l0), dinf = chainLinkDet(linf);
    if (d0 == 0 || dinf == 0) return false;
    return chainLinkDet(l) == d0 + dinf;
}

LaurentPoly torusAlexander(long p, long q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("need coprime p, q >= 2");
    Poly one = Poly::constant(1);
    Poly num = (Poly::monomial(static_cast<int>(p * q), 1) - one) * (Poly::monomial(1, 1) - one);
    Poly den = (Poly::monomial(static_cast<int>(p), 1) - one) *
               (Poly::monomial(static_cast<int>(q), 1) - one);
    return normalize(LaurentPoly(divExact(num, den), 0)).poly;
}

}  // namespace knotsig
