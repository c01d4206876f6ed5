#include "knotsig/laurent.hpp"

#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotsig {

LaurentPoly::LaurentPoly(const Poly& p, int lowExp) : low_(lowExp), c_(p.coeffs()) {
    while (!c_.empty() && c_.front() == 0) {
        c_.erase(c_.begin());
        ++low_;
    }
    if (c_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::fromMap(const std::map<int, Int>& coeffs) {
    LaurentPoly p;
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto& [e, v] : coeffs) {
        if (v == 0) continue;
        if (!any) lo = hi = e;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        any = true;
    }
    if (!any) return p;
    p.low_ = lo;
    p.c_.assign(hi - lo + 1, Int(0));
    for (const auto& [e, v] : coeffs)
        if (v != 0) p.c_[e - lo] = v;
    return p;
}

LaurentPoly LaurentPoly::constant(Int v) { return monomial(0, std::move(v)); }

LaurentPoly LaurentPoly::monomial(int exp, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) {
        p.low_ = exp;
        p.c_.push_back(std::move(coeff));
    }
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    int i = exp - low_;
    if (isZero() || i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

std::map<int, Int> LaurentPoly::toMap() const {
    std::map<int, Int> m;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) m[low_ + static_cast<int>(i)] = c_[i];
    return m;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (isZero()) return o;
    if (o.isZero()) return *this;
    int lo = std::min(low_, o.low_);
    int hi = std::max(highExp(), o.highExp());
    std::vector<Int> r(hi - lo + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[low_ - lo + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[o.low_ - lo + i] += o.c_[i];
    return LaurentPoly(Poly(std::move(r)), lo);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (isZero() || o.isZero()) return {};
    return LaurentPoly(polyPart() * o.polyPart(), low_ + o.low_);
}

LaurentPoly LaurentPoly::operator*(const Int& v) const {
    if (v == 0) return {};
    LaurentPoly r(*this);
    for (auto& x : r.c_) x *= v;
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    if (isZero()) return {};
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return LaurentPoly(Poly(std::move(r)), -highExp());
}

Rat LaurentPoly::eval(const Rat& x) const {
    assert(x != 0);
    Rat v = polyPart().eval(x);
    if (low_ >= 0) {
        for (int i = 0; i < low_; ++i) v *= x;
    } else {
        for (int i = 0; i < -low_; ++i) v /= x;
    }
    return v;
}

Int LaurentPoly::evalAtOne() const {
    Int s(0);
    for (const auto& v : c_) s += v;
    return s;
}

std::string LaurentPoly::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        int e = low_ + i;
        if (!first) os << (sgn(a) > 0 ? "+" : "-");
        else if (sgn(a) < 0) os << "-";
        Int m = knotsig::abs(a);
        if (m != 1 || e == 0) os << m.get_str();
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.isZero()) throw std::invalid_argument("division by zero polynomial");
    if (a.isZero()) return {};
    Poly q = divExact(a.polyPart(), b.polyPart());
    return LaurentPoly(q, a.lowExp() - b.lowExp());
}

Normalized normalize(const LaurentPoly& p) {
    if (p.isZero()) throw std::invalid_argument("ZeroPolynomial");
    Poly q = p.polyPart();
    if (sgn(q.leading()) < 0) q = -q;
    LaurentPoly n(q, 0);
    // palindromic type: compare with the reversed coefficient sequence
    PalindromeType type = PalindromeType::None;
    bool plus = true, minus = true;
    int d = q.degree();
    for (int i = 0; i <= d; ++i) {
        if (q.coeff(i) != q.coeff(d - i)) plus = false;
        if (q.coeff(i) != -q.coeff(d - i)) minus = false;
    }
    if (plus) type = PalindromeType::Plus;
    else if (minus) type = PalindromeType::Minus;
    return {n, type};
}

unsigned long eulerPhi(unsigned long k) {
    unsigned long result = k;
    for (unsigned long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

LaurentPoly cyclotomic(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    // Phi_d for every divisor d of k, by division of t^d - 1
    std::map<int, Poly> phi;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        Poly num = Poly::monomial(d, 1) - Poly::constant(1);
        for (const auto& [e, f] : phi)
            if (d % e == 0) num = divExact(num, f);
        phi[d] = num;
    }
    return LaurentPoly(phi[k], 0);
}

CyclotomicFactorization cyclotomicFactorization(const LaurentPoly& p) {
    CyclotomicFactorization out;
    LaurentPoly cur = normalize(p).poly;
    for (int k = 1; cur.span() >= 1; ++k) {
        if (eulerPhi(k) > static_cast<unsigned long>(cur.span())) {
            // phi is not monotone, but phi(m) >= sqrt(m/2): past this k no
            // candidate can fit the remaining degree
            if (2 * static_cast<unsigned long>(cur.span()) * static_cast<unsigned long>(cur.span())
                < static_cast<unsigned long>(k))
                break;
            continue;
        }
        LaurentPoly f = cyclotomic(k);
        for (;;) {
            Poly q, r;
            std::tie(q, r) = pseudoDivide(cur.polyPart(), f.polyPart());
            if (!r.isZero()) break;  // f monic, so pseudo quotient is the true one
            out.exponents[k] += 1;
            cur = LaurentPoly(q, 0);
        }
    }
    out.remainder = cur;
    return out;
}

bool isCyclotomicProduct(const LaurentPoly& p) {
    if (p.isZero()) return false;
    auto f = cyclotomicFactorization(p);
    return f.remainder == LaurentPoly::constant(1);
}

std::optional<Rat> RootOfUnityValue::asRational() const {
    if (isZero()) return Rat(0);
    if (order <= 2 && residue.size() == 1) return residue[0];
    return std::nullopt;
}

namespace {

// residues of t^e mod Phi_n, e in [0, n): t^n == 1 mod Phi_n
std::vector<Rat> reduceMod(const Poly& modulus, std::vector<Rat> v) {
    int d = modulus.degree();
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        Rat top = v[i];
        if (top == 0) continue;
        v[i] = 0;
        for (int j = 0; j < d; ++j) v[i - d + j] -= top * Rat(modulus.coeff(j));
    }
    v.resize(d);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

RootOfUnityValue evalAtRootOfUnity(const LaurentPoly& p, int n, int j) {
    if (n < 1 || j < 0 || j >= n) throw std::invalid_argument("bad root of unity index");
    int g = std::gcd(j, n);
    int np = (j == 0) ? 1 : n / g;
    int jp = (j == 0) ? 0 : j / g;
    RootOfUnityValue out;
    out.order = np;
    if (p.isZero()) return out;
    Poly modulus = cyclotomic(np).polyPart();
    std::vector<Rat> acc(np > 1 ? np : 1, Rat(0));
    for (const auto& [e, c] : p.toMap()) {
        long ee = (static_cast<long>(e) * jp) % np;
        if (ee < 0) ee += np;
        acc[static_cast<size_t>(ee)] += Rat(c);
    }
    out.residue = reduceMod(modulus, std::move(acc));
    return out;
}

Int resultant(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return 0;
    int m = a.degree(), n = b.degree();
    if (m == 0) return pow(a.leading(), static_cast<unsigned long>(n));
    if (n == 0) return pow(b.leading(), static_cast<unsigned long>(m));
    int sz = m + n;
    std::vector<std::vector<Int>> s(sz, std::vector<Int>(sz, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = a.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(n - k);
    // Bareiss fraction-free determinant
    Int det(1), prev(1);
    int sign = 1;
    for (int col = 0; col < sz; ++col) {
        int piv = -1;
        for (int r = col; r < sz; ++r)
            if (s[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(s[piv], s[col]); sign = -sign; }
        for (int r = col + 1; r < sz; ++r)
            for (int cc = col + 1; cc < sz; ++cc) {
                s[r][cc] = (s[r][cc] * s[col][col] - s[r][col] * s[col][cc]) / prev;
            }
        prev = s[col][col];
    }
    det = s[sz - 1][sz - 1];
    return sign > 0 ? det : Int(-det);
}

std::optional<Int> resultantWithCyclotomicTower(const LaurentPoly& p, int n) {
    if (n < 2) throw std::invalid_argument("cover order must be >= 2");
    if (p.isZero()) return std::nullopt;
    Poly pp = p.polyPart();
    Poly psi = divExact(Poly::monomial(n, 1) - Poly::constant(1),
                        Poly::monomial(1, 1) - Poly::constant(1));
    if (gcd(pp, psi).degree() > 0) return std::nullopt;
    // psi monic, so |Res(p, psi)| = prod over psi's roots |p(zeta)|
    return abs(resultant(pp, psi));
}

Poly chebyshevReduce(const LaurentPoly& p) {
    Normalized n = normalize(p);
    if (n.type != PalindromeType::Plus || n.poly.span() % 2 != 0)
        throw std::invalid_argument("chebyshevReduce needs a +-palindromic polynomial of even degree");
    int d = n.poly.span() / 2;
    Poly q = n.poly.polyPart();
    // V_j(x) = t^j + t^-j under x = t + 1/t: V_0 = 2, V_1 = x, V_{j+1} = x V_j - V_{j-1}
    Poly result = Poly::constant(q.coeff(d));
    Poly vPrev = Poly::constant(2), vCur = Poly::monomial(1, 1);
    for (int k = 1; k <= d; ++k) {
        result = result + vCur * q.coeff(d + k);
        Poly vNext = Poly::monomial(1, 1) * vCur - vPrev;
        vPrev = std::move(vCur);
        vCur = std::move(vNext);
    }
    return result;
}

LaurentPoly parseLaurent(const std::string& text) {
    std::map<int, Int> coeffs;
    size_t i = 0;
    auto skipWs = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " + msg);
    };
    skipWs();
    if (i == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skipWs();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skipWs();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        skipWs();
        int exp = 0;
        if (i < text.size() && (text[i] == 't' || text[i] == 'T')) {
            ++i;
            exp = 1;
            skipWs();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skipWs();
                int esign = 1;
                if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                    if (text[i] == '-') esign = -1;
                    ++i;
                }
                std::string edigits;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) edigits += text[i++];
                if (edigits.empty()) fail("expected exponent digits");
                exp = esign * std::stoi(edigits);
            }
        } else if (digits.empty()) {
            fail("expected coefficient or 't'");
        }
        coeffs[exp] += sign * coeff;
    }
    return LaurentPoly::fromMap(coeffs);
}

}  // namespace knotsig
