#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/numeric.hpp"
#include "knotsig/poly.hpp"

namespace knotsig {

// Laurent polynomial over Z with finite support. Stored as the lowest exponent
// plus a dense coefficient vector whose first and last entries are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Poly& p, int lowExp = 0);
    static LaurentPoly fromMap(const std::map<int, Int>& coeffs);
    static LaurentPoly constant(Int v);
    static LaurentPoly monomial(int exp, Int coeff = 1);

    bool isZero() const { return c_.empty(); }
    int lowExp() const { return low_; }
    int highExp() const { return low_ + static_cast<int>(c_.size()) - 1; }
    int span() const { return isZero() ? -1 : highExp() - lowExp(); }  // degree after normalization
    Int coeff(int exp) const;
    std::map<int, Int> toMap() const;
    // coefficient vector shifted to lowest exponent 0
    Poly polyPart() const { return Poly(c_); }

    bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Int& v) const;

    // p(1/t)
    LaurentPoly mirror() const;
    Rat eval(const Rat& x) const;  // x != 0
    Int evalAtOne() const;

    std::string str() const;

private:
    friend LaurentPoly divExact(const LaurentPoly&, const LaurentPoly&);
    int low_ = 0;
    std::vector<Int> c_;
};

LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b);

enum class PalindromeType { Plus, Minus, None };

struct Normalized {
    LaurentPoly poly;    // lowest exponent 0, positive leading coefficient
    PalindromeType type;
};

// Unique associate with lowest exponent 0 and positive leading coefficient.
// Throws std::invalid_argument("ZeroPolynomial") on the zero polynomial.
Normalized normalize(const LaurentPoly& p);

unsigned long eulerPhi(unsigned long k);

// k-th cyclotomic polynomial, k >= 1.
LaurentPoly cyclotomic(int k);

struct CyclotomicFactorization {
    std::map<int, int> exponents;  // k -> multiplicity of cyclotomic factor k
    LaurentPoly remainder;         // cyclotomic-free cofactor of normalize(p)
};

// Trial division of normalize(p) by every cyclotomic with phi(k) <= remaining degree.
CyclotomicFactorization cyclotomicFactorization(const LaurentPoly& p);

// True iff normalize(p) is exactly a product of cyclotomic polynomials
// (monic, remainder 1).
bool isCyclotomicProduct(const LaurentPoly& p);

// Exact image of p at the root of unity zeta_n^j, represented as the residue
// of p(t^j') in Q[t]/Phi_{n'}(t) with n' = n/gcd(j,n).
struct RootOfUnityValue {
    int order = 1;                // n'
    std::vector<Rat> residue;     // degree < phi(n'); empty means zero
    bool isZero() const { return residue.empty(); }
    // the value as a rational when order <= 2, otherwise nullopt
    std::optional<Rat> asRational() const;
};

RootOfUnityValue evalAtRootOfUnity(const LaurentPoly& p, int n, int j);

// prod_{j=1}^{n-1} |p(zeta_n^j)| computed exactly; nullopt encodes INFINITE
// (some n-th root of unity other than 1 is a root of p).
std::optional<Int> resultantWithCyclotomicTower(const LaurentPoly& p, int n);

// |Res(a, b)| over Z via Sylvester matrix and fraction-free elimination.
Int resultant(const Poly& a, const Poly& b);

// For normalize(p) +-palindromic of even degree 2d: the unique integer q of
// degree d with p(t) = t^d q(t + 1/t). Minus-palindromic inputs must have
// their (t-1) factors stripped first.
Poly chebyshevReduce(const LaurentPoly& p);

// Human-readable form, e.g. "2t^2-3t+2" or "t^-1+1". Throws on parse errors.
LaurentPoly parseLaurent(const std::string& text);

}  // namespace knotsig
