#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotsig/numeric.hpp"

namespace knotsig {

// Dense polynomial over Z, coefficient of x^i at index i. The zero polynomial
// has an empty coefficient vector; otherwise the top coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Int v);
    static Poly monomial(int deg, Int coeff = 1);

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Int(0) : c_[i];
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& v) const;

    Rat eval(const Rat& x) const;
    Int eval(const Int& x) const;
    RatInterval eval(const RatInterval& x) const;

    Poly derivative() const;
    Int content() const;          // gcd of coefficients, sign of leading coeff
    Poly primitivePart() const;   // *this / content(); leading coeff > 0

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Quotient of exact division; aborts if the division leaves a remainder.
Poly divExact(const Poly& a, const Poly& b);
// Quotient/remainder over Q scaled to stay in Z: returns (q, r) with
// lc(b)^(deg a - deg b + 1) * a = q*b + r and deg r < deg b.
std::pair<Poly, Poly> pseudoDivide(const Poly& a, const Poly& b);
// Primitive gcd over Z, leading coefficient positive.
Poly gcd(const Poly& a, const Poly& b);

// Square-free decomposition (Yun): returns pairs (factor, multiplicity) with
// product over factor^multiplicity = primitivePart(p), factors pairwise coprime
// and square-free. Constant factors are dropped.
std::vector<std::pair<Poly, int>> squareFreeDecomposition(const Poly& p);

}  // namespace knotsig
