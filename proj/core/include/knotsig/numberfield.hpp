#pragma once

#include <vector>

#include "knotsig/poly.hpp"
#include "knotsig/realroots.hpp"

namespace knotsig {

// Arithmetic in Q[t]/(m) for a monic integer polynomial m, assumed irreducible
// (inverses fail loudly otherwise). Elements are coefficient vectors of fixed
// size deg(m).
class QuotientField {
public:
    using Elem = std::vector<Rat>;

    explicit QuotientField(Poly monicModulus);

    int degree() const { return modulus_.degree(); }
    const Poly& modulus() const { return modulus_; }

    Elem zero() const { return Elem(degree(), Rat(0)); }
    Elem one() const { return fromRat(Rat(1)); }
    Elem fromRat(const Rat& v) const;
    Elem fromIntPoly(const Poly& p) const;
    // t^e mod m, any integer e, assuming t^n == 1 mod m (cyclotomic modulus of order n)
    Elem rootOfUnityPower(long e, int n) const;

    bool isZero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mulRat(const Elem& a, const Rat& v) const;
    // extended Euclid; throws std::domain_error if a is not invertible
    Elem inverse(const Elem& a) const;

private:
    Elem reduce(std::vector<Rat> v) const;
    Poly modulus_;
};

// A real embedding of a quotient field: the distinguished root of the modulus.
// Signs of (real values of) field elements are decided exactly: the zero test
// is coefficient-wise, nonzero values separate from 0 under interval refinement.
class RealAlgebraicField {
public:
    using Elem = QuotientField::Elem;

    RealAlgebraicField(Poly monicModulus, IsolatedRoot root);

    const QuotientField& field() const { return f_; }
    const IsolatedRoot& root() const { return root_; }

    int sign(const Elem& a);  // refines the cached root interval as needed
    RatInterval enclose(const Elem& a, const Rat& maxWidth);

private:
    QuotientField f_;
    IsolatedRoot root_;
};

// Elements a + w*b of the quadratic extension F[w]/(w^2 - d). With d evaluating
// to a negative real this is the complex model used for Hermitian forms over
// cyclotomic fields; conjugation flips the sign of b.
struct QuadExtElem {
    QuotientField::Elem re, im;
};

class QuadraticExtension {
public:
    explicit QuadraticExtension(const QuotientField& base, QuotientField::Elem d)
        : f_(base), d_(std::move(d)) {}

    const QuotientField& base() const { return f_; }

    QuadExtElem zero() const { return {f_.zero(), f_.zero()}; }
    QuadExtElem fromBase(QuotientField::Elem a) const { return {std::move(a), f_.zero()}; }
    bool isZero(const QuadExtElem& a) const { return f_.isZero(a.re) && f_.isZero(a.im); }
    QuadExtElem conj(const QuadExtElem& a) const { return {a.re, f_.neg(a.im)}; }
    QuadExtElem neg(const QuadExtElem& a) const { return {f_.neg(a.re), f_.neg(a.im)}; }
    QuadExtElem add(const QuadExtElem& a, const QuadExtElem& b) const {
        return {f_.add(a.re, b.re), f_.add(a.im, b.im)};
    }
    QuadExtElem sub(const QuadExtElem& a, const QuadExtElem& b) const {
        return {f_.sub(a.re, b.re), f_.sub(a.im, b.im)};
    }
    QuadExtElem mul(const QuadExtElem& a, const QuadExtElem& b) const {
        return {f_.add(f_.mul(a.re, b.re), f_.mul(d_, f_.mul(a.im, b.im))),
                f_.add(f_.mul(a.re, b.im), f_.mul(a.im, b.re))};
    }
    // a * conj(a), an element of the base field
    QuotientField::Elem normSq(const QuadExtElem& a) const {
        return f_.sub(f_.mul(a.re, a.re), f_.mul(d_, f_.mul(a.im, a.im)));
    }
    QuadExtElem inverse(const QuadExtElem& a) const {
        QuotientField::Elem n = f_.inverse(normSq(a));
        return {f_.mul(a.re, n), f_.mul(f_.neg(a.im), n)};
    }

private:
    const QuotientField& f_;
    QuotientField::Elem d_;
};

}  // namespace knotsig
