#include "knotsig/poly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace knotsig {

std::string toString(const Int& v) { return v.get_str(); }
std::string toString(const Rat& v) { return v.get_str(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Int v) {
    Poly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(int deg, Int coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(coeff);
    }
    return p;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (isZero() || o.isZero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Int& v) const {
    Poly r(*this);
    for (auto& x : r.c_) x *= v;
    r.trim();
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int Poly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatInterval Poly::eval(const RatInterval& x) const {
    RatInterval acc(Rat(0), Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return Poly(std::move(r));
}

Int Poly::content() const {
    Int g(0);
    for (const auto& v : c_) g = knotsig::gcd(g, v);
    if (!c_.empty() && sgn(c_.back()) < 0) g = -g;
    return g;
}

Poly Poly::primitivePart() const {
    if (isZero()) return {};
    Int g = content();
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (sgn(a) > 0 ? "+" : "-");
        else if (sgn(a) < 0) os << "-";
        Int m = knotsig::abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly divExact(const Poly& a, const Poly& b) {
    if (b.isZero()) throw std::invalid_argument("division by zero polynomial");
    if (a.isZero()) return {};
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        Int top = rem[i + b.degree()];
        if (top == 0) continue;
        Int qi = top / b.leading();
        if (qi * b.leading() != top)
            throw std::invalid_argument("inexact polynomial division");
        q[i] = qi;
        for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= qi * b.coeff(j);
    }
    for (const auto& v : rem)
        if (v != 0) throw std::invalid_argument("inexact polynomial division");
    return Poly(std::move(q));
}

std::pair<Poly, Poly> pseudoDivide(const Poly& a, const Poly& b) {
    assert(!b.isZero());
    if (a.degree() < b.degree()) return {Poly{}, a};
    const Int& lb = b.leading();
    Poly q, r = a;
    int e = a.degree() - b.degree() + 1;
    while (!r.isZero() && r.degree() >= b.degree()) {
        Poly s = Poly::monomial(r.degree() - b.degree(), r.leading());
        q = q * lb + s;
        r = r * lb - s * b;
        --e;
    }
    Int scale = pow(lb, static_cast<unsigned long>(e));
    return {q * scale, r * scale};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly f = a.primitivePart(), g = b.primitivePart();
    if (f.isZero()) return g;
    if (g.isZero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.isZero()) {
        Poly r = pseudoDivide(f, g).second;
        f = g;
        g = r.isZero() ? Poly{} : r.primitivePart();
    }
    return f;
}

std::vector<std::pair<Poly, int>> squareFreeDecomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.isZero() || p.degree() == 0) return out;
    // Yun's algorithm on the primitive part
    Poly f = p.primitivePart();
    Poly d = f.derivative();
    Poly a = gcd(f, d);
    Poly b = divExact(f, a);
    Poly c = divExact(d, a);
    int mult = 1;
    while (b.degree() > 0) {
        Poly w = gcd(b, c - b.derivative());
        if (w.degree() > 0) out.emplace_back(w.primitivePart(), mult);
        Poly bn = divExact(b, w);
        c = divExact(c - b.derivative(), w);
        b = std::move(bn);
        ++mult;
    }
    return out;
}

}  // namespace knotsig
