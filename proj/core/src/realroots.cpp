#include "knotsig/realroots.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace knotsig {

namespace {

// divide by |content|, keeping the sign of the polynomial
Poly posPrimitive(const Poly& p) {
    if (p.isZero()) return {};
    Poly pp = p.primitivePart();  // positive leading coefficient
    return sgn(p.leading()) < 0 ? -pp : pp;
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
    chain_.push_back(p.primitivePart());
    if (chain_.front().degree() < 1) return;
    chain_.push_back(posPrimitive(chain_.front().derivative()));
    while (chain_.back().degree() > 0) {
        const Poly& a = chain_[chain_.size() - 2];
        const Poly& b = chain_.back();
        Poly r = pseudoDivide(a, b).second;
        if (r.isZero()) break;
        // pseudoDivide scales by lc(b)^(dega-degb+1); a negative odd scale
        // would flip the remainder's sign and break the Sturm pattern
        if (sgn(b.leading()) < 0 && (a.degree() - b.degree() + 1) % 2 != 0) r = -r;
        chain_.push_back(posPrimitive(-r));
    }
}

int SturmChain::variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& f : chain_) {
        int s = sgn(f.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::countRoots(const Rat& a, const Rat& b) const {
    assert(a < b);
    return variations(a) - variations(b);
}

int SturmChain::countRootsOpen(const Rat& a, const Rat& b) const {
    int n = countRoots(a, b);
    if (poly().eval(b) == 0) --n;
    return n;
}

void IsolatedRoot::refine() {
    if (isExact()) return;
    Rat m = iv.mid();
    int sm = sgn(p.eval(m));
    if (sm == 0) {
        iv = {m, m};
        return;
    }
    if (sgn(p.eval(iv.lo)) != sm) iv.hi = m;
    else iv.lo = m;
}

void IsolatedRoot::refineBelow(const Rat& width) {
    while (!isExact() && iv.width() >= width) refine();
}

int IsolatedRoot::compareTo(const Rat& v) const {
    if (iv.contains(v) && p.eval(v) == 0) return 0;
    IsolatedRoot copy = *this;
    while (copy.iv.contains(v) && !copy.isExact()) copy.refine();
    if (copy.isExact()) return copy.iv.lo < v ? -1 : (copy.iv.lo == v ? 0 : 1);
    return copy.iv.hi < v ? -1 : 1;
}

namespace {

void isolateRec(const Poly& p, const SturmChain& chain, const Rat& a, const Rat& b,
                std::vector<IsolatedRoot>& out) {
    int n = chain.countRootsOpen(a, b);
    if (n == 0) return;
    if (n == 1 && sgn(p.eval(a)) != 0 && sgn(p.eval(b)) != 0) {
        out.push_back({p, {a, b}});
        return;
    }
    Rat m = (a + b) / 2;
    if (p.eval(m) == 0) out.push_back({p, {m, m}});
    isolateRec(p, chain, a, m, out);
    isolateRec(p, chain, m, b, out);
}

}  // namespace

std::vector<IsolatedRoot> isolateRoots(const Poly& p, const Rat& lo, const Rat& hi) {
    std::vector<IsolatedRoot> out;
    if (p.degree() < 1 || lo >= hi) return out;
    SturmChain chain(p);
    isolateRec(p, chain, lo, hi, out);
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
        return x.iv.lo < y.iv.lo || (x.iv.lo == y.iv.lo && x.iv.hi < y.iv.hi);
    });
    // neighbouring isolators may share a bisection endpoint; shrink until the
    // closed intervals are pairwise disjoint
    for (bool again = true; again;) {
        again = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            if (!out[i].iv.disjointFrom(out[i + 1].iv)) {
                out[i].refine();
                out[i + 1].refine();
                again = true;
            }
        }
    }
    return out;
}

int compareRoots(const IsolatedRoot& a, const IsolatedRoot& b) {
    if (a.isExact()) return -b.compareTo(a.iv.lo);
    if (b.isExact()) return a.compareTo(b.iv.lo);
    IsolatedRoot x = a, y = b;
    Rat l = std::max(x.iv.lo, y.iv.lo), h = std::min(x.iv.hi, y.iv.hi);
    if (l < h) {
        // equality test: a common root inside the overlap is the unique root
        // of both isolators
        Poly g = gcd(x.p, y.p);
        if (g.degree() > 0 && SturmChain(g).countRootsOpen(l, h) > 0) return 0;
    }
    while (!x.iv.disjointFrom(y.iv)) {
        x.refine();
        y.refine();
    }
    return x.iv.hi < y.iv.lo ? -1 : 1;
}

Rat rootBound(const Poly& p) {
    assert(!p.isZero());
    Rat best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = abs(Rat(p.coeff(i)) / Rat(p.leading()));
        if (v > best) best = v;
    }
    return best + 1;
}

}  // namespace knotsig
