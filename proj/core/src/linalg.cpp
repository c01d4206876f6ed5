#include "knotsig/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace knotsig {

Inertia symmetricInertia(Matrix<Rat> m) {
    const size_t n = m.size();
    for (const auto& row : m) assert(row.size() == n);
    std::vector<size_t> active(n);
    for (size_t i = 0; i < n; ++i) active[i] = i;
    Inertia res;
    while (!active.empty()) {
        size_t piv = active.size();
        for (size_t a = 0; a < active.size(); ++a)
            if (m[active[a]][active[a]] != 0) { piv = a; break; }
        if (piv < active.size()) {
            size_t i = active[piv];
            const Rat p = m[i][i];
            (sgn(p) > 0 ? res.nPlus : res.nMinus) += 1;
            active.erase(active.begin() + piv);
            for (size_t a : active) {
                if (m[a][i] == 0) continue;
                Rat f = m[a][i] / p;
                for (size_t b : active) m[a][b] -= f * m[i][b];
            }
            continue;
        }
        // all active diagonal entries vanish; look for a hyperbolic pair
        size_t oi = active.size(), oj = active.size();
        for (size_t a = 0; a < active.size() && oi == active.size(); ++a)
            for (size_t b = a + 1; b < active.size(); ++b)
                if (m[active[a]][active[b]] != 0) { oi = a; oj = b; break; }
        if (oi == active.size()) {
            res.nZero += static_cast<int>(active.size());
            break;
        }
        size_t i = active[oi], j = active[oj];
        const Rat b = m[i][j];
        res.nPlus += 1;
        res.nMinus += 1;
        active.erase(active.begin() + oj);
        active.erase(active.begin() + oi);
        for (size_t k : active) {
            Rat fi = m[k][i] / b, fj = m[k][j] / b;
            if (fi == 0 && fj == 0) continue;
            for (size_t l : active) m[k][l] -= fj * m[i][l] + fi * m[j][l];
        }
    }
    return res;
}

Inertia hermitianInertia(const QuadraticExtension& ext, RealAlgebraicField& realField,
                         Matrix<QuadExtElem> m) {
    const QuotientField& f = ext.base();
    const size_t n = m.size();
    std::vector<size_t> active(n);
    for (size_t i = 0; i < n; ++i) active[i] = i;
    Inertia res;
    while (!active.empty()) {
        size_t piv = active.size();
        for (size_t a = 0; a < active.size(); ++a) {
            const QuadExtElem& d = m[active[a]][active[a]];
            assert(f.isZero(d.im));
            if (!f.isZero(d.re)) { piv = a; break; }
        }
        if (piv < active.size()) {
            size_t i = active[piv];
            QuotientField::Elem p = m[i][i].re;
            (realField.sign(p) > 0 ? res.nPlus : res.nMinus) += 1;
            active.erase(active.begin() + piv);
            QuadExtElem pinv = ext.fromBase(f.inverse(p));
            for (size_t a : active) {
                if (ext.isZero(m[a][i])) continue;
                QuadExtElem fac = ext.mul(m[a][i], pinv);
                for (size_t b : active)
                    m[a][b] = ext.sub(m[a][b], ext.mul(fac, m[i][b]));
            }
            continue;
        }
        size_t oi = active.size(), oj = active.size();
        for (size_t a = 0; a < active.size() && oi == active.size(); ++a)
            for (size_t b = a + 1; b < active.size(); ++b)
                if (!ext.isZero(m[active[a]][active[b]])) { oi = a; oj = b; break; }
        if (oi == active.size()) {
            res.nZero += static_cast<int>(active.size());
            break;
        }
        size_t i = active[oi], j = active[oj];
        QuadExtElem b = m[i][j];
        QuadExtElem binv = ext.inverse(b);
        QuadExtElem bconjInv = ext.inverse(ext.conj(b));
        res.nPlus += 1;
        res.nMinus += 1;
        active.erase(active.begin() + oj);
        active.erase(active.begin() + oi);
        for (size_t k : active) {
            QuadExtElem fj = ext.mul(m[k][j], binv);        // pairs with row i
            QuadExtElem fi = ext.mul(m[k][i], bconjInv);    // pairs with row j
            for (size_t l : active) {
                QuadExtElem t = ext.add(ext.mul(fj, m[i][l]), ext.mul(fi, m[j][l]));
                m[k][l] = ext.sub(m[k][l], t);
            }
        }
    }
    return res;
}

int rankOverField(const QuotientField& f, Matrix<QuotientField::Elem> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!f.isZero(m[r][c])) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        QuotientField::Elem inv = f.inverse(m[rank][c]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (f.isZero(m[r][c])) continue;
            QuotientField::Elem fac = f.mul(m[r][c], inv);
            for (size_t cc = c; cc < cols; ++cc)
                m[r][cc] = f.sub(m[r][cc], f.mul(fac, m[rank][cc]));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

Int determinant(Matrix<Int> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev(1);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r)
            for (int c = col + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
        prev = m[col][col];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace knotsig
