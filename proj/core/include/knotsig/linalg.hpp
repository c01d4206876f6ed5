#pragma once

#include <vector>

#include "knotsig/numberfield.hpp"
#include "knotsig/numeric.hpp"

namespace knotsig {

struct Inertia {
    int nPlus = 0, nZero = 0, nMinus = 0;
    int signature() const { return nPlus - nMinus; }
    int size() const { return nPlus + nZero + nMinus; }
    bool operator==(const Inertia& o) const {
        return nPlus == o.nPlus && nZero == o.nZero && nMinus == o.nMinus;
    }
};

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Inertia of a symmetric rational matrix by congruence diagonalization with
// full pivoting; zero-diagonal blocks are handled by the hyperbolic 2x2 step
// contributing (+1, -1).
Inertia symmetricInertia(Matrix<Rat> m);

// Inertia of a Hermitian matrix over the quadratic extension F[w]/(w^2 - d),
// where the base field carries a real embedding (w evaluates to a purely
// imaginary number). Pivot signs are decided exactly through `realField`.
Inertia hermitianInertia(const QuadraticExtension& ext, RealAlgebraicField& realField,
                         Matrix<QuadExtElem> h);

// Rank of a matrix over a quotient field.
int rankOverField(const QuotientField& f, Matrix<QuotientField::Elem> m);

// Determinant of an integer matrix (fraction-free Bareiss elimination).
Int determinant(Matrix<Int> m);

}  // namespace knotsig
