#pragma once

// Monomialization of polynomials over Q under a monomial valuation whose
// weights are rationally independent, one per variable.  Because the rank
// is maximal, the term of minimum value is unique, and a finite run of
// Perron substitutions makes it divide every other term, leaving a
// monomial times a unit.

#include <map>
#include <utility>
#include <vector>

#include "valfactor/perron.hpp"
#include "valfactor/values.hpp"

namespace valfactor {

// Finitely many terms  coef * x^exp  with distinct nonnegative exponent
// vectors and nonzero coefficients; the zero polynomial has no terms.
struct Polynomial {
    int n = 0;
    std::map<ExponentVec, mpq_class> terms;

    bool operator==(const Polynomial&) const = default;
};

// Accumulates like terms and drops exact cancellations.
Polynomial make_polynomial(int n, const std::vector<std::pair<ExponentVec, mpq_class>>& terms);

bool poly_is_zero(const Polynomial& f);

// Value of f and the exponent attaining it.  The minimizer is unique:
// two distinct exponents sharing a value would be a rational dependence
// among the weights.
std::pair<Value, ExponentVec> poly_value(const Polynomial& f, const std::vector<Value>& tau);

// x_i = prod_j x'_j^{A(i,j)} sends each term exponent v to A^T v.
Polynomial substitute(const Polynomial& f, const IntMat& A);
Polynomial substitute(const Polynomial& f, const PerronMatrix& A);

struct MonomialForm {
    PerronMatrix transform;
    ExponentVec monomial; // a, with substitute(f, transform) = x^a * unit
    Polynomial unit;      // nonzero constant term
};

// Perron steps are applied one at a time until the minimum-value exponent
// divides every term, then the monomial is factored out.
MonomialForm monomialize(const Polynomial& f, const std::vector<Value>& tau,
                         long cap = default_cap);

} // namespace valfactor
