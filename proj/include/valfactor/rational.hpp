#pragma once

// GMP-backed exact scalars, plus the few helpers the rest of the library
// needs: strict "p/q" text form and floor square roots.

#include <gmpxx.h>

#include <string>

namespace valfactor {

// floor(sqrt(x)); requires x >= 0.
inline mpz_class isqrt(const mpz_class& x) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// Canonical text form: "p/q" with q positive and gcd(p, q) = 1, always with
// the slash ("3" prints as "3/1").
std::string rat_to_string(const mpq_class& q);

// Parses exactly the forms accepted by the document schemas: an optional
// minus sign, a decimal numerator, a slash, a positive decimal denominator.
// The result is reduced to lowest terms.  Throws input_error otherwise.
mpq_class rat_from_string(const std::string& s);

} // namespace valfactor
