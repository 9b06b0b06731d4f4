#pragma once

// Multidimensional continued fraction steps on a vector of positive,
// rationally independent values; the unimodular matrices they accumulate;
// and the searches built on them: making one monomial divide another,
// clearing a single Laurent monomial to nonnegative exponents, and turning
// one rational dependence into a unimodular substitution matrix.

#include <vector>

#include "valfactor/matrix.hpp"
#include "valfactor/values.hpp"

namespace valfactor {

inline constexpr long default_cap = 10000;

using ExponentVec = std::vector<mpz_class>;

// One step on tau = (tau_1, ..., tau_s): digits a_j = floor(tau_j / tau_1)
// for j = 2..s, successor vector
//   tau' = (tau_2 - a_2 tau_1, ..., tau_s - a_s tau_1, tau_1),
// and the matrix P with rows (e_s; e_{j-1} + a_j e_s) satisfying
// tau = P * tau'.  All entries of tau' are again positive.
struct PerronStep {
    std::vector<mpz_class> digits; // a_2 .. a_s
    IntMat P;
    std::vector<Value> tau_next;
};

PerronStep perron_step(const std::vector<Value>& tau);

// A = P(0) * P(1) * ... * P(h-1) for h consecutive steps.  Invariants:
// entries nonnegative, det A = (-1)^(h(s-1)), and tau(0) = A * tau(h).
struct PerronMatrix {
    int dim = 0;
    long steps = 0;
    IntMat A;
};

struct PerronRun {
    PerronMatrix mat;
    std::vector<Value> tau_h;
    std::vector<std::vector<mpz_class>> digits; // per step, a_2 .. a_s
};

PerronRun perron_accumulate(const std::vector<Value>& tau, long h);

// Steps once at a time until the accumulated A satisfies
// A^T v1 <= A^T v2 componentwise; under the substitution x^v -> x'^(A^T v)
// this makes the first monomial divide the second.  Requires
// dot(v1, tau) < dot(v2, tau), which also guarantees termination.
PerronMatrix make_divisible(const ExponentVec& v1, const ExponentVec& v2,
                            const std::vector<Value>& tau, long cap = default_cap);

// For v of positive value, a run of steps with A^T v >= 0 componentwise;
// splits v into positive and negative parts and applies make_divisible.
PerronMatrix clear_to_regular(const ExponentVec& v, const std::vector<Value>& tau,
                              long cap = default_cap);

// Realizes a primitive rational dependence
//   lambda * tau_r = sum_i lambda_i * tau_i,   lambda > 0, gcd = 1,
// as a nonnegative (s+1) x (s+1) matrix B of determinant +-1: writing
// t = (tau_1, ..., tau_s, tau_r), the rows of B^{-1} pair with t to values
// that are positive for the first s rows and zero for the last one.
IntMat type2_matrix(const std::vector<Value>& tau, const mpz_class& lambda,
                    const std::vector<mpz_class>& lambda_i, long cap = default_cap);

} // namespace valfactor
