#pragma once

// Dense square integer matrices with exact determinants and adjugates.
// Dimensions stay in single digits here, so clarity beats asymptotics.

#include <vector>

#include "valfactor/rational.hpp"

namespace valfactor {

struct IntMat {
    int n = 0;
    std::vector<mpz_class> a; // row-major

    IntMat() = default;
    explicit IntMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    static IntMat identity(int dim);

    mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
};

IntMat mul(const IntMat& x, const IntMat& y);

// Fraction-free elimination; exact for any integer matrix.
mpz_class det(const IntMat& m);

// adj(m) with m * adj(m) = det(m) * I.
IntMat adjugate(const IntMat& m);

bool nonnegative(const IntMat& m);

// (A^T v)_j = sum_i A(i,j) v_i.  Works for any coefficient type that adds
// and multiplies with mpz_class; used for both exponent vectors and values.
template <class T>
std::vector<T> apply_transpose(const IntMat& A, const std::vector<T>& v) {
    std::vector<T> out;
    out.reserve(A.n);
    for (int j = 0; j < A.n; ++j) {
        T acc = A.at(0, j) * v[0];
        for (int i = 1; i < A.n; ++i) acc += A.at(i, j) * v[i];
        out.push_back(acc);
    }
    return out;
}

template <class T>
std::vector<T> mul(const IntMat& A, const std::vector<T>& v) {
    std::vector<T> out;
    out.reserve(A.n);
    for (int i = 0; i < A.n; ++i) {
        T acc = A.at(i, 0) * v[0];
        for (int j = 1; j < A.n; ++j) acc += A.at(i, j) * v[j];
        out.push_back(acc);
    }
    return out;
}

} // namespace valfactor
