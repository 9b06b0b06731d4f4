#include "valfactor/matrix.hpp"

#include <utility>

#include "valfactor/errors.hpp"

namespace valfactor {

IntMat IntMat::identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mul(const IntMat& x, const IntMat& y) {
    if (x.n != y.n) throw internal_error("matrix dimension mismatch");
    IntMat z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const mpz_class& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < x.n; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

mpz_class det(const IntMat& m) {
    if (m.n == 0) return 1;
    IntMat b = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < b.n; ++k) {
        if (b.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < b.n; ++r)
                if (b.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < b.n; ++j) std::swap(b.at(k, j), b.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < b.n; ++i)
            for (int j = k + 1; j < b.n; ++j) {
                mpz_class t = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = b.at(k, k);
    }
    return sign * b.at(b.n - 1, b.n - 1);
}

namespace {

mpz_class minor_det(const IntMat& m, int row, int col) {
    IntMat sub(m.n - 1);
    for (int i = 0, si = 0; i < m.n; ++i) {
        if (i == row) continue;
        for (int j = 0, sj = 0; j < m.n; ++j) {
            if (j == col) continue;
            sub.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return det(sub);
}

} // namespace

IntMat adjugate(const IntMat& m) {
    IntMat adj(m.n);
    if (m.n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            mpz_class c = minor_det(m, i, j);
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

bool nonnegative(const IntMat& m) {
    for (const auto& x : m.a)
        if (x < 0) return false;
    return true;
}

} // namespace valfactor
