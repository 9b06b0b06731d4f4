#pragma once

// Exact arithmetic on Q-linear combinations  sum_i q_i * sqrt(d_i)  over a
// fixed list of distinct squarefree radicands.  Distinct squarefree surds
// are linearly independent over Q, so a value is zero exactly when all its
// coefficients are zero, and every sign question about a nonzero value is
// settled in finitely many rounds of interval refinement.

#include <memory>
#include <vector>

#include "valfactor/rational.hpp"

namespace valfactor {

// Radicands d_1 < ... < d_s, each a positive squarefree integer.  d_1 = 1 is
// allowed and carries the rational part.  Immutable once built.
class SurdBasis {
public:
    explicit SurdBasis(std::vector<long> radicands);

    int size() const { return static_cast<int>(radicands_.size()); }
    long radicand(int i) const { return radicands_[i]; }
    const std::vector<long>& radicands() const { return radicands_; }

    bool operator==(const SurdBasis& o) const { return radicands_ == o.radicands_; }

private:
    std::vector<long> radicands_;
};

using BasisPtr = std::shared_ptr<const SurdBasis>;

BasisPtr make_basis(std::vector<long> radicands);

// Exact for 0 < d <= 10^15, the ceiling SurdBasis enforces.
bool squarefree_radicand(long d);

enum class Ordering { Less, Equal, Greater };

class Value {
public:
    Value(BasisPtr basis, std::vector<mpq_class> coeffs);

    static Value zero(const BasisPtr& basis);
    // sqrt(d_i) as a Value: coefficient 1 in slot i, 0 elsewhere.
    static Value surd(const BasisPtr& basis, int i);

    const BasisPtr& basis() const { return basis_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    const mpq_class& coeff(int i) const { return coeffs_[i]; }

    bool is_zero() const;
    // -1, 0 or +1, exact.  Never loops: zero is decided syntactically first.
    int sign() const;

    Value operator-() const;
    Value& operator+=(const Value& o);
    Value& operator-=(const Value& o);
    Value& operator*=(const mpq_class& c);

    friend Value operator+(Value a, const Value& b) { return a += b; }
    friend Value operator-(Value a, const Value& b) { return a -= b; }
    friend Value operator*(const mpq_class& c, Value v) { return v *= c; }
    friend Value operator*(const mpz_class& c, Value v) { return v *= mpq_class(c); }

    // Syntactic equality; equivalent to value equality on a shared basis.
    bool operator==(const Value& o) const;

private:
    BasisPtr basis_;
    std::vector<mpq_class> coeffs_;
};

// Total order on values over one basis.  Throws input_error
// "incompatible value bases" when the bases differ.
Ordering compare(const Value& a, const Value& b);

// floor(a / b) for a >= 0, b > 0.  The result can be any nonnegative
// integer, so it is returned exactly.
mpz_class floor_ratio(const Value& a, const Value& b);

// sum_i v[i] * w[i]; the vectors must have equal length.
Value dot(const std::vector<mpz_class>& v, const std::vector<Value>& w);

} // namespace valfactor
