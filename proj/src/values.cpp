#include "valfactor/values.hpp"

#include "valfactor/errors.hpp"

namespace valfactor {

// Sound for d <= 10^15: after stripping primes up to 10^6 the residue has at
// most two prime factors, so a repeated one makes it a perfect square.
bool squarefree_radicand(long d) {
    for (long p = 2; p <= 1000000 && p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return false;
        }
    }
    if (d == 1) return true;
    mpz_class residue(d);
    return mpz_perfect_square_p(residue.get_mpz_t()) == 0;
}

namespace {

// n = floor(sqrt(d * 4^bits)) gives n/2^bits <= sqrt(d) < (n+1)/2^bits.
void sqrt_enclosure(long d, unsigned long bits, mpq_class& lo, mpq_class& hi) {
    if (d == 1) {
        lo = 1;
        hi = 1;
        return;
    }
    mpz_class n = isqrt(mpz_class(d) << (2 * bits));
    mpz_class den = mpz_class(1) << bits;
    lo = mpq_class(n, den);
    lo.canonicalize();
    hi = mpq_class(n + 1, den);
    hi.canonicalize();
}

void require_same_basis(const Value& a, const Value& b) {
    if (!(*a.basis() == *b.basis())) throw input_error("incompatible value bases");
}

} // namespace

SurdBasis::SurdBasis(std::vector<long> radicands) : radicands_(std::move(radicands)) {
    if (radicands_.empty()) throw input_error("empty surd basis");
    long prev = 0;
    for (long d : radicands_) {
        if (d <= 0) throw input_error("radicand must be positive");
        if (d > 1000000000000000L) throw input_error("radicand too large");
        if (d <= prev) throw input_error("radicands must be strictly increasing");
        if (!squarefree_radicand(d)) throw input_error("radicand not squarefree");
        prev = d;
    }
}

BasisPtr make_basis(std::vector<long> radicands) {
    return std::make_shared<const SurdBasis>(std::move(radicands));
}

Value::Value(BasisPtr basis, std::vector<mpq_class> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (!basis_) throw input_error("value without basis");
    if (static_cast<int>(coeffs_.size()) != basis_->size())
        throw input_error("coefficient count does not match basis size");
}

Value Value::zero(const BasisPtr& basis) {
    if (!basis) throw input_error("value without basis");
    return Value(basis, std::vector<mpq_class>(basis->size(), mpq_class(0)));
}

Value Value::surd(const BasisPtr& basis, int i) {
    Value v = zero(basis);
    if (i < 0 || i >= basis->size()) throw input_error("surd index out of range");
    v.coeffs_[i] = 1;
    return v;
}

bool Value::is_zero() const {
    for (const auto& q : coeffs_)
        if (q != 0) return false;
    return true;
}

int Value::sign() const {
    if (is_zero()) return 0;
    mpq_class lo, hi, slo, shi;
    for (unsigned long bits = 32;; bits *= 2) {
        lo = 0;
        hi = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const mpq_class& q = coeffs_[i];
            if (q == 0) continue;
            sqrt_enclosure(basis_->radicand(static_cast<int>(i)), bits, slo, shi);
            if (q > 0) {
                lo += q * slo;
                hi += q * shi;
            } else {
                lo += q * shi;
                hi += q * slo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        // A nonzero combination of independent surds is bounded away from
        // zero, so refinement must separate it from zero eventually.
        if (bits > (1ul << 24)) throw internal_error("sign refinement exceeded precision bound");
    }
}

Value Value::operator-() const {
    Value v = *this;
    for (auto& q : v.coeffs_) q = -q;
    return v;
}

Value& Value::operator+=(const Value& o) {
    require_same_basis(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Value& Value::operator-=(const Value& o) {
    require_same_basis(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Value& Value::operator*=(const mpq_class& c) {
    for (auto& q : coeffs_) q *= c;
    return *this;
}

bool Value::operator==(const Value& o) const {
    return *basis_ == *o.basis_ && coeffs_ == o.coeffs_;
}

Ordering compare(const Value& a, const Value& b) {
    require_same_basis(a, b);
    switch ((a - b).sign()) {
        case -1: return Ordering::Less;
        case 0: return Ordering::Equal;
        default: return Ordering::Greater;
    }
}

mpz_class floor_ratio(const Value& a, const Value& b) {
    if (b.sign() <= 0) throw input_error("nonpositive divisor");
    if (a.sign() < 0) throw input_error("negative dividend");
    if (compare(a, b) == Ordering::Less) return 0;
    // Bracket by doubling, then bisect; invariant lo*b <= a < hi*b.
    mpz_class hi = 2;
    while (compare(a, hi * b) != Ordering::Less) hi *= 2;
    mpz_class lo = hi / 2;
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        if (compare(a, mid * b) == Ordering::Less)
            hi = mid;
        else
            lo = mid;
    }
    return lo;
}

Value dot(const std::vector<mpz_class>& v, const std::vector<Value>& w) {
    if (v.size() != w.size()) throw input_error("dot of vectors of unequal length");
    if (w.empty()) throw input_error("dot of empty vectors");
    Value acc = Value::zero(w[0].basis());
    for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i];
    return acc;
}

} // namespace valfactor
