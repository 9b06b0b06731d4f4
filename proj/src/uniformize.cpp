#include "valfactor/uniformize.hpp"

#include "valfactor/errors.hpp"

namespace valfactor {

Polynomial make_polynomial(int n,
                           const std::vector<std::pair<ExponentVec, mpq_class>>& terms) {
    if (n < 1) throw input_error("dimension too small");
    Polynomial f;
    f.n = n;
    for (const auto& [exp, coef] : terms) {
        if (static_cast<int>(exp.size()) != n) throw input_error("exponent length mismatch");
        for (const mpz_class& e : exp)
            if (e < 0) throw input_error("negative exponent in polynomial");
        auto it = f.terms.find(exp);
        if (it == f.terms.end()) {
            if (coef != 0) f.terms.emplace(exp, coef);
        } else {
            it->second += coef;
            if (it->second == 0) f.terms.erase(it);
        }
    }
    return f;
}

bool poly_is_zero(const Polynomial& f) { return f.terms.empty(); }

namespace {

void check_weights(const Polynomial& f, const std::vector<Value>& tau) {
    if (static_cast<int>(tau.size()) != f.n) throw input_error("dimension mismatch");
    for (const Value& t : tau)
        if (t.sign() <= 0) throw input_error("nonpositive weight");
}

// Index of the unique minimum-value term; ties mean the weights satisfy a
// rational dependence.
std::size_t min_term(const std::vector<std::pair<ExponentVec, mpq_class>>& terms,
                     const std::vector<Value>& tau) {
    std::size_t best = 0;
    Value best_val = dot(terms[0].first, tau);
    for (std::size_t k = 1; k < terms.size(); ++k) {
        Value v = dot(terms[k].first, tau);
        switch (compare(v, best_val)) {
        case Ordering::Less:
            best = k;
            best_val = std::move(v);
            break;
        case Ordering::Equal:
            throw input_error("dependent weights");
        case Ordering::Greater:
            break;
        }
    }
    return best;
}

bool divides_all(const ExponentVec& a,
                 const std::vector<std::pair<ExponentVec, mpq_class>>& terms) {
    for (const auto& [exp, coef] : terms)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > exp[i]) return false;
    return true;
}

} // namespace

std::pair<Value, ExponentVec> poly_value(const Polynomial& f, const std::vector<Value>& tau) {
    if (poly_is_zero(f)) throw input_error("value of zero is infinite");
    check_weights(f, tau);
    std::vector<std::pair<ExponentVec, mpq_class>> terms(f.terms.begin(), f.terms.end());
    std::size_t best = min_term(terms, tau);
    return {dot(terms[best].first, tau), terms[best].first};
}

Polynomial substitute(const Polynomial& f, const IntMat& A) {
    if (A.n != f.n) throw input_error("dimension mismatch");
    if (!nonnegative(A)) throw input_error("negative exponent in transform");
    std::vector<std::pair<ExponentVec, mpq_class>> out;
    out.reserve(f.terms.size());
    for (const auto& [exp, coef] : f.terms) out.emplace_back(apply_transpose(A, exp), coef);
    return make_polynomial(f.n, out);
}

Polynomial substitute(const Polynomial& f, const PerronMatrix& A) {
    return substitute(f, A.A);
}

MonomialForm monomialize(const Polynomial& f, const std::vector<Value>& tau, long cap) {
    if (poly_is_zero(f)) throw input_error("value of zero is infinite");
    check_weights(f, tau);

    std::vector<std::pair<ExponentVec, mpq_class>> terms(f.terms.begin(), f.terms.end());
    std::vector<Value> cur = tau;
    IntMat A = IntMat::identity(f.n);
    long h = 0;

    for (;;) {
        std::size_t best = min_term(terms, cur);
        if (divides_all(terms[best].first, terms)) {
            ExponentVec a = terms[best].first;
            std::vector<std::pair<ExponentVec, mpq_class>> unit_terms;
            unit_terms.reserve(terms.size());
            for (const auto& [exp, coef] : terms) {
                ExponentVec rel(exp.size());
                for (std::size_t i = 0; i < exp.size(); ++i) rel[i] = exp[i] - a[i];
                unit_terms.emplace_back(std::move(rel), coef);
            }
            MonomialForm out;
            out.transform = PerronMatrix{f.n, h, std::move(A)};
            out.monomial = std::move(a);
            out.unit = make_polynomial(f.n, unit_terms);
            return out;
        }
        PerronStep step = perron_step(cur);
        for (auto& [exp, coef] : terms) exp = apply_transpose(step.P, exp);
        cur = std::move(step.tau_next);
        A = mul(A, step.P);
        if (++h > cap) throw cap_error("monomialization cap exceeded");
    }
}

} // namespace valfactor
