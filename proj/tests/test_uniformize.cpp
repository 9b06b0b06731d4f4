#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "valfactor/errors.hpp"
#include "valfactor/uniformize.hpp"

using namespace valfactor;

namespace {

BasisPtr b12() {
    static BasisPtr b = make_basis({1, 2});
    return b;
}

Value val(long r, long s) { return Value(b12(), {mpq_class(r), mpq_class(s)}); }

Polynomial poly(int n, std::vector<std::pair<ExponentVec, mpq_class>> terms) {
    return make_polynomial(n, terms);
}

IntMat mat2(long a, long b, long c, long d) {
    IntMat m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

// x^a * u expanded term by term.
Polynomial shift_poly(const ExponentVec& a, const Polynomial& u) {
    std::vector<std::pair<ExponentVec, mpq_class>> terms;
    for (const auto& [e, c] : u.terms) {
        ExponentVec sum = e;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += a[i];
        terms.emplace_back(std::move(sum), c);
    }
    return make_polynomial(u.n, terms);
}

} // namespace

TEST_CASE("make_polynomial folds like terms and validates exponents") {
    Polynomial f = poly(2, {{{1, 0}, 2}, {{1, 0}, -2}, {{0, 1}, 1}});
    CHECK(f.terms.size() == 1);
    CHECK(f.terms.at({0, 1}) == 1);

    Polynomial z = poly(2, {{{1, 1}, 3}, {{1, 1}, -3}});
    CHECK(poly_is_zero(z));

    CHECK_THROWS_WITH_AS(make_polynomial(0, {}), "dimension too small", input_error);
    CHECK_THROWS_WITH_AS(poly(2, {{{1}, 1}}), "exponent length mismatch", input_error);
    CHECK_THROWS_WITH_AS(poly(2, {{{-1, 0}, 1}}), "negative exponent in polynomial",
                         input_error);
}

TEST_CASE("poly_value finds the unique minimizing term") {
    std::vector<Value> tau{val(0, 1), val(1, 0)}; // (sqrt2, 1)

    Polynomial f = poly(2, {{{1, 0}, 3}, {{0, 2}, 1}});
    auto [v1, e1] = poly_value(f, tau);
    CHECK(v1 == val(0, 1));
    CHECK(e1 == ExponentVec{1, 0});

    Polynomial c = poly(2, {{{0, 0}, 5}});
    auto [v2, e2] = poly_value(c, tau);
    CHECK(v2.sign() == 0);
    CHECK(e2 == ExponentVec{0, 0});

    Polynomial g = poly(2, {{{2, 0}, 1}, {{0, 3}, 1}});
    auto [v3, e3] = poly_value(g, tau);
    CHECK(v3 == val(0, 2));
    CHECK(e3 == ExponentVec{2, 0});

    CHECK_THROWS_WITH_AS(poly_value(poly(2, {}), tau), "value of zero is infinite",
                         input_error);
    CHECK_THROWS_WITH_AS(poly_value(f, {val(0, 1)}), "dimension mismatch", input_error);
    CHECK_THROWS_WITH_AS(poly_value(f, {val(0, 1), val(0, 0)}), "nonpositive weight",
                         input_error);
    // equal weights let two exponents share a value
    Polynomial h = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK_THROWS_WITH_AS(poly_value(h, {val(0, 1), val(0, 1)}), "dependent weights",
                         input_error);
}

TEST_CASE("substitute maps exponents through the transpose") {
    Polynomial f = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
    Polynomial g = substitute(f, mat2(0, 1, 1, 1));
    CHECK(g == poly(2, {{{0, 1}, 1}, {{1, 1}, 1}}));

    CHECK(substitute(f, IntMat::identity(2)) == f);

    Polynomial h = poly(2, {{{2, 0}, 1}, {{0, 3}, 1}});
    Polynomial hs = substitute(h, mat2(1, 3, 1, 2));
    CHECK(hs == poly(2, {{{2, 6}, 1}, {{3, 6}, 1}}));

    CHECK_THROWS_WITH_AS(substitute(f, IntMat::identity(3)), "dimension mismatch",
                         input_error);
    CHECK_THROWS_WITH_AS(substitute(f, mat2(1, 0, -1, 1)), "negative exponent in transform",
                         input_error);
}

TEST_CASE("monomialize leaves monomials alone") {
    Polynomial f = poly(2, {{{1, 0}, 1}});
    MonomialForm mf = monomialize(f, {val(0, 1), val(1, 0)});
    CHECK(mf.transform.A == IntMat::identity(2));
    CHECK(mf.transform.steps == 0);
    CHECK(mf.monomial == ExponentVec{1, 0});
    CHECK(mf.unit == poly(2, {{{0, 0}, 1}}));
}

TEST_CASE("monomialize pinned runs") {
    // one step
    Polynomial f = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
    MonomialForm m1 = monomialize(f, {val(1, 0), val(0, 1)});
    CHECK(m1.transform.A == mat2(0, 1, 1, 1));
    CHECK(m1.transform.steps == 1);
    CHECK(m1.monomial == ExponentVec{0, 1});
    CHECK(m1.unit == poly(2, {{{0, 0}, 1}, {{1, 0}, 1}}));

    // three steps
    Polynomial g = poly(2, {{{2, 0}, 1}, {{0, 3}, 1}});
    MonomialForm m2 = monomialize(g, {val(0, 1), val(1, 0)});
    CHECK(m2.transform.A == mat2(1, 3, 1, 2));
    CHECK(m2.transform.steps == 3);
    CHECK(m2.monomial == ExponentVec{2, 6});
    CHECK(m2.unit == poly(2, {{{0, 0}, 1}, {{1, 0}, 1}}));
    CHECK(substitute(g, m2.transform) == shift_poly(m2.monomial, m2.unit));

    CHECK_THROWS_WITH_AS(monomialize(poly(2, {}), {val(0, 1), val(1, 0)}),
                         "value of zero is infinite", input_error);
}

TEST_CASE("monomialize of a monomialized polynomial is the identity") {
    std::vector<Value> tau{val(0, 1), val(1, 0)};
    Polynomial g = poly(2, {{{2, 0}, 1}, {{0, 3}, 1}});
    MonomialForm mf = monomialize(g, tau);
    PerronRun run = perron_accumulate(tau, mf.transform.steps);

    Polynomial done = substitute(g, mf.transform);
    MonomialForm again = monomialize(done, run.tau_h);
    CHECK(again.transform.steps == 0);
    CHECK(again.transform.A == IntMat::identity(2));
    CHECK(again.monomial == mf.monomial);
    CHECK(again.unit == mf.unit);
}

TEST_CASE("random polynomials monomialize with all contracts intact") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Value> tau = oracle::random_surd_weights(rng, n);
        Polynomial f = oracle::random_polynomial(rng, n, 8, 6);

        MonomialForm mf = monomialize(f, tau);
        Polynomial image = substitute(f, mf.transform);

        // exact reconstruction and the unit's constant term
        CHECK(image == shift_poly(mf.monomial, mf.unit));
        auto zero_it = mf.unit.terms.find(ExponentVec(static_cast<std::size_t>(n), 0));
        REQUIRE(zero_it != mf.unit.terms.end());
        CHECK(zero_it->second != 0);

        // dominance of the factored monomial
        for (const auto& [e, c] : image.terms)
            for (std::size_t i = 0; i < e.size(); ++i) CHECK(mf.monomial[i] <= e[i]);

        // value conservation through the substitution; a zero-step
        // transform keeps the original weights
        std::vector<Value> tau_h =
            mf.transform.steps == 0 ? tau : perron_accumulate(tau, mf.transform.steps).tau_h;
        Value before = poly_value(f, tau).first;
        Value after = poly_value(image, tau_h).first;
        CHECK(compare(before, after) == Ordering::Equal);
        CHECK(compare(before, dot(mf.monomial, tau_h)) == Ordering::Equal);
    }
}
