#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "valfactor/errors.hpp"
#include "valfactor/factor.hpp"

using namespace valfactor;

namespace {

BasisPtr b12() {
    static BasisPtr b = make_basis({1, 2});
    return b;
}

Value val(long r, long s) { return Value(b12(), {mpq_class(r), mpq_class(s)}); }

IntMat mat2(long a, long b, long c, long d) {
    IntMat m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

IntMat mat3(std::initializer_list<long> entries) {
    IntMat m(3);
    auto it = entries.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = *it++;
    return m;
}

// (sqrt2, sqrt3, 1) over the shared basis {1, 2, 3}.
std::vector<Value> weights123() {
    BasisPtr b = make_basis({1, 2, 3});
    return {Value(b, {0, 1, 0}), Value(b, {0, 0, 1}), Value(b, {1, 0, 0})};
}

InvariantTuple tup(long a, long b, long c, long d) {
    return InvariantTuple{mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d)};
}

ZigzagCert shear_cert() {
    return zigzag_factor(mat2(1, 1, 0, 1), {val(0, 1), val(1, 0)});
}

} // namespace

TEST_CASE("invariant_tuple counts what the clearing argument tracks") {
    UnitRow z{1, 0, -1};
    InvariantTuple t = invariant_tuple(z, {0, 1, 2});
    CHECK(t.alpha == 2);
    CHECK(t.beta == 1);
    CHECK(t.gamma == 3);
    CHECK(t.delta == 2);

    UnitRow z2{3, -2, 0, 1};
    InvariantTuple t2 = invariant_tuple(z2, {0, 1});
    CHECK(t2.alpha == 3);
    CHECK(t2.beta == 3);
    CHECK(t2.gamma == 2);
    CHECK(t2.delta == 1);

    CHECK(lex_le(tup(2, 1, 3, 2), tup(2, 1, 3, 2)));
    CHECK(lex_le(tup(2, 9, 9, 9), tup(3, 0, 0, 0)));
    CHECK(!lex_le(tup(3, 0, 0, 0), tup(2, 9, 9, 9)));
    CHECK(lex_le(tup(2, 1, 3, 1), tup(2, 1, 3, 2)));
    CHECK(!lex_le(tup(2, 1, 4, 0), tup(2, 1, 3, 9)));
}

TEST_CASE("clear_adjoint_row leaves already-sparse unit rows alone") {
    // dimension 2 is always sparse enough
    MapState st2 = make_state(mat2(2, 1, 1, 1), {val(-1, 1), val(2, -1)});
    MapState out2 = clear_adjoint_row(st2);
    CHECK(out2.map == st2.map);
    CHECK(out2.log.empty());

    // unit row (1, 0, -1) has two nonzero entries
    IntMat m = mat3({2, 1, 1, 1, 1, 1, 1, 0, 1});
    CHECK(solve_unit_row(m) == UnitRow{1, 0, -1});
    MapState st3 = make_state(m, weights123());
    MapState out3 = clear_adjoint_row(st3);
    CHECK(out3.map == m);
    CHECK(out3.log.empty());
}

TEST_CASE("clear_adjoint_row reaches sparsity by allowable blowups only") {
    std::mt19937_64 rng(31);
    int cleared_runs = 0;
    for (int t = 0; t < 120 && cleared_runs < 25; ++t) {
        int n = 3 + static_cast<int>(rng() % 3);
        MapState st = oracle::random_blowup_state(rng, n, 12);
        UnitRow z0 = solve_unit_row(st.map);
        int nonzero = 0;
        for (const mpz_class& e : z0)
            if (e != 0) ++nonzero;
        if (nonzero <= 2) continue;
        ++cleared_runs;

        MapState out = clear_adjoint_row(st);
        UnitRow z1 = solve_unit_row(out.map);
        int left = 0;
        for (const mpz_class& e : z1)
            if (e != 0) ++left;
        CHECK(left <= 2);

        REQUIRE(out.log.size() >= st.log.size());
        std::vector<ElementaryMove> added(out.log.begin() + static_cast<long>(st.log.size()),
                                          out.log.end());
        CHECK(!added.empty());
        for (const ElementaryMove& mv : added)
            CHECK(mv.kind == ElementaryMove::Kind::Blowup);

        // tracked sets shrink from the tail of the run forward; the tuple
        // must never go up along the way
        std::vector<std::vector<int>> tracked(added.size() + 1);
        std::set<int> acc;
        for (std::size_t k = added.size(); k-- > 0;) {
            acc.insert(added[k].r);
            acc.insert(added[k].s);
            tracked[k].assign(acc.begin(), acc.end());
        }
        MapState cur = st;
        for (std::size_t k = 0; k < added.size(); ++k) {
            InvariantTuple before = invariant_tuple(solve_unit_row(cur.map), tracked[k]);
            cur = blowup(cur, added[k].r, added[k].s);
            InvariantTuple after = invariant_tuple(solve_unit_row(cur.map), tracked[k + 1]);
            CHECK(lex_le(after, before));
        }
        CHECK(cur.map == out.map);
    }
    CHECK(cleared_runs == 25);
}

TEST_CASE("identity maps factor into a single node") {
    for (int n : {2, 3, 5}) {
        std::mt19937_64 rng(static_cast<unsigned long>(40 + n));
        ZigzagCert cert = zigzag_factor(IntMat::identity(n),
                                        oracle::random_surd_weights(rng, n));
        CHECK(cert.nodes.size() == 1);
        CHECK(cert.arrows.empty());
        CHECK(cert.nodes[0] == IntMat::identity(n));
        VerifyReport rep = verify_zigzag(cert);
        CHECK(rep.accepted);
        CHECK(rep.reason.empty());
    }
}

TEST_CASE("a single shear is one forward blowup") {
    ZigzagCert cert = shear_cert();
    REQUIRE(cert.nodes.size() == 3);
    CHECK(cert.nodes[0] == IntMat::identity(2));
    CHECK(cert.nodes[1] == mat2(1, 1, 0, 1));
    CHECK(cert.nodes[2] == mat2(1, 1, 0, 1));
    REQUIRE(cert.arrows.size() == 1);
    CHECK(cert.arrows[0].left == std::vector<ElementaryMove>{ElementaryMove::make_blowup(0, 1)});
    CHECK(cert.arrows[0].right.empty());
    CHECK(verify_zigzag(cert).accepted);
}

TEST_CASE("zigzag_factor validates its inputs") {
    IntMat one(1);
    one.at(0, 0) = 1;
    CHECK_THROWS_WITH_AS(zigzag_factor(one, {val(0, 1)}), "dimension too small",
                         input_error);
    CHECK_THROWS_WITH_AS(zigzag_factor(mat2(2, 0, 0, 1), {val(0, 1), val(1, 0)}),
                         "not unimodular", input_error);
    CHECK_THROWS_WITH_AS(zigzag_factor(mat2(1, 0, -1, 1), {val(0, 1), val(1, 0)}),
                         "negative exponent in map", input_error);
    CHECK_THROWS_WITH_AS(zigzag_factor(IntMat::identity(2), {val(0, 1)}),
                         "weight count does not match map dimension", input_error);
    CHECK_THROWS_WITH_AS(zigzag_factor(IntMat::identity(2), {val(0, 1), val(0, 0)}),
                         "nonpositive weight", input_error);
    CHECK_THROWS_WITH_AS(zigzag_factor(IntMat::identity(2), {val(0, 1), val(0, 1)}),
                         "dependent weights", input_error);
}

TEST_CASE("random unimodular maps factor into verified zigzags") {
    std::mt19937_64 rng(32);
    int zigzags = 0;
    for (int t = 0; t < 25; ++t) {
        MonoMap m = oracle::random_additions_map(rng, 3, 6);
        std::vector<Value> w = oracle::random_surd_weights(rng, 3);
        ZigzagCert cert = zigzag_factor(m, w);

        VerifyReport rep = verify_zigzag(cert);
        INFO(rep.reason);
        CHECK(rep.accepted);
        CHECK(cert.arrows.size() <= 2); // at most n - 1 upper nodes

        std::size_t left_blowups = 0;
        bool some_right = false;
        for (const Arrow& a : cert.arrows) {
            if (!a.right.empty()) some_right = true;
            for (const ElementaryMove& mv : a.left)
                if (mv.kind == ElementaryMove::Kind::Blowup) ++left_blowups;
        }
        if (some_right) ++zigzags;

        // A certificate whose right arrows are all empty is itself a chain
        // of forward blowups and relabels, so the breadth-first oracle must
        // agree whenever the chain fits inside its horizon; conversely a
        // target the oracle cannot reach forces a genuine zigzag unless the
        // chain is simply longer than the horizon.
        if (!some_right && left_blowups <= 8) CHECK(oracle::mts_reachable(m, w, 8));
        if (!oracle::mts_reachable(m, w, 8)) CHECK((some_right || left_blowups > 8));
    }
    CHECK(zigzags >= 1);
}

TEST_CASE("verifier pins both arrows to the nodes") {
    ZigzagCert cert = shear_cert();

    ZigzagCert bumped = cert;
    bumped.nodes[1].at(0, 1) += 1; // still unimodular and nonnegative
    VerifyReport r1 = verify_zigzag(bumped);
    CHECK(!r1.accepted);
    CHECK(r1.reason == "arrow replay mismatch at node 2 (left)");

    ZigzagCert swapped = cert;
    std::swap(swapped.arrows[0].left[0].r, swapped.arrows[0].left[0].s);
    VerifyReport r2 = verify_zigzag(swapped);
    CHECK(!r2.accepted);
    CHECK(r2.reason.find("not allowable along valuation") != std::string::npos);
}

TEST_CASE("verifier names the first failing structural check") {
    ZigzagCert cert = shear_cert();

    ZigzagCert c = cert;
    c.n = 0;
    CHECK(verify_zigzag(c).reason == "dimension too small");

    c = cert;
    c.nodes.pop_back();
    CHECK(verify_zigzag(c).reason == "node count is not odd");

    c = cert;
    c.arrows.clear();
    CHECK(verify_zigzag(c).reason == "arrow count does not match node count");

    c = cert;
    c.weights.pop_back();
    CHECK(verify_zigzag(c).reason == "weight count does not match map dimension");

    c = cert;
    c.weights[0] = val(0, -1);
    CHECK(verify_zigzag(c).reason == "nonpositive weight");

    c = cert;
    c.nodes[1].at(0, 0) += 1; // det 2
    CHECK(verify_zigzag(c).reason == "node 2 is not unimodular");

    c = cert;
    c.nodes[1].at(1, 0) -= 1;
    CHECK(verify_zigzag(c).reason == "node 2 has a negative exponent");

    c = cert;
    c.nodes[0] = mat2(1, 1, 0, 1);
    CHECK(verify_zigzag(c).reason == "first node is not the identity");

    c = cert;
    c.input.at(0, 1) += 1;
    CHECK(verify_zigzag(c).reason == "final node differs from the input map");

    c = cert;
    c.arrows[0].left[0] = ElementaryMove::make_imt(0, 1);
    CHECK(verify_zigzag(c).reason == "arrow into node 2 contains a non-monoidal move");

    // a node whose solved weights go nonpositive is not dominated
    c = cert;
    c.nodes[1] = mat2(1, 0, 1, 1);
    CHECK(verify_zigzag(c).reason == "valuation does not dominate node 2");

    // values over mismatched bases surface through the catch-all
    c = cert;
    c.weights[1] = Value(make_basis({1, 3}), {1, 0});
    VerifyReport rep = verify_zigzag(c);
    CHECK(!rep.accepted);
    CHECK(rep.reason == "malformed certificate: incompatible value bases");
}

TEST_CASE("mutations of valid certificates are rejected") {
    std::mt19937_64 rng(33);
    int rejected = 0, total = 0;
    for (int t = 0; t < 12; ++t) {
        MonoMap m = oracle::random_additions_map(rng, 3, 5);
        std::vector<Value> w = oracle::random_surd_weights(rng, 3);
        ZigzagCert cert = zigzag_factor(m, w);
        REQUIRE(verify_zigzag(cert).accepted);
        for (int k = 0; k < 5; ++k) {
            std::string what;
            ZigzagCert mut = oracle::mutate_cert(rng, cert, what);
            ++total;
            VerifyReport rep = verify_zigzag(mut);
            INFO(what);
            if (!rep.accepted) {
                CHECK(!rep.reason.empty());
                ++rejected;
            }
        }
    }
    // a silent acceptance is a verified alternative certificate, possible
    // only for a vanishing sliver of mutations
    CHECK(rejected >= total - 1);
}
