#include "valfactor/perron.hpp"

#include <utility>

#include "valfactor/errors.hpp"

namespace valfactor {

PerronStep perron_step(const std::vector<Value>& tau) {
    const int s = static_cast<int>(tau.size());
    if (s < 2) throw input_error("dimension too small");
    for (const auto& t : tau)
        if (t.sign() <= 0) throw input_error("nonpositive weight");

    PerronStep st;
    st.P = IntMat(s);
    st.P.at(0, s - 1) = 1;
    st.digits.reserve(s - 1);
    st.tau_next.reserve(s);
    for (int j = 1; j < s; ++j) {
        mpz_class aj = floor_ratio(tau[j], tau[0]);
        st.P.at(j, j - 1) = 1;
        st.P.at(j, s - 1) = aj;
        Value rem = tau[j] - aj * tau[0];
        // rem lies in [0, tau_1); it is zero exactly when tau_j is a
        // rational multiple of tau_1
        if (rem.sign() <= 0) throw input_error("dependent weights");
        st.digits.push_back(std::move(aj));
        st.tau_next.push_back(std::move(rem));
    }
    st.tau_next.push_back(tau[0]);
    return st;
}

PerronRun perron_accumulate(const std::vector<Value>& tau, long h) {
    if (h < 0) throw input_error("negative step count");
    const int s = static_cast<int>(tau.size());
    if (s < 2) throw input_error("dimension too small");
    PerronRun run;
    run.mat.dim = s;
    run.mat.steps = h;
    run.mat.A = IntMat::identity(s);
    run.tau_h = tau;
    for (long k = 0; k < h; ++k) {
        PerronStep st = perron_step(run.tau_h);
        run.mat.A = mul(run.mat.A, st.P);
        run.tau_h = std::move(st.tau_next);
        run.digits.push_back(std::move(st.digits));
    }
    return run;
}

PerronMatrix make_divisible(const ExponentVec& v1, const ExponentVec& v2,
                            const std::vector<Value>& tau, long cap) {
    const int s = static_cast<int>(tau.size());
    if (static_cast<int>(v1.size()) != s || static_cast<int>(v2.size()) != s)
        throw input_error("exponent vector length mismatch");
    if (compare(dot(v1, tau), dot(v2, tau)) != Ordering::Less)
        throw input_error("value order violated");

    PerronMatrix pm;
    pm.dim = s;
    pm.steps = 0;
    pm.A = IntMat::identity(s);
    std::vector<Value> cur = tau;
    const auto dominated = [&] {
        ExponentVec w1 = apply_transpose(pm.A, v1);
        ExponentVec w2 = apply_transpose(pm.A, v2);
        for (int i = 0; i < s; ++i)
            if (w1[i] > w2[i]) return false;
        return true;
    };
    while (!dominated()) {
        if (pm.steps >= cap) throw cap_error("divisibility search cap exceeded");
        PerronStep st = perron_step(cur);
        pm.A = mul(pm.A, st.P);
        cur = std::move(st.tau_next);
        ++pm.steps;
    }
    return pm;
}

PerronMatrix clear_to_regular(const ExponentVec& v, const std::vector<Value>& tau, long cap) {
    const int s = static_cast<int>(tau.size());
    if (static_cast<int>(v.size()) != s) throw input_error("exponent vector length mismatch");
    if (dot(v, tau).sign() <= 0) throw input_error("nonpositive value");
    ExponentVec plus(s), minus(s);
    bool any_negative = false;
    for (int i = 0; i < s; ++i) {
        if (v[i] >= 0) {
            plus[i] = v[i];
        } else {
            minus[i] = -v[i];
            any_negative = true;
        }
    }
    if (!any_negative) {
        PerronMatrix pm;
        pm.dim = s;
        pm.steps = 0;
        pm.A = IntMat::identity(s);
        return pm;
    }
    // dot(minus, tau) < dot(plus, tau) because their difference is dot(v, tau)
    return make_divisible(minus, plus, tau, cap);
}

IntMat type2_matrix(const std::vector<Value>& tau, const mpz_class& lambda,
                    const std::vector<mpz_class>& lambda_i, long cap) {
    const int s = static_cast<int>(tau.size());
    if (s < 1) throw input_error("dimension too small");
    if (static_cast<int>(lambda_i.size()) != s)
        throw input_error("relation coefficient count does not match weights");
    if (lambda <= 0) throw input_error("nonpositive relation multiplier");
    for (const auto& t : tau)
        if (t.sign() <= 0) throw input_error("nonpositive weight");

    mpz_class g = lambda;
    for (const auto& li : lambda_i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), li.get_mpz_t());
    if (g != 1) throw input_error("imprimitive relation");

    Value tau_r = mpq_class(mpz_class(1), lambda) * dot(lambda_i, tau);
    if (tau_r.sign() <= 0) throw input_error("nonpositive dependent value");

    // B accumulates on the right; its rows are the old variables
    // (x_1, ..., x_s, x_r) written in the current new ones.  The running
    // state keeps the relation  lam * cur_r = <vec, cur>  with every entry
    // of cur and cur_r positive.
    const int m = s + 1;
    IntMat B = IntMat::identity(m);
    std::vector<Value> cur = tau;
    Value cur_r = tau_r;
    mpz_class lam = lambda;
    std::vector<mpz_class> vec = lambda_i;

    long steps = 0;
    const auto bump = [&] {
        if (++steps > cap) throw cap_error("dependence reduction cap exceeded");
    };
    const auto all_positive = [&] {
        for (const auto& x : vec)
            if (x <= 0) return false;
        return true;
    };
    // Steps of the continued fraction replace vec by P^T vec; the columns of
    // the accumulated product align with the weight direction, whose pairing
    // with vec is lam * cur_r > 0, so every entry becomes positive.
    const auto positivize = [&] {
        while (!all_positive()) {
            bump();
            PerronStep st = perron_step(cur);
            vec = apply_transpose(st.P, vec);
            cur = std::move(st.tau_next);
            IntMat ext(m);
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) ext.at(i, j) = st.P.at(i, j);
            ext.at(s, s) = 1;
            B = mul(B, ext);
        }
    };

    while (lam > 1) {
        positivize();
        // Primitivity leaves some coefficient not divisible by lam; move it
        // to the front.
        int idx = -1;
        for (int i = 0; i < s; ++i)
            if (vec[i] % lam != 0) {
                idx = i;
                break;
            }
        if (idx < 0) throw internal_error("primitive relation with all coefficients divisible");
        if (idx != 0) {
            IntMat perm = IntMat::identity(m);
            perm.at(0, 0) = 0;
            perm.at(idx, idx) = 0;
            perm.at(0, idx) = 1;
            perm.at(idx, 0) = 1;
            B = mul(B, perm);
            std::swap(cur[0], cur[idx]);
            std::swap(vec[0], vec[idx]);
        }
        bump();
        mpz_class mu = vec[0] / lam;
        mpz_class rem = vec[0] - mu * lam; // 0 < rem < lam
        // Shear with rows (e_{s+1}; e_2 .. e_s; e_1 + mu e_{s+1}): the last
        // old variable x_r becomes the new first one, x_1 becomes the new
        // last one, and the relation multiplier drops from lam to rem.
        IntMat shear(m);
        shear.at(0, m - 1) = 1;
        for (int i = 1; i < s; ++i) shear.at(i, i) = 1;
        shear.at(s, 0) = 1;
        shear.at(s, m - 1) = mu;
        B = mul(B, shear);

        std::vector<mpz_class> new_vec(s);
        new_vec[0] = lam;
        for (int i = 1; i < s; ++i) new_vec[i] = -vec[i];
        Value new_first = cur_r - mu * cur[0];
        cur_r = cur[0];
        cur[0] = std::move(new_first);
        if (cur[0].sign() <= 0) throw internal_error("reduction lost positivity");
        vec = std::move(new_vec);
        lam = rem;
    }

    positivize();
    // lam = 1: absorb the dependence, x_r = new_r * prod_i x_i^{vec_i}.
    IntMat last = IntMat::identity(m);
    for (int i = 0; i < s; ++i) last.at(s, i) = vec[i];
    B = mul(B, last);
    return B;
}

} // namespace valfactor
