#include "valfactor/json_io.hpp"

#include <limits>
#include <set>

#include "valfactor/errors.hpp"

namespace valfactor {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& path) {
    throw input_error(what + " at " + path);
}

std::string idx(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail("expected object", path);
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field \"") + key + "\"", path);
    return *it;
}

void only_fields(const json& j, std::initializer_list<const char*> keys,
                 const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            if (it.key() == k) known = true;
        if (!known) fail("unknown field \"" + it.key() + "\"", path);
    }
}

long long get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail("expected integer", path);
    if (j.is_number_unsigned() &&
        j.get<unsigned long long>() >
            static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
        fail("integer out of range", path);
    return j.get<long long>();
}

int get_index(const json& j, int n, const std::string& path) {
    long long v = get_int(j, path);
    if (v < 1 || v > n) fail("index out of range", path);
    return static_cast<int>(v);
}

mpq_class get_rational(const json& j, const std::string& path) {
    if (!j.is_string()) fail("expected \"p/q\" string", path);
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const input_error& e) {
        fail(e.what(), path);
    }
}

} // namespace

// Output stays within exact 64-bit integers; anything larger is out of
// contract for the wire format.
long long json_int(const mpz_class& v) {
    if (!v.fits_slong_p()) throw input_error("integer exceeds serialization range");
    return v.get_si();
}

json parse_text(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

std::vector<Value> parse_weights(const json& j, const std::string& path) {
    if (!j.is_array()) fail("expected array", path);
    if (j.empty()) fail("empty weight list", path);

    std::vector<long> rads;
    std::vector<std::vector<mpq_class>> coeffs;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string vpath = idx(path, k);
        const json& v = j[k];
        if (!v.is_object()) fail("expected object", vpath);
        only_fields(v, {"basis", "coeffs"}, vpath);
        const json& basis = field(v, "basis", vpath);
        const json& cs = field(v, "coeffs", vpath);
        if (!basis.is_array()) fail("expected array", vpath + ".basis");
        if (!cs.is_array()) fail("expected array", vpath + ".coeffs");
        if (basis.size() != cs.size()) fail("coefficient count does not match basis size", vpath);

        std::vector<long> r;
        for (std::size_t i = 0; i < basis.size(); ++i)
            r.push_back(static_cast<long>(get_int(basis[i], idx(vpath + ".basis", i))));
        if (k == 0) {
            rads = r;
        } else if (r != rads) {
            fail("weight bases differ", vpath + ".basis");
        }
        std::vector<mpq_class> c;
        for (std::size_t i = 0; i < cs.size(); ++i)
            c.push_back(get_rational(cs[i], idx(vpath + ".coeffs", i)));
        coeffs.push_back(std::move(c));
    }

    // One shared basis, validated once with element-level paths.
    const std::string bpath = path + ".basis";
    if (rads.empty()) fail("empty surd basis", bpath);
    long prev = 0;
    for (std::size_t i = 0; i < rads.size(); ++i) {
        long d = rads[i];
        if (d <= 0) fail("radicand must be positive", idx(bpath, i));
        if (d > 1000000000000000L) fail("radicand too large", idx(bpath, i));
        if (d <= prev) fail("radicands must be strictly increasing", idx(bpath, i));
        if (!squarefree_radicand(d)) fail("radicand not squarefree", idx(bpath, i));
        prev = d;
    }

    BasisPtr basis = make_basis(rads);
    std::vector<Value> out;
    std::set<std::size_t> used;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < coeffs[k].size(); ++i)
            if (coeffs[k][i] != 0) support.push_back(i);
        if (support.empty()) fail("nonpositive weight", idx(path, k));
        for (std::size_t i : support)
            if (used.count(i)) fail("dependent-weight basis reuse", idx(path, k));
        used.insert(support.begin(), support.end());
        out.emplace_back(basis, std::move(coeffs[k]));
    }
    return out;
}

MonoMap parse_monomap(const json& j, const std::string& path) {
    if (!j.is_object()) fail("expected object", path);
    only_fields(j, {"n", "rows"}, path);
    long long n = get_int(field(j, "n", path), path + ".n");
    if (n < 1) fail("dimension too small", path + ".n");
    if (n > 1000) fail("dimension too large", path + ".n");
    const json& rows = field(j, "rows", path);
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        fail("expected " + std::to_string(n) + " rows", path + ".rows");
    MonoMap m(static_cast<int>(n));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rpath = idx(path + ".rows", i);
        const json& row = rows[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            fail("expected " + std::to_string(n) + " entries", rpath);
        for (std::size_t c = 0; c < row.size(); ++c)
            m.at(static_cast<int>(i), static_cast<int>(c)) =
                mpz_class(static_cast<long>(get_int(row[c], idx(rpath, c))));
    }
    return m;
}

ElementaryMove parse_move(const json& j, int n, const std::string& path) {
    if (!j.is_object()) fail("expected object", path);
    const json& kind = field(j, "kind", path);
    if (!kind.is_string()) fail("expected string", path + ".kind");
    const std::string k = kind.get<std::string>();
    if (k == "blowup" || k == "imt") {
        only_fields(j, {"kind", "r", "s"}, path);
        int r = get_index(field(j, "r", path), n, path + ".r");
        int s = get_index(field(j, "s", path), n, path + ".s");
        return k == "blowup" ? ElementaryMove::make_blowup(r - 1, s - 1)
                             : ElementaryMove::make_imt(r - 1, s - 1);
    }
    if (k == "relabel") {
        only_fields(j, {"kind", "perm"}, path);
        const json& perm = field(j, "perm", path);
        if (!perm.is_array() || perm.size() != static_cast<std::size_t>(n))
            fail("expected permutation of length " + std::to_string(n), path + ".perm");
        std::vector<int> p;
        for (std::size_t i = 0; i < perm.size(); ++i)
            p.push_back(get_index(perm[i], n, idx(path + ".perm", i)) - 1);
        return ElementaryMove::make_relabel(std::move(p));
    }
    fail("unknown move kind \"" + k + "\"", path + ".kind");
}

ZigzagCert parse_cert(const json& j) {
    const std::string path = "certificate";
    if (!j.is_object()) fail("expected object", path);
    only_fields(j, {"n", "input", "weights", "nodes", "arrows"}, path);
    long long n = get_int(field(j, "n", path), "n");
    if (n < 1) fail("dimension too small", "n");
    if (n > 1000) fail("dimension too large", "n");

    ZigzagCert cert;
    cert.n = static_cast<int>(n);
    cert.input = parse_monomap(field(j, "input", path), "input");
    cert.weights = parse_weights(field(j, "weights", path), "weights");

    const json& nodes = field(j, "nodes", path);
    if (!nodes.is_array()) fail("expected array", "nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        cert.nodes.push_back(parse_monomap(nodes[i], idx("nodes", i)));

    const json& arrows = field(j, "arrows", path);
    if (!arrows.is_array()) fail("expected array", "arrows");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const std::string apath = idx("arrows", i);
        const json& a = arrows[i];
        if (!a.is_object()) fail("expected object", apath);
        only_fields(a, {"left", "right"}, apath);
        Arrow arrow;
        for (const char* side : {"left", "right"}) {
            const json& moves = field(a, side, apath);
            const std::string spath = apath + "." + side;
            if (!moves.is_array()) fail("expected array", spath);
            auto& list = side == std::string("left") ? arrow.left : arrow.right;
            for (std::size_t m = 0; m < moves.size(); ++m)
                list.push_back(parse_move(moves[m], cert.n, idx(spath, m)));
        }
        cert.arrows.push_back(std::move(arrow));
    }
    return cert;
}

Polynomial parse_polynomial(const json& j, const std::string& path) {
    if (!j.is_object()) fail("expected object", path);
    only_fields(j, {"n", "terms"}, path);
    long long n = get_int(field(j, "n", path), path + ".n");
    if (n < 1) fail("dimension too small", path + ".n");
    if (n > 1000) fail("dimension too large", path + ".n");
    const json& terms = field(j, "terms", path);
    if (!terms.is_array()) fail("expected array", path + ".terms");

    std::vector<std::pair<ExponentVec, mpq_class>> parsed;
    std::set<ExponentVec> seen;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string tpath = idx(path + ".terms", k);
        const json& t = terms[k];
        if (!t.is_object()) fail("expected object", tpath);
        only_fields(t, {"exp", "coef"}, tpath);
        const json& exp = field(t, "exp", tpath);
        if (!exp.is_array() || exp.size() != static_cast<std::size_t>(n))
            fail("expected " + std::to_string(n) + " exponents", tpath + ".exp");
        ExponentVec e;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            long long v = get_int(exp[i], idx(tpath + ".exp", i));
            if (v < 0) fail("negative exponent in polynomial", idx(tpath + ".exp", i));
            e.push_back(mpz_class(static_cast<long>(v)));
        }
        mpq_class c = get_rational(field(t, "coef", tpath), tpath + ".coef");
        if (c == 0) fail("zero coefficient in polynomial", tpath + ".coef");
        if (!seen.insert(e).second) fail("duplicate exponent", tpath + ".exp");
        parsed.emplace_back(std::move(e), std::move(c));
    }
    return make_polynomial(static_cast<int>(n), parsed);
}

FactorProblem parse_factor_problem(const json& j) {
    const std::string path = "problem";
    if (!j.is_object()) fail("expected object", path);
    only_fields(j, {"map", "weights"}, path);
    FactorProblem p;
    p.map = parse_monomap(field(j, "map", path), "map");
    p.weights = parse_weights(field(j, "weights", path), "weights");
    return p;
}

MonomializeProblem parse_monomialize_problem(const json& j) {
    const std::string path = "problem";
    if (!j.is_object()) fail("expected object", path);
    only_fields(j, {"poly", "weights"}, path);
    MonomializeProblem p;
    p.poly = parse_polynomial(field(j, "poly", path), "poly");
    p.weights = parse_weights(field(j, "weights", path), "weights");
    return p;
}

json value_json(const Value& v) {
    json basis = json::array();
    for (long d : v.basis()->radicands()) basis.push_back(d);
    json coeffs = json::array();
    for (const mpq_class& c : v.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"basis", std::move(basis)}, {"coeffs", std::move(coeffs)}};
}

json weights_json(const std::vector<Value>& ws) {
    json out = json::array();
    for (const Value& w : ws) out.push_back(value_json(w));
    return out;
}

json monomap_json(const MonoMap& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n}, {"rows", std::move(rows)}};
}

json move_json(const ElementaryMove& mv) {
    switch (mv.kind) {
    case ElementaryMove::Kind::Blowup:
        return json{{"kind", "blowup"}, {"r", mv.r + 1}, {"s", mv.s + 1}};
    case ElementaryMove::Kind::IMT:
        return json{{"kind", "imt"}, {"r", mv.r + 1}, {"s", mv.s + 1}};
    case ElementaryMove::Kind::Relabel: {
        json perm = json::array();
        for (int p : mv.perm) perm.push_back(p + 1);
        return json{{"kind", "relabel"}, {"perm", std::move(perm)}};
    }
    }
    throw internal_error("unhandled move kind");
}

json cert_json(const ZigzagCert& c) {
    json nodes = json::array();
    for (const MonoMap& m : c.nodes) nodes.push_back(monomap_json(m));
    json arrows = json::array();
    for (const Arrow& a : c.arrows) {
        json left = json::array(), right = json::array();
        for (const ElementaryMove& mv : a.left) left.push_back(move_json(mv));
        for (const ElementaryMove& mv : a.right) right.push_back(move_json(mv));
        arrows.push_back(json{{"left", std::move(left)}, {"right", std::move(right)}});
    }
    return json{{"n", c.n},
                {"input", monomap_json(c.input)},
                {"weights", weights_json(c.weights)},
                {"nodes", std::move(nodes)},
                {"arrows", std::move(arrows)}};
}

json poly_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& [exp, coef] : f.terms) {
        json e = json::array();
        for (const mpz_class& v : exp) e.push_back(json_int(v));
        terms.push_back(json{{"exp", std::move(e)}, {"coef", rat_to_string(coef)}});
    }
    return json{{"n", f.n}, {"terms", std::move(terms)}};
}

} // namespace valfactor
