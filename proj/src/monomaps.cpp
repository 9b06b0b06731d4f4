#include "valfactor/monomaps.hpp"

#include <algorithm>

#include "valfactor/errors.hpp"

namespace valfactor {

ElementaryMove ElementaryMove::make_blowup(int r, int s) {
    ElementaryMove mv;
    mv.kind = Kind::Blowup;
    mv.r = r;
    mv.s = s;
    return mv;
}

ElementaryMove ElementaryMove::make_imt(int r, int s) {
    ElementaryMove mv;
    mv.kind = Kind::IMT;
    mv.r = r;
    mv.s = s;
    return mv;
}

ElementaryMove ElementaryMove::make_relabel(std::vector<int> perm) {
    ElementaryMove mv;
    mv.kind = Kind::Relabel;
    mv.perm = std::move(perm);
    return mv;
}

namespace {

void check_center(const MapState& st, int r, int s) {
    const int n = st.map.n;
    if (r < 0 || r >= n || s < 0 || s >= n) throw input_error("center index out of range");
    if (r == s) throw input_error("degenerate center");
}

} // namespace

MapState make_state(MonoMap map, std::vector<Value> weights) {
    if (map.n < 1) throw input_error("empty monomial map");
    if (static_cast<int>(weights.size()) != map.n)
        throw input_error("weight count does not match map dimension");
    if (!nonnegative(map)) throw input_error("negative exponent in map");
    if (det(map) == 0) throw input_error("singular monomial map");
    for (const auto& w : weights)
        if (w.sign() <= 0) throw input_error("nonpositive weight");
    return MapState{std::move(map), std::move(weights), {}};
}

MapState blowup(const MapState& st, int r, int s) {
    check_center(st, r, s);
    if (compare(st.weights[r], st.weights[s]) != Ordering::Greater)
        throw input_error("not allowable along valuation");
    MapState out = st;
    for (int i = 0; i < out.map.n; ++i) out.map.at(i, s) += out.map.at(i, r);
    out.weights[r] -= out.weights[s];
    out.log.push_back(ElementaryMove::make_blowup(r, s));
    return out;
}

MapState imt(const MapState& st, int r, int s) {
    check_center(st, r, s);
    for (int i = 0; i < st.map.n; ++i)
        if (st.map.at(i, s) < st.map.at(i, r)) throw input_error("IMT not defined");
    MapState out = st;
    for (int i = 0; i < out.map.n; ++i) out.map.at(i, s) -= out.map.at(i, r);
    std::vector<Value> xvals = mul(st.map, st.weights);
    out.weights = solve_weights(out.map, xvals);
    for (const auto& w : out.weights)
        if (w.sign() <= 0) throw input_error("valuation does not dominate IMT target");
    out.log.push_back(ElementaryMove::make_imt(r, s));
    return out;
}

MapState relabel(const MapState& st, std::vector<int> perm) {
    const int n = st.map.n;
    if (static_cast<int>(perm.size()) != n) throw input_error("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw input_error("not a permutation");
        seen[p] = true;
    }
    MapState out = st;
    for (int j = 0; j < n; ++j) {
        out.weights[j] = st.weights[perm[j]];
        for (int i = 0; i < n; ++i) out.map.at(i, j) = st.map.at(i, perm[j]);
    }
    out.log.push_back(ElementaryMove::make_relabel(std::move(perm)));
    return out;
}

UnitRow solve_unit_row(const MonoMap& map) {
    mpz_class d = det(map);
    if (d != 1 && d != -1) throw input_error("not unimodular");
    // z = M^{-1} e_1 = det * (first column of the adjugate)
    IntMat adj = adjugate(map);
    UnitRow z(map.n);
    for (int j = 0; j < map.n; ++j) z[j] = d * adj.at(j, 0);
    return z;
}

MapState replay(const MapState& initial, const std::vector<ElementaryMove>& moves) {
    MapState st = initial;
    for (std::size_t k = 0; k < moves.size(); ++k) {
        try {
            const ElementaryMove& mv = moves[k];
            switch (mv.kind) {
                case ElementaryMove::Kind::Blowup: st = blowup(st, mv.r, mv.s); break;
                case ElementaryMove::Kind::IMT: st = imt(st, mv.r, mv.s); break;
                case ElementaryMove::Kind::Relabel: st = relabel(st, mv.perm); break;
            }
        } catch (const input_error& e) {
            throw input_error(std::string(e.what()) + " at move " + std::to_string(k + 1));
        }
    }
    return st;
}

std::vector<Value> solve_weights(const MonoMap& map, const std::vector<Value>& xvals) {
    if (static_cast<int>(xvals.size()) != map.n) throw input_error("value count does not match map dimension");
    mpz_class d = det(map);
    if (d == 0) throw input_error("singular monomial map");
    std::vector<Value> w = mul(adjugate(map), xvals);
    mpq_class inv_det(mpz_class(1), d);
    inv_det.canonicalize();
    for (auto& v : w) v *= inv_det;
    return w;
}

} // namespace valfactor
