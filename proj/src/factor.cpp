#include "valfactor/factor.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "valfactor/errors.hpp"

namespace valfactor {

InvariantTuple invariant_tuple(const UnitRow& z, const std::vector<int>& tracked) {
    InvariantTuple t{0, 0, mpz_class(tracked.size()), 0};
    for (const mpz_class& e : z)
        if (e != 0) ++t.alpha;
    for (int i : tracked) {
        mpz_class m = abs(z[static_cast<std::size_t>(i)]);
        if (m > t.beta) t.beta = m;
    }
    for (int i : tracked)
        if (abs(z[static_cast<std::size_t>(i)]) == t.beta) ++t.delta;
    return t;
}

bool lex_le(const InvariantTuple& a, const InvariantTuple& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.beta != b.beta) return a.beta < b.beta;
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.delta <= b.delta;
}

MapState clear_adjoint_row(const MapState& st, long cap) {
    if (!nonnegative(st.map)) throw input_error("negative exponent in map");
    for (const Value& w : st.weights)
        if (w.sign() <= 0) throw input_error("nonpositive weight");

    MapState cur = st;
    long steps = 0;
    for (;;) {
        UnitRow z = solve_unit_row(cur.map);
        int nonzero = 0;
        for (const mpz_class& e : z)
            if (e != 0) ++nonzero;
        if (nonzero <= 2) return cur;

        // Allowable center: both unit-row entries nonzero with equal sign.
        // The smallest such index pair keeps runs reproducible.
        int bi = -1, bj = -1;
        for (int i = 0; i < cur.map.n && bi < 0; ++i) {
            if (z[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = i + 1; j < cur.map.n; ++j) {
                if (sgn(z[static_cast<std::size_t>(i)]) ==
                    sgn(z[static_cast<std::size_t>(j)])) {
                    bi = i;
                    bj = j;
                    break;
                }
            }
        }
        // Three or more nonzero integers with x . z = e_1 over a
        // nonnegative x always repeat a sign.
        if (bi < 0) throw internal_error("no allowable center among nonzero unit-row entries");

        Ordering ord = compare(cur.weights[static_cast<std::size_t>(bi)],
                               cur.weights[static_cast<std::size_t>(bj)]);
        if (ord == Ordering::Equal) throw input_error("dependent weights");
        int r = ord == Ordering::Greater ? bi : bj;
        int s = r == bi ? bj : bi;
        cur = blowup(cur, r, s);
        if (++steps > cap) throw cap_error("adjoint clearing cap exceeded");
    }
}

namespace {

struct CertPieces {
    std::vector<MonoMap> nodes;
    std::vector<Arrow> arrows;
};

MonoMap embed_map(const MonoMap& sub) {
    MonoMap out(sub.n + 1);
    out.at(0, 0) = 1;
    for (int i = 0; i < sub.n; ++i)
        for (int j = 0; j < sub.n; ++j) out.at(i + 1, j + 1) = sub.at(i, j);
    return out;
}

ElementaryMove embed_move(const ElementaryMove& mv) {
    if (mv.kind == ElementaryMove::Kind::Relabel) {
        std::vector<int> perm(mv.perm.size() + 1);
        perm[0] = 0;
        for (std::size_t j = 0; j < mv.perm.size(); ++j) perm[j + 1] = mv.perm[j] + 1;
        return ElementaryMove::make_relabel(std::move(perm));
    }
    if (mv.kind == ElementaryMove::Kind::Blowup)
        return ElementaryMove::make_blowup(mv.r + 1, mv.s + 1);
    return ElementaryMove::make_imt(mv.r + 1, mv.s + 1);
}

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j)
        inv[static_cast<std::size_t>(perm[j])] = static_cast<int>(j);
    return inv;
}

// Reverses a log of IMTs and relabels into the monoidal moves that climb
// back up: each col_s -= col_r undoes as a blowup at the same center.
std::vector<ElementaryMove> reverse_as_monoidal(const std::vector<ElementaryMove>& log) {
    std::vector<ElementaryMove> out;
    out.reserve(log.size());
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        switch (it->kind) {
        case ElementaryMove::Kind::IMT:
            out.push_back(ElementaryMove::make_blowup(it->r, it->s));
            break;
        case ElementaryMove::Kind::Relabel:
            out.push_back(ElementaryMove::make_relabel(inverse_perm(it->perm)));
            break;
        case ElementaryMove::Kind::Blowup:
            throw internal_error("blowup in a descent log");
        }
    }
    return out;
}

// Greedy column peeling for 2x2 maps: subtract one column from the other
// while nonnegativity allows.  Nonnegative unimodular 2x2 maps peel down
// exactly to a permutation matrix, and the reversed peels climb back as
// blowups, so the whole factorization is a single forward arrow.
CertPieces factor_dim2(const MapState& state, long cap) {
    const MonoMap& m = state.map;
    IntMat cur = m;
    std::vector<std::pair<int, int>> peels;
    long steps = 0;
    for (;;) {
        if (cur == IntMat::identity(2)) break;
        int pr = -1, ps = -1;
        for (int r = 0; r < 2 && pr < 0; ++r) {
            int s = 1 - r;
            if (cur.at(0, s) >= cur.at(0, r) && cur.at(1, s) >= cur.at(1, r)) {
                pr = r;
                ps = s;
            }
        }
        if (pr < 0) break; // permutation stall
        cur.at(0, ps) -= cur.at(0, pr);
        cur.at(1, ps) -= cur.at(1, pr);
        peels.emplace_back(pr, ps);
        if (++steps > cap) throw cap_error("column reduction cap exceeded");
    }

    std::vector<Value> xvals = mul(m, state.weights);
    MapState up = make_state(IntMat::identity(2), xvals);
    if (!(cur == IntMat::identity(2))) {
        // Any stall off the identity is the transposition.
        if (cur.at(0, 0) != 0 || cur.at(0, 1) != 1 || cur.at(1, 0) != 1 ||
            cur.at(1, 1) != 0)
            throw internal_error("column peeling stalled off a permutation");
        up = relabel(up, {1, 0});
    }
    for (auto it = peels.rbegin(); it != peels.rend(); ++it)
        up = blowup(up, it->first, it->second);
    if (!(up.map == m)) throw internal_error("peeling replay mismatch");

    CertPieces out;
    out.nodes = {IntMat::identity(2), m, m};
    out.arrows.push_back({std::move(up.log), {}});
    return out;
}

CertPieces factor_rec(const MapState& state, long cap) {
    const int n = state.map.n;
    if (state.map == IntMat::identity(n)) return {{state.map}, {}};
    if (n == 2) return factor_dim2(state, cap);
    if (n < 2) throw internal_error("non-identity map below dimension 2");

    MapState start = state;
    start.log.clear();
    MapState cleared = clear_adjoint_row(start, cap);
    std::vector<ElementaryMove> right = cleared.log;

    // Descend from the cleared ring by column subtractions until some
    // column equals e_1.  All such subtractions are later reversed as
    // blowups, so this whole block stays inside one arrow.
    MapState cur = cleared;
    cur.log.clear();
    long steps = 0;
    auto run_imt = [&](int r, int s, const mpz_class& times) {
        for (mpz_class k = 0; k < times; ++k) {
            try {
                cur = imt(cur, r, s);
            } catch (const input_error& e) {
                throw internal_error(std::string("promised column subtraction failed: ") +
                                     e.what());
            }
            if (++steps > cap) throw cap_error("column reduction cap exceeded");
        }
    };

    UnitRow z = solve_unit_row(cur.map);
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
        if (z[static_cast<std::size_t>(i)] != 0) nz.push_back(i);
    if (nz.empty()) throw internal_error("unit row vanished");
    if (nz.size() > 2) throw internal_error("unit row not cleared to two entries");

    int col = -1;
    if (nz.size() == 1) {
        col = nz[0];
    } else {
        const int p = nz[0], q = nz[1];
        for (;;) {
            z = solve_unit_row(cur.map);
            const mpz_class& zp = z[static_cast<std::size_t>(p)];
            const mpz_class& zq = z[static_cast<std::size_t>(q)];
            if (zp == 0) {
                col = q;
                break;
            }
            if (zq == 0) {
                col = p;
                break;
            }
            if (zp < 0 && zq < 0) throw internal_error("unit-row pair is doubly negative");
            if (zp > 0 && zq > 0) {
                // A nonnegative row pairing to 1 against two positive
                // entries pins one product to 1 and the other to 0.
                if (cur.map.at(0, p) * zp == 1) col = p;
                else if (cur.map.at(0, q) * zq == 1) col = q;
                else throw internal_error("positive unit-row pair without unit product");
                break;
            }
            const int neg = zp < 0 ? p : q;
            const int pos = zp < 0 ? q : p;
            mpz_class m = (-z[static_cast<std::size_t>(neg)]) / z[static_cast<std::size_t>(pos)];
            if (m > 0) {
                run_imt(neg, pos, m);
                continue;
            }
            mpz_class steps_back =
                z[static_cast<std::size_t>(pos)] / (-z[static_cast<std::size_t>(neg)]);
            if (steps_back <= 0) throw internal_error("stalled unit-row reduction");
            if (z[static_cast<std::size_t>(neg)] == -1) {
                run_imt(pos, neg, z[static_cast<std::size_t>(pos)] - 1);
                run_imt(neg, pos, 1);
                col = pos;
                break;
            }
            run_imt(pos, neg, steps_back);
        }
    }

    z = solve_unit_row(cur.map);
    if (z[static_cast<std::size_t>(col)] != 1)
        throw internal_error("terminal unit-row entry is not 1");
    for (int i = 0; i < n; ++i)
        if (cur.map.at(i, col) != (i == 0 ? 1 : 0))
            throw internal_error("terminal column is not the first basis vector");

    // Row clearing: subtracting the e_1 column strips the first row
    // without touching any other row.
    for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        mpz_class entry = cur.map.at(0, j);
        run_imt(col, j, entry);
    }

    if (col != 0) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[0], perm[static_cast<std::size_t>(col)]);
        cur = relabel(cur, perm);
    }
    for (int i = 1; i < n; ++i)
        if (cur.map.at(i, 0) != 0 || cur.map.at(0, i) != 0)
            throw internal_error("descent did not reach a bordered map");
    if (cur.map.at(0, 0) != 1) throw internal_error("bordered corner is not 1");

    MonoMap block(n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) block.at(i - 1, j - 1) = cur.map.at(i, j);
    std::vector<Value> wsub(cur.weights.begin() + 1, cur.weights.end());
    CertPieces inner = factor_rec(make_state(block, std::move(wsub)), cap);

    CertPieces out;
    out.nodes.reserve(inner.nodes.size() + 2);
    for (const MonoMap& node : inner.nodes) out.nodes.push_back(embed_map(node));
    out.arrows.reserve(inner.arrows.size() + 1);
    for (const Arrow& a : inner.arrows) {
        Arrow e;
        for (const ElementaryMove& mv : a.left) e.left.push_back(embed_move(mv));
        for (const ElementaryMove& mv : a.right) e.right.push_back(embed_move(mv));
        out.arrows.push_back(std::move(e));
    }
    if (!(out.nodes.back() == cur.map)) throw internal_error("bordered splice mismatch");

    if (right.empty() && cur.log.empty()) return out;

    Arrow top{reverse_as_monoidal(cur.log), std::move(right)};
    MapState probe = replay(MapState{cur.map, cur.weights, {}}, top.left);
    if (!(probe.map == cleared.map)) throw internal_error("left arrow replay mismatch");
    out.nodes.push_back(cleared.map);
    out.nodes.push_back(state.map);
    out.arrows.push_back(std::move(top));
    return out;
}

} // namespace

ZigzagCert zigzag_factor(const MonoMap& map, const std::vector<Value>& weights, long cap) {
    if (map.n < 2) throw input_error("dimension too small");
    mpz_class d = det(map);
    if (d != 1 && d != -1) throw input_error("not unimodular");
    if (!nonnegative(map)) throw input_error("negative exponent in map");
    if (static_cast<int>(weights.size()) != map.n)
        throw input_error("weight count does not match map dimension");
    for (const Value& w : weights)
        if (w.sign() <= 0) throw input_error("nonpositive weight");
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = i + 1; j < weights.size(); ++j)
            if (compare(weights[i], weights[j]) == Ordering::Equal)
                throw input_error("dependent weights");

    CertPieces pieces = factor_rec(make_state(map, weights), cap);
    return ZigzagCert{map.n, map, weights, std::move(pieces.nodes),
                      std::move(pieces.arrows)};
}

namespace {

VerifyReport reject(std::string reason) { return VerifyReport{false, std::move(reason)}; }

std::string node_tag(std::size_t idx) { return "node " + std::to_string(idx + 1); }

} // namespace

VerifyReport verify_zigzag(const ZigzagCert& cert) {
    try {
        if (cert.n < 1) return reject("dimension too small");
        if (cert.input.n != cert.n) return reject("input map dimension mismatch");
        if (static_cast<int>(cert.weights.size()) != cert.n)
            return reject("weight count does not match map dimension");
        if (cert.nodes.empty() || cert.nodes.size() % 2 == 0)
            return reject("node count is not odd");
        if (cert.arrows.size() * 2 + 1 != cert.nodes.size())
            return reject("arrow count does not match node count");

        for (const Value& w : cert.weights)
            if (w.sign() <= 0) return reject("nonpositive weight");
        for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
            if (cert.nodes[i].n != cert.n)
                return reject(node_tag(i) + " has wrong dimension");
            if (!nonnegative(cert.nodes[i]))
                return reject(node_tag(i) + " has a negative exponent");
            mpz_class d = det(cert.nodes[i]);
            if (d != 1 && d != -1) return reject(node_tag(i) + " is not unimodular");
        }
        if (!(cert.nodes.front() == IntMat::identity(cert.n)))
            return reject("first node is not the identity");
        if (!(cert.nodes.back() == cert.input))
            return reject("final node differs from the input map");

        std::vector<Value> xvals = mul(cert.input, cert.weights);
        std::vector<std::vector<Value>> node_weights;
        node_weights.reserve(cert.nodes.size());
        for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
            std::vector<Value> w = solve_weights(cert.nodes[i], xvals);
            for (const Value& e : w)
                if (e.sign() <= 0)
                    return reject("valuation does not dominate " + node_tag(i));
            node_weights.push_back(std::move(w));
        }

        for (std::size_t k = 0; k < cert.arrows.size(); ++k) {
            const Arrow& arrow = cert.arrows[k];
            const std::size_t upper = 2 * k + 1;
            for (const auto* side : {&arrow.left, &arrow.right})
                for (const ElementaryMove& mv : *side)
                    if (mv.kind == ElementaryMove::Kind::IMT)
                        return reject("arrow into " + node_tag(upper) +
                                      " contains a non-monoidal move");

            const std::size_t lo_left = upper - 1, lo_right = upper + 1;
            MapState from_left{cert.nodes[lo_left], node_weights[lo_left], {}};
            try {
                from_left = replay(from_left, arrow.left);
            } catch (const input_error& e) {
                return reject("left arrow into " + node_tag(upper) + ": " + e.what());
            }
            if (!(from_left.map == cert.nodes[upper]))
                return reject("arrow replay mismatch at " + node_tag(upper) + " (left)");

            MapState from_right{cert.nodes[lo_right], node_weights[lo_right], {}};
            try {
                from_right = replay(from_right, arrow.right);
            } catch (const input_error& e) {
                return reject("right arrow into " + node_tag(upper) + ": " + e.what());
            }
            if (!(from_right.map == cert.nodes[upper]))
                return reject("arrow replay mismatch at " + node_tag(upper) + " (right)");
        }
        return VerifyReport{true, ""};
    } catch (const std::exception& e) {
        return reject(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace valfactor
