#pragma once

// Monomial map state and the elementary moves that factor such maps:
// monoidal transforms (column additions along the valuation), inverse
// monoidal transforms (nonnegativity-preserving column subtractions),
// relabelings, the adjoint unit row, and deterministic replay of move logs.

#include <vector>

#include "valfactor/matrix.hpp"
#include "valfactor/values.hpp"

namespace valfactor {

// Row i gives x_i = prod_j y_j^{M(i,j)}, so x-values are M * (y-weights).
// Entries are nonnegative and det is +1 or -1 everywhere in this library.
using MonoMap = IntMat;

struct ElementaryMove {
    enum class Kind { Blowup, IMT, Relabel };
    Kind kind = Kind::Blowup;
    // Blowup and IMT centers, 0-based.
    int r = -1;
    int s = -1;
    // Relabel only: slot j receives the variable previously labeled perm[j].
    std::vector<int> perm;

    static ElementaryMove make_blowup(int r, int s);
    static ElementaryMove make_imt(int r, int s);
    static ElementaryMove make_relabel(std::vector<int> perm);

    bool operator==(const ElementaryMove&) const = default;
};

// A snapshot of one ring in a factorization chain: the map into it, the
// weights of its variables, and the moves applied since the state was made.
// The induced x-values (map * weights) agree across the whole log.
struct MapState {
    MonoMap map;
    std::vector<Value> weights;
    std::vector<ElementaryMove> log;
};

MapState make_state(MonoMap map, std::vector<Value> weights);

// col_s += col_r, allowable when nu(y_r) > nu(y_s); the substitution is
// y_r = y'_r * y'_s, so w_r drops to w_r - w_s and stays positive.
MapState blowup(const MapState& st, int r, int s);

// col_s -= col_r, defined when no entry drops below zero.  The result lies
// below the input ring, so its weights are re-solved from the induced
// x-values and must all come out positive.
MapState imt(const MapState& st, int r, int s);

MapState relabel(const MapState& st, std::vector<int> perm);

// z with map * z = e_1; integer because |det| = 1.
using UnitRow = std::vector<mpz_class>;
UnitRow solve_unit_row(const MonoMap& map);

// Folds the moves over the state; the first violated precondition is
// reported with its 1-based move index.
MapState replay(const MapState& initial, const std::vector<ElementaryMove>& moves);

// Unique w with map * w = xvals, by exact adjugate solve.
std::vector<Value> solve_weights(const MonoMap& map, const std::vector<Value>& xvals);

} // namespace valfactor
