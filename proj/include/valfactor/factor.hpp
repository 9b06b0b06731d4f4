#pragma once

// Factorization of nonnegative unimodular monomial maps along the
// valuation: clearing the adjoint unit row to at most two nonzero entries
// by allowable blowups, building zigzag certificates by induction on the
// dimension, and verifying such certificates independently.

#include <string>
#include <vector>

#include "valfactor/monomaps.hpp"
#include "valfactor/perron.hpp"

namespace valfactor {

// Termination measure for runs of allowable clearing blowups, tracked over
// an index set T: alpha counts all nonzero unit-row entries, beta is the
// largest |z_i| over T, gamma is |T|, delta the number of maximizers.
// Lexicographically non-increasing along any allowable run.
struct InvariantTuple {
    mpz_class alpha, beta, gamma, delta;
};

InvariantTuple invariant_tuple(const UnitRow& z, const std::vector<int>& tracked);

// a <= b lexicographically.
bool lex_le(const InvariantTuple& a, const InvariantTuple& b);

// Applies allowable blowups (both center indices carry nonzero unit-row
// entries of the same sign; the nu-larger one is r) until at most two
// entries of the unit row are nonzero.  Among eligible centers the
// lexicographically smallest index pair is chosen, so runs are
// reproducible.  Appends to the state's log.
MapState clear_adjoint_row(const MapState& st, long cap = default_cap);

// Move lists into one upper node: left runs from the lower node before it,
// right from the lower node after it.  Both are sequences of monoidal
// transforms, so only Blowup and Relabel moves appear.
struct Arrow {
    std::vector<ElementaryMove> left, right;
};

// An alternating chain L_0, U_1, L_1, ..., U_k, L_k of maps relative to the
// common lower ring R, with L_0 = identity and L_k = the input map; every
// node is nonnegative with det +-1 and weights positive.
struct ZigzagCert {
    int n = 0;
    MonoMap input;
    std::vector<Value> weights; // weights of the input map's lower variables
    std::vector<MonoMap> nodes; // size 2k + 1
    std::vector<Arrow> arrows;  // size k
};

ZigzagCert zigzag_factor(const MonoMap& map, const std::vector<Value>& weights,
                         long cap = default_cap);

struct VerifyReport {
    bool accepted = false;
    std::string reason; // empty exactly when accepted
};

// Pure check of every certificate invariant by replaying the arrows with
// the public move operations; never throws, hostile input rejects with the
// first failing check named.
VerifyReport verify_zigzag(const ZigzagCert& cert);

} // namespace valfactor
