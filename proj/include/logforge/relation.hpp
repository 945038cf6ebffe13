#pragma once

#include <vector>

#include "logforge/bigreal.hpp"

namespace logforge {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

// Lenstra-Lenstra-Lovasz reduction over exact integer/rational arithmetic.
// Rows are basis vectors. Output spans the same lattice and satisfies the
// size-reduction and Lovasz conditions with the given parameter.
IntMatrix lll_reduce(IntMatrix basis, const Rational& delta_param = Rational(99, 100));

// Integer-relation query: reals[0] is conventionally the random trap entry,
// digits_ds the detection precision in decimal digits.
struct RelationQuery {
    std::vector<BigReal> reals;
    long digits_ds = 40;
};

struct RelationResult {
    bool found = false;           // false: the "no relation" sentinel
    IntVector coeffs;             // length reals.size() when found
};

// Shortest-vector relation search on the standard lattice: identity block
// augmented with a column of round(10^digits_ds * reals[i]). A candidate is
// accepted when |sum r_i reals_i| <= ||r||_1 * 10^-digits_ds.
RelationResult find_relation(const RelationQuery& query);

// true when r is +-(1, 0, 0, ..., 0)
bool is_trivial_relation(const IntVector& r);

}  // namespace logforge
