#pragma once

// Test-side reference implementations, deliberately written with different
// algorithms than the library paths they check.

#include <vector>

#include "logforge/search.hpp"
#include "logforge/series.hpp"

namespace oracles {

using logforge::BigInt;
using logforge::BigReal;
using logforge::Rational;

// Exact rational partial sum of sum_{n=0}^{N-1} A(n)/B(n) prod_{k<n} P(k)/Q(k),
// evaluated term by term with mpq arithmetic.
Rational partial_sum(const logforge::FlintSeries& s, long terms);

// pi from the Machin formula 16 atan(1/5) - 4 atan(1/239), alternating
// Taylor series in exact fixed point.
BigReal machin_pi(long prec_bits);

// atan(d/t) by direct alternating Taylor summation.
BigReal atan_taylor(long d, long t, long prec_bits);

// Naive full-lattice double/triple-loop enumeration: every sign-normalized x
// with 0 < |x.c| < tol passing the bit test, sorted by epsilon then lex.
// Bit feasibility recomputed from scratch here (gcd + leading coefficient).
std::vector<std::vector<long>> naive_enumeration(const std::vector<BigInt>& basis,
                                                 const std::vector<long>& bounds,
                                                 double tol, int bits_b,
                                                 long prec_bits);

// Shortest nonzero vector of the lattice spanned by the rows, by scanning a
// coefficient box.
BigInt shortest_vector_norm2(const std::vector<std::vector<BigInt>>& rows, long box);

}  // namespace oracles
