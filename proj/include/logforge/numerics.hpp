#pragma once

#include <vector>

#include "logforge/bigreal.hpp"

namespace logforge {

// Natural logarithms with a ground-truth algorithm: Taylor series for
// atanh((x - 2^k)/(x + 2^k)) after reducing the argument into [sqrt(2)/2,
// sqrt(2)) by powers of two, summed in exact fixed-point integer arithmetic.
// Deliberately unrelated to the hypergeometric series elsewhere in this
// library so the two can check each other.

// log of a positive rational, accurate to prec_bits.
BigReal ln_rational(const Rational& x, long prec_bits);

BigReal ln_int(const BigInt& n, long prec_bits);

// c_j = log p_j for every basis element; every element must be > 1.
std::vector<BigReal> ln_basis(const std::vector<BigInt>& basis, long prec_bits);

// 2^(-prec_bits), the smallest-scale unit at the given working precision.
BigReal machine_eps(long prec_bits);

// floor(log10(2^prec_bits)): how many decimal digits the precision carries.
long decimal_capacity(long prec_bits);

}  // namespace logforge
