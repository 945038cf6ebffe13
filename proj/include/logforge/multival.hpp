#pragma once

#include <vector>

#include "logforge/binsplit.hpp"
#include "logforge/series.hpp"

namespace logforge {

using RationalMatrix = std::vector<std::vector<Rational>>;

// A full multi-valuation identity X . c = S: the basis logs c recovered as
// rational combinations (rows of X^-1) of the n hypergeometric series S.
struct MultiValuation {
    std::vector<BigInt> basis;
    std::vector<std::vector<long>> X;
    RationalMatrix Xinv;                    // exact
    std::vector<RationalArgument> args;     // u_i / v_i per row
    std::vector<SeriesParams> params;
    std::vector<FlintSeries> series;
    std::vector<double> costs;
    double total_cost = 0;
    std::vector<int> bits_obtained;
};

MultiValuation build_system(const std::vector<BigInt>& basis,
                            const std::vector<std::vector<long>>& X);

// c = X^-1 . [series values]; entry j matches ln(basis[j]) to `digits` digits.
std::vector<BigReal> evaluate_all(const MultiValuation& mv, long digits,
                                  const EvalOptions& opt = {});

// Coefficients e . X^-1 expressing ln(target) over the system's series.
std::vector<Rational> single_log(const MultiValuation& mv, const BigInt& target);

// Exact rational inverse; throws on singular input.
RationalMatrix invert_exact(const std::vector<std::vector<long>>& X);

enum class MachinMode { atanh, atan };

// Machin-like formula totals for arguments 1/x: sum of 8/ln(27/4 x^2 (x^2 -+ 1)^2).
double machin_cost(const std::vector<BigInt>& xs, MachinMode mode);

// Largest coefficient class across terms: ceil(log2) of the degree-2
// denominator coefficient of each term's ratio polynomial.
int machin_bits(const std::vector<BigInt>& xs, MachinMode mode);

}  // namespace logforge
