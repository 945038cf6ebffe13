#pragma once

#include <string>
#include <vector>

#include "logforge/bigreal.hpp"

namespace logforge {

// Dense integer-coefficient polynomial, ascending degree. Degrees here never
// exceed 2, so simplicity beats cleverness.
struct Poly {
    std::vector<BigInt> c;

    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

    size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
    const BigInt& lead() const;
    bool is_zero() const { return c.empty(); }

    BigInt eval(long n) const;
    Poly scaled(const BigInt& m) const;
    // substitute n -> n + 1
    Poly shifted_up() const;

    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
};

// The five integers of one hypergeometric logarithm series: value is
// (1/gamma) * sum_{k>=1} (alpha k + beta)/(k(2k-1)) * (nu/delta)^k * h_k
// with h_k the [1,1/2;1/6,5/6] Pochhammer weight. alpha, beta, gamma are the
// raw closed forms in u, v; nu/delta is kept in lowest terms.
struct SeriesParams {
    BigInt alpha, beta, gamma, nu, delta;
};

// sum_{n>=0} A(n)/B(n) * prod_{k=0}^{n-1} P(k)/Q(k)
struct FlintSeries {
    Poly A, B, P, Q;
};

// (coef_p/coef_d) * sum_{n>=1} P(n)/R(n) * prod_{k=1}^{n} R(k)/Q(k)
struct YCruncherSeries {
    BigInt coef_p, coef_d;
    Poly P, R, Q;
};

struct RationalArgument {
    BigInt u, v;
};

// --- log(u/v) -------------------------------------------------------------

SeriesParams log_series_params(const BigInt& u, const BigInt& v);
FlintSeries log_series_flint(const BigInt& u, const BigInt& v);
YCruncherSeries to_ycruncher(const BigInt& u, const BigInt& v);

// --- atanh(d/t), atan(d/t) ------------------------------------------------

FlintSeries atanh_series(const BigInt& d, const BigInt& t);
FlintSeries atan_series(const BigInt& d, const BigInt& t);

// --- convention bridges (index shift handled here) ------------------------

FlintSeries to_flint(const YCruncherSeries& s);
FlintSeries to_flint(const SeriesParams& s);

// --- rate, cost, bit size ---------------------------------------------------

// rho = (u-v)^6 / (108 u^2 v^2 (u+v)^2) in lowest terms
Rational convergence_rate(const BigInt& u, const BigInt& v);
Rational convergence_rate(const Rational& p);

// -8 / ln(rho); the series efficiency measure, lower is faster
double bs_cost(const BigInt& u, const BigInt& v);
double bs_cost(const Rational& p);

// ceil(log2 L) with L the leading coefficient of the reduced denominator
// polynomial of 18 rho k(2k-1)/((6k-1)(6k-5)); L itself via coeff_lead.
BigInt coeff_lead(const Rational& p);
int coeff_bitsize(const BigInt& u, const BigInt& v);
int coeff_bitsize(const Rational& p);

// L < 2^(bits_b - 1)
bool bit_feasible(const Rational& p, int bits_b);

// --- exponent vector -> argument -------------------------------------------

// u = prod p_j^(x_j+), v = prod p_j^(x_j-), reduced to lowest terms.
RationalArgument split_exponents(const std::vector<BigInt>& basis,
                                 const std::vector<long>& x);
Rational power_product(const std::vector<BigInt>& basis, const std::vector<long>& x);

// Convergence-region predicates, exact integer comparisons.
bool in_log_domain(const BigInt& u, const BigInt& v);     // |u/v - 7| < 4 sqrt(3)
bool in_atanh_domain(const BigInt& d, const BigInt& t);   // |d/t| < sqrt(3)/2
bool in_atan_domain(const BigInt& d, const BigInt& t);    // |ratio| < 1

// limit of the term ratio P(k)/Q(k) as k -> infinity (equals rho)
Rational term_ratio_limit(const FlintSeries& s);

}  // namespace logforge
