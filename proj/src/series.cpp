#include "logforge/series.hpp"

#include <stdexcept>

#include "logforge/numerics.hpp"

namespace logforge {

const BigInt& Poly::lead() const {
    if (c.empty()) throw std::logic_error("Poly::lead on zero polynomial");
    return c.back();
}

BigInt Poly::eval(long n) const {
    BigInt acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
        acc *= n;
        acc += c[i];
    }
    return acc;
}

Poly Poly::scaled(const BigInt& m) const {
    Poly r;
    r.c.reserve(c.size());
    for (const BigInt& x : c) r.c.push_back(x * m);
    r.trim();
    return r;
}

Poly Poly::shifted_up() const {
    // binomial expansion of c_i (n+1)^i; degree <= 2 in practice
    Poly r;
    r.c.assign(c.size(), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) {
        BigInt binom = 1;
        for (size_t j = 0; j <= i; ++j) {
            r.c[j] += c[i] * binom;
            binom = binom * (i - j) / (j + 1);
        }
    }
    r.trim();
    return r;
}

namespace {

Rational reduced(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

void check_log_argument(const BigInt& u, const BigInt& v) {
    if (sgn(u) <= 0 || sgn(v) <= 0)
        throw std::domain_error("log series: u, v must be positive");
    if (u == v) throw std::domain_error("log series: degenerate argument u == v");
    if (gcd(u, v) != 1)
        throw std::invalid_argument("log series: u, v must be coprime");
}

void check_ratio_argument(const BigInt& d, const BigInt& t) {
    if (sgn(t) <= 0) throw std::domain_error("series: t must be positive");
    if (sgn(d) == 0) throw std::domain_error("series: degenerate argument d == 0");
    if (gcd(abs(d), t) != 1)
        throw std::invalid_argument("series: d, t must be coprime");
}

// (6n+1)(6n+5) and (6n-1)(6n-5), (n+1)(2n+1), n(2n-1)
Poly poly_6p(const BigInt& s) { return Poly({s * 5, s * 36, s * 36}); }
Poly poly_6m(const BigInt& s) { return Poly({s * 5, s * -36, s * 36}); }
Poly poly_2p(const BigInt& s) { return Poly({s, s * 3, s * 2}); }
Poly poly_2m(const BigInt& s) { return Poly({BigInt(0), -s, s * 2}); }

}  // namespace

bool in_log_domain(const BigInt& u, const BigInt& v) {
    // |u/v - 7| < 4 sqrt(3)  <=>  (u - 7v)^2 < 48 v^2
    BigInt a = u - 7 * v;
    return a * a < 48 * v * v;
}

bool in_atanh_domain(const BigInt& d, const BigInt& t) {
    return 4 * d * d < 3 * t * t;
}

bool in_atan_domain(const BigInt& d, const BigInt& t) {
    BigInt d2 = d * d, t2 = t * t, s = t2 + d2;
    return 4 * d2 * d2 * d2 < 27 * t2 * s * s;
}

SeriesParams log_series_params(const BigInt& u, const BigInt& v) {
    check_log_argument(u, v);
    BigInt s = u + v, d = u - v;
    BigInt uv = u * v;
    BigInt m14 = u * u - 14 * uv + v * v;
    BigInt p4 = u * u + 4 * uv + v * v;
    BigInt m8 = u * u - 8 * uv + v * v;
    SeriesParams sp;
    sp.alpha = -2 * s * m14 * p4;
    sp.beta = s * s * s * m8;
    BigInt d5 = d * d * d * d * d;
    sp.gamma = 2 * d5;
    Rational rho = reduced(d5 * d, 108 * uv * uv * s * s);
    sp.nu = rho.get_num();
    sp.delta = rho.get_den();
    return sp;
}

FlintSeries log_series_flint(const BigInt& u, const BigInt& v) {
    check_log_argument(u, v);
    if (!in_log_domain(u, v))
        throw std::domain_error("log series: u/v outside the convergence domain");
    BigInt s = u + v, d = u - v;
    BigInt uv = u * v;
    BigInt m14 = u * u - 14 * uv + v * v;
    BigInt p4 = u * u + 4 * uv + v * v;
    Rational f = reduced(-d, 12 * uv * uv * s);
    Rational r = reduced(d * d * d * d * d * d, 6 * uv * uv * s * s);
    BigInt c0 = u * u * u * u - 14 * u * u * u * v - 94 * uv * uv - 14 * u * v * v * v +
                v * v * v * v;
    FlintSeries fs;
    fs.A = Poly({c0, 2 * m14 * p4}).scaled(f.get_num());
    fs.B = poly_6p(f.get_den());
    fs.P = poly_2p(r.get_num());
    fs.Q = poly_6p(r.get_den());
    return fs;
}

YCruncherSeries to_ycruncher(const BigInt& u, const BigInt& v) {
    check_log_argument(u, v);
    if (!in_log_domain(u, v))
        throw std::domain_error("log series: u/v outside the convergence domain");
    BigInt s = u + v, d = u - v;
    BigInt uv = u * v;
    BigInt m14 = u * u - 14 * uv + v * v;
    BigInt p4 = u * u + 4 * uv + v * v;
    BigInt m8 = u * u - 8 * uv + v * v;
    Rational r = reduced(d * d * d * d * d * d, 6 * uv * uv * s * s);
    Rational coef = reduced(-s * r.get_num(), 2 * d * d * d * d * d);
    YCruncherSeries ys;
    ys.coef_p = coef.get_num();
    ys.coef_d = coef.get_den();
    ys.P = Poly({-s * s * m8, 2 * m14 * p4});
    ys.R = poly_2m(r.get_num());
    ys.Q = poly_6m(r.get_den());
    return ys;
}

FlintSeries atanh_series(const BigInt& d, const BigInt& t) {
    check_ratio_argument(d, t);
    if (!in_atanh_domain(d, t))
        throw std::domain_error("atanh series: |d/t| >= sqrt(3)/2");
    BigInt d2 = d * d, t2 = t * t;
    BigInt w = t2 - d2;
    Rational f = reduced(d, 3 * t * w * w);
    Rational r = reduced(8 * d2 * d2 * d2, 3 * t2 * w * w);
    FlintSeries fs;
    fs.A = Poly({15 * t2 * t2 - 25 * t2 * d2 + 8 * d2 * d2,
                 2 * (3 * t2 - 4 * d2) * (3 * t2 - d2)})
               .scaled(f.get_num());
    fs.B = poly_6p(f.get_den());
    fs.P = poly_2p(r.get_num());
    fs.Q = poly_6p(r.get_den());
    return fs;
}

FlintSeries atan_series(const BigInt& d, const BigInt& t) {
    check_ratio_argument(d, t);
    if (!in_atan_domain(d, t))
        throw std::domain_error("atan series: argument outside the convergence domain");
    BigInt d2 = d * d, t2 = t * t;
    BigInt w = t2 + d2;
    Rational f = reduced(d, 3 * t * w * w);
    Rational r = reduced(-8 * d2 * d2 * d2, 3 * t2 * w * w);
    FlintSeries fs;
    fs.A = Poly({15 * t2 * t2 + 25 * t2 * d2 + 8 * d2 * d2,
                 2 * (3 * t2 + 4 * d2) * (3 * t2 + d2)})
               .scaled(f.get_num());
    fs.B = poly_6p(f.get_den());
    fs.P = poly_2p(r.get_num());
    fs.Q = poly_6p(r.get_den());
    return fs;
}

FlintSeries to_flint(const YCruncherSeries& s) {
    FlintSeries fs;
    fs.A = s.P.shifted_up().scaled(s.coef_p);
    fs.B = s.Q.shifted_up().scaled(s.coef_d);
    fs.P = s.R.shifted_up();
    fs.Q = s.Q.shifted_up();
    return fs;
}

FlintSeries to_flint(const SeriesParams& s) {
    Rational rr = reduced(18 * s.nu, s.delta);
    FlintSeries fs;
    fs.A = Poly({s.alpha + s.beta, s.alpha}).scaled(rr.get_num());
    fs.B = poly_6p(rr.get_den() * s.gamma);
    fs.P = poly_2p(rr.get_num());
    fs.Q = poly_6p(rr.get_den());
    return fs;
}

Rational convergence_rate(const BigInt& u, const BigInt& v) {
    if (u == v) throw std::domain_error("convergence_rate: degenerate argument u == v");
    BigInt s = u + v, d = u - v, uv = u * v;
    return reduced(d * d * d * d * d * d, 108 * uv * uv * s * s);
}

Rational convergence_rate(const Rational& p) {
    return convergence_rate(p.get_num(), p.get_den());
}

double bs_cost(const Rational& p) {
    Rational rho = convergence_rate(p);
    if (rho >= 1) throw std::domain_error("bs_cost: divergent series (rho >= 1)");
    BigReal l = ln_rational(rho, 96);
    return -8.0 / l.to_double();
}

double bs_cost(const BigInt& u, const BigInt& v) {
    return bs_cost(reduced(u, v));
}

BigInt coeff_lead(const Rational& p) {
    BigInt u = p.get_num(), v = p.get_den();
    BigInt s = u + v, d = u - v, uv = u * v;
    Rational rr = reduced(d * d * d * d * d * d, 6 * uv * uv * s * s);
    return 36 * rr.get_den();
}

int coeff_bitsize(const Rational& p) {
    return int(ceil_log2(coeff_lead(p)));
}

int coeff_bitsize(const BigInt& u, const BigInt& v) {
    return coeff_bitsize(reduced(u, v));
}

bool bit_feasible(const Rational& p, int bits_b) {
    BigInt bound = BigInt(1) << (bits_b - 1);
    return coeff_lead(p) < bound;
}

Rational power_product(const std::vector<BigInt>& basis, const std::vector<long>& x) {
    if (basis.size() != x.size())
        throw std::invalid_argument("power_product: size mismatch");
    BigInt num = 1, den = 1;
    for (size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 0) continue;
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), basis[j].get_mpz_t(),
                   static_cast<unsigned long>(x[j] > 0 ? x[j] : -x[j]));
        if (x[j] > 0) num *= pw; else den *= pw;
    }
    return reduced(num, den);
}

RationalArgument split_exponents(const std::vector<BigInt>& basis,
                                 const std::vector<long>& x) {
    bool all_zero = true;
    for (long e : x)
        if (e != 0) { all_zero = false; break; }
    if (all_zero)
        throw std::domain_error("split_exponents: all-zero exponent vector");
    Rational p = power_product(basis, x);
    return RationalArgument{p.get_num(), p.get_den()};
}

Rational term_ratio_limit(const FlintSeries& s) {
    Rational q(s.P.lead(), s.Q.lead());
    q.canonicalize();
    return q;
}

}  // namespace logforge
