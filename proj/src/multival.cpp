#include "logforge/multival.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "logforge/numerics.hpp"

namespace logforge {

RationalMatrix invert_exact(const std::vector<std::vector<long>>& X) {
    size_t n = X.size();
    for (const auto& row : X)
        if (row.size() != n) throw std::invalid_argument("invert_exact: matrix not square");
    RationalMatrix a(n, std::vector<Rational>(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(X[i][j]);
        a[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) throw std::domain_error("invert_exact: singular matrix");
        std::swap(a[col], a[piv]);
        Rational d = a[col][col];
        for (size_t j = col; j < 2 * n; ++j) a[col][j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

MultiValuation build_system(const std::vector<BigInt>& basis,
                            const std::vector<std::vector<long>>& X) {
    if (basis.empty() || X.size() != basis.size())
        throw std::invalid_argument("build_system: need an n x n matrix over the basis");
    MultiValuation mv;
    mv.basis = basis;
    mv.X = X;
    mv.Xinv = invert_exact(X);
    mv.total_cost = 0;
    for (const auto& row : X) {
        RationalArgument arg = split_exponents(basis, row);
        mv.params.push_back(log_series_params(arg.u, arg.v));
        mv.series.push_back(log_series_flint(arg.u, arg.v));
        double c = bs_cost(arg.u, arg.v);
        mv.costs.push_back(c);
        mv.total_cost += c;
        mv.bits_obtained.push_back(coeff_bitsize(arg.u, arg.v));
        mv.args.push_back(std::move(arg));
    }
    return mv;
}

std::vector<BigReal> evaluate_all(const MultiValuation& mv, long digits,
                                  const EvalOptions& opt) {
    size_t n = mv.series.size();
    if (n == 0) throw std::invalid_argument("evaluate_all: empty system");
    long inner = digits + 12;
    std::vector<BigReal> s(n);
    if (opt.threads > 1) {
        std::vector<std::future<BigReal>> futs;
        EvalOptions sub = opt;
        sub.threads = 1;
        for (size_t i = 0; i < n; ++i)
            futs.push_back(std::async(std::launch::async, [&, i]() {
                return eval_series(mv.series[i], inner, sub);
            }));
        for (size_t i = 0; i < n; ++i) s[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < n; ++i) s[i] = eval_series(mv.series[i], inner, opt);
    }
    long prec = long(std::ceil(double(digits) * 3.3219280948873626)) + 32;
    std::vector<BigReal> c(n);
    for (size_t j = 0; j < n; ++j) {
        BigReal acc(s[0].prec_bits());
        for (size_t i = 0; i < n; ++i) acc += s[i].mul_rational(mv.Xinv[j][i]);
        c[j] = acc.round_to(prec);
    }
    return c;
}

std::vector<Rational> single_log(const MultiValuation& mv, const BigInt& target) {
    if (sgn(target) <= 0)
        throw std::domain_error("single_log: target must be a positive integer");
    size_t n = mv.basis.size();
    std::vector<long> e(n, 0);
    BigInt rest = target;
    for (size_t j = 0; j < n; ++j) {
        while (rest % mv.basis[j] == 0) {
            rest /= mv.basis[j];
            ++e[j];
        }
    }
    if (rest != 1)
        throw std::domain_error("single_log: target has a factor outside the basis");
    std::vector<Rational> coeff(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) coeff[i] += Rational(e[j]) * mv.Xinv[j][i];
    return coeff;
}

namespace {

BigInt machin_arg_square(const BigInt& x, MachinMode mode) {
    BigInt x2 = x * x;
    BigInt w = mode == MachinMode::atanh ? BigInt(x2 - 1) : BigInt(x2 + 1);
    return 27 * x2 * w * w;  // 4/ratio; cost uses ln of this over 4
}

}  // namespace

double machin_cost(const std::vector<BigInt>& xs, MachinMode mode) {
    if (xs.empty()) throw std::invalid_argument("machin_cost: empty argument list");
    double total = 0;
    for (const BigInt& x : xs) {
        if (x <= 1) throw std::domain_error("machin_cost: arguments must be > 1");
        Rational arg(machin_arg_square(x, mode), 4);
        total += 8.0 / ln_rational(arg, 96).to_double();
    }
    return total;
}

int machin_bits(const std::vector<BigInt>& xs, MachinMode mode) {
    if (xs.empty()) throw std::invalid_argument("machin_bits: empty argument list");
    int best = 0;
    for (const BigInt& x : xs) {
        if (x <= 1) throw std::domain_error("machin_bits: arguments must be > 1");
        // ratio 8(k+1)(2k+1) / (27 x^2 (x^2 -+ 1)^2 (6k+1)(6k+5)): reduce the
        // numerator/denominator contents, then take the k^2 coefficient
        BigInt x2 = x * x;
        BigInt w = mode == MachinMode::atanh ? BigInt(x2 - 1) : BigInt(x2 + 1);
        BigInt den_c = 27 * x2 * w * w;
        BigInt g = gcd(BigInt(8), den_c);
        BigInt lead = 36 * (den_c / g);
        int bits = int(ceil_log2(lead));
        best = std::max(best, bits);
    }
    return best;
}

}  // namespace logforge
