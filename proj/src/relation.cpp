#include "logforge/relation.hpp"

#include <stdexcept>

#include "logforge/numerics.hpp"

namespace logforge {

namespace {

Rational dot_rows(const IntVector& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

struct GramSchmidt {
    std::vector<std::vector<Rational>> star;  // orthogonalized rows
    std::vector<std::vector<Rational>> mu;    // mu[i][j], j < i
    std::vector<Rational> norm2;              // ||b*_i||^2

    // Recompute row i from rows < i. Size-reducing b_i leaves star_j (j != i)
    // and the mu entries of later rows untouched, so refreshing a single row
    // is enough there; swaps invalidate the whole suffix instead.
    void compute_row(const IntMatrix& b, size_t i) {
        size_t m = b[0].size();
        for (size_t k = 0; k < m; ++k) star[i][k] = Rational(b[i][k]);
        for (size_t j = 0; j < i; ++j) {
            if (sgn(norm2[j]) == 0)
                throw std::domain_error("lll_reduce: rank-deficient basis");
            Rational d = dot_rows(b[i], star[j]);
            mu[i][j] = d / norm2[j];
            for (size_t k = 0; k < m; ++k) star[i][k] -= mu[i][j] * star[j][k];
        }
        Rational s = 0;
        for (size_t k = 0; k < m; ++k) s += star[i][k] * star[i][k];
        norm2[i] = s;
    }

    void compute(const IntMatrix& b, size_t from) {
        size_t n = b.size();
        star.resize(n, std::vector<Rational>(b[0].size()));
        mu.resize(n, std::vector<Rational>(n));
        norm2.resize(n);
        for (size_t i = from; i < n; ++i) compute_row(b, i);
    }
};

BigInt round_rational(const Rational& q) {
    BigInt num = q.get_num(), den = q.get_den();
    BigInt quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem > den) quo += 1;
    return quo;
}

}  // namespace

IntMatrix lll_reduce(IntMatrix b, const Rational& delta_param) {
    if (b.empty()) return b;
    if (delta_param <= Rational(1, 4) || delta_param >= 1)
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
    size_t n = b.size();
    GramSchmidt gs;
    gs.compute(b, 0);
    if (sgn(gs.norm2[n - 1]) == 0)
        throw std::domain_error("lll_reduce: rank-deficient basis");

    size_t k = 1;
    while (k < n) {
        // size reduction against all previous rows
        for (size_t j = k; j-- > 0;) {
            Rational mu = gs.mu[k][j];
            if (2 * abs(mu.get_num()) > mu.get_den()) {
                BigInt r = round_rational(mu);
                for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[j][c];
                gs.compute_row(b, k);
            }
        }
        Rational lhs = gs.norm2[k];
        Rational rhs = (delta_param - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k - 1], b[k]);
            gs.compute(b, k - 1);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return b;
}

bool is_trivial_relation(const IntVector& r) {
    if (r.empty() || abs(r[0]) != 1) return false;
    for (size_t i = 1; i < r.size(); ++i)
        if (sgn(r[i]) != 0) return false;
    return true;
}

RelationResult find_relation(const RelationQuery& query) {
    size_t n1 = query.reals.size();
    if (n1 < 2) throw std::invalid_argument("find_relation: need at least two reals");
    if (query.digits_ds <= 0)
        throw std::invalid_argument("find_relation: digits_ds must be positive");

    long max_mag = 8;  // generous bound on log10 of the inputs here
    for (const BigReal& r : query.reals) {
        if (query.digits_ds + max_mag > decimal_capacity(r.prec_bits()))
            throw std::domain_error(
                "find_relation: internal precision exceeds the reals' precision");
    }

    BigInt scale = pow10_int(static_cast<unsigned long>(query.digits_ds));
    IntMatrix lattice(n1, IntVector(n1 + 1, BigInt(0)));
    for (size_t i = 0; i < n1; ++i) {
        lattice[i][i] = 1;
        lattice[i][n1] = query.reals[i].mul_int(scale).round_nearest();
    }

    IntMatrix red = lll_reduce(std::move(lattice));

    // minimum full-row Euclidean norm, first on ties
    size_t best = 0;
    BigInt best_norm;
    for (size_t i = 0; i < red.size(); ++i) {
        BigInt s = 0;
        for (const BigInt& x : red[i]) s += x * x;
        if (i == 0 || s < best_norm) { best_norm = s; best = i; }
    }

    IntVector r(red[best].begin(), red[best].begin() + n1);

    // sign normalization: first nonzero of the tail (entries 1..n) positive,
    // falling back to the head entry for length-1 tails of zeros
    int pivot = 0;
    for (size_t i = 1; i < r.size() && pivot == 0; ++i) pivot = sgn(r[i]);
    if (pivot == 0) pivot = sgn(r[0]);
    if (pivot < 0)
        for (BigInt& x : r) x = -x;

    // acceptance: |sum r_i v_i| <= ||r||_1 * 10^-ds
    long prec = query.reals[0].prec_bits();
    BigReal resid(prec);
    BigInt l1 = 0;
    for (size_t i = 0; i < n1; ++i) {
        resid += query.reals[i].mul_int(r[i]);
        l1 += abs(r[i]);
    }
    if (l1 == 0) return RelationResult{false, {}};
    BigReal thresh = BigReal::of_int(l1, prec) / BigReal::of_int(scale, prec);
    if (resid.abs() <= thresh) return RelationResult{true, std::move(r)};
    return RelationResult{false, {}};
}

}  // namespace logforge
