#include "logforge/numerics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace logforge {

namespace {

// floor(2^prec * atanh(p/q)) for 0 <= p < q, gcd reduction left to callers.
// Classic term-by-term fixed point: the running power is multiplied by p^2
// and floor-divided by q^2 each step, so per-term cost is linear in prec for
// word-sized p, q. Truncation error is below #terms + 2 units of 2^-prec.
BigInt atanh_fixed(const BigInt& p, const BigInt& q, long prec) {
    if (sgn(p) == 0) return 0;
    BigInt p2 = p * p, q2 = q * q;
    BigInt pw = (p << prec) / q;
    BigInt sum = pw;
    unsigned long k = 1;
    while (sgn(pw) != 0) {
        pw = pw * p2 / q2;
        sum += pw / (2 * k + 1);
        ++k;
    }
    return sum;
}

BigInt ln2_fixed(long prec) {
    static std::mutex mu;
    static std::map<long, BigInt> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
    BigInt v = atanh_fixed(1, 3, prec + 1);  // ln 2 = 2 atanh(1/3)
    cache.emplace(prec, v);
    return v;
}

}  // namespace

BigReal ln_rational(const Rational& x, long prec_bits) {
    if (sgn(x) <= 0) throw std::domain_error("ln_rational: argument must be positive");
    long work = prec_bits + 64;
    BigInt u = x.get_num(), v = x.get_den();
    if (u == v) return BigReal(prec_bits);

    // Pick k with u/(v*2^k) in [sqrt(2)/2, sqrt(2)): exact comparisons on
    // u^2 vs 2*(v*2^k)^2 avoid any boundary misclassification.
    long k = long(mpz_sizeinbase(u.get_mpz_t(), 2)) - long(mpz_sizeinbase(v.get_mpz_t(), 2));
    BigInt un = u, q = v;
    if (k >= 0) q <<= k; else un <<= -k;  // un/q == u/(v*2^k), both integral
    while (un * un >= 2 * q * q) { q <<= 1; ++k; }
    while (2 * un * un < q * q) { un <<= 1; --k; }

    BigInt num = un - q, den = un + q;
    BigInt g = gcd(num, den);
    if (sgn(g) != 0) { num /= g; den /= g; }
    int s = sgn(num);
    BigInt a = atanh_fixed(abs(num), den, work);

    BigInt total = BigInt(k) * ln2_fixed(work) + 2 * s * a;
    return BigReal::scaled_int(total, -work, work).round_to(prec_bits);
}

BigReal ln_int(const BigInt& n, long prec_bits) {
    return ln_rational(Rational(n), prec_bits);
}

std::vector<BigReal> ln_basis(const std::vector<BigInt>& basis, long prec_bits) {
    std::vector<BigReal> out;
    out.reserve(basis.size());
    for (const BigInt& p : basis) {
        if (p <= 1) throw std::domain_error("ln_basis: elements must be > 1");
        out.push_back(ln_int(p, prec_bits));
    }
    return out;
}

BigReal machine_eps(long prec_bits) {
    if (prec_bits < BigReal::min_prec)
        throw std::domain_error("machine_eps: prec_bits must be >= 64");
    return BigReal::of_long(1, prec_bits).mul_2exp(-prec_bits);
}

long decimal_capacity(long prec_bits) {
    // floor(prec * log10(2)); 1233/4096 < log10(2) keeps this a safe floor.
    return prec_bits * 1233 / 4096;
}

}  // namespace logforge
