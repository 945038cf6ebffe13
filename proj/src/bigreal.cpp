#include "logforge/bigreal.hpp"

#include <cstdlib>
#include <memory>

namespace logforge {

long ceil_log2(const BigInt& v) {
    if (sgn(v) == 0) throw std::domain_error("ceil_log2: zero argument");
    BigInt a = abs(v);
    size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);  // floor(log2)+1
    bool pow2 = mpz_scan1(a.get_mpz_t(), 0) == bits - 1;
    return pow2 ? long(bits) - 1 : long(bits);
}

BigInt pow10_int(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

std::string BigReal::to_decimal(size_t frac_digits) const {
    if (is_zero()) {
        std::string s = "0.";
        s.append(frac_digits, '0');
        return s;
    }
    // Scale to an integer carrying frac_digits decimals, then place the point.
    BigReal scaled = mul_int(pow10_int(frac_digits));
    BigInt z = scaled.round_nearest();
    bool neg = sgn(z) < 0;
    if (neg) z = -z;
    std::string digits = z.get_str();
    if (digits.size() <= frac_digits)
        digits.insert(0, frac_digits - digits.size() + 1, '0');
    digits.insert(digits.size() - frac_digits, ".");
    return neg ? "-" + digits : digits;
}

}  // namespace logforge
