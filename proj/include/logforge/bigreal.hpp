#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace logforge {

using BigInt = mpz_class;
using Rational = mpq_class;

// ceil(log2(|v|)) for v != 0; 0 for |v| = 1.
long ceil_log2(const BigInt& v);

BigInt pow10_int(unsigned long k);

// Arbitrary-precision real with an explicit working precision in bits.
// Arithmetic results carry the maximum precision of the operands; every
// operation rounds to nearest. Values are immutable after construction
// except through assignment, so sharing across threads is safe.
class BigReal {
public:
    static constexpr long min_prec = 64;

    BigReal() : BigReal(min_prec) {}

    explicit BigReal(long prec_bits) {
        prec_ = prec_bits < min_prec ? min_prec : prec_bits;
        mpfr_init2(v_, prec_);
        mpfr_set_zero(v_, 1);
    }

    BigReal(const BigReal& o) {
        prec_ = o.prec_;
        mpfr_init2(v_, prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept {
        prec_ = o.prec_;
        mpfr_init2(v_, prec_);
        mpfr_swap(v_, o.v_);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec_);
            prec_ = o.prec_;
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) {
            prec_ = o.prec_;
            mpfr_set_prec(v_, o.prec_);
            mpfr_swap(v_, o.v_);
        }
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    static BigReal of_long(long x, long prec_bits) {
        BigReal r(prec_bits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigReal of_int(const BigInt& x, long prec_bits) {
        BigReal r(prec_bits);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static BigReal of_rational(const Rational& x, long prec_bits) {
        BigReal r(prec_bits);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigReal of_double(double x, long prec_bits) {
        BigReal r(prec_bits);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }

    // x * 2^e, exact while the mantissa fits the precision
    static BigReal scaled_int(const BigInt& mant, long e, long prec_bits) {
        BigReal r(prec_bits);
        mpfr_set_z_2exp(r.v_, mant.get_mpz_t(), e, MPFR_RNDN);
        return r;
    }

    long prec_bits() const { return prec_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        if (b.is_zero()) throw std::domain_error("BigReal: division by zero");
        BigReal r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigReal operator-() const {
        BigReal r(prec_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
    BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
    BigReal& operator*=(const BigReal& o) { return *this = *this * o; }

    BigReal abs() const {
        BigReal r(prec_);
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal mul_2exp(long e) const {
        BigReal r(prec_);
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    BigReal mul_int(const BigInt& m) const {
        BigReal r(prec_);
        mpfr_mul_z(r.v_, v_, m.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    BigReal div_int(const BigInt& m) const {
        if (sgn(m) == 0) throw std::domain_error("BigReal: division by zero");
        BigReal r(prec_);
        mpfr_div_z(r.v_, v_, m.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    BigReal mul_rational(const Rational& q) const {
        return mul_int(q.get_num()).div_int(q.get_den());
    }

    BigReal round_to(long prec_bits) const {
        BigReal r(prec_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigInt round_nearest() const {
        BigReal t(prec_);
        mpfr_round(t.v_, v_);
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    BigInt floor_to_int() const {
        BigReal t(prec_);
        mpfr_floor(t.v_, v_);
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return a.cmp(b) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Fixed-point decimal rendering with `frac_digits` digits after the point.
    std::string to_decimal(size_t frac_digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static long join(const BigReal& a, const BigReal& b) {
        return a.prec_ > b.prec_ ? a.prec_ : b.prec_;
    }

    mpfr_t v_;
    long prec_;
};

}  // namespace logforge
