#pragma once

#include "sf/bigint.hpp"

#include <mpfr.h>

#include <string>

namespace sf {

// RAII wrapper over mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat from(const BigInt& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat from(double v, mpfr_prec_t prec);
    // 10^e rounded in the given direction.
    static BigFloat pow10(long e, mpfr_prec_t prec, mpfr_rnd_t rnd);

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    // log10|x| as a double; -inf for zero.
    double log10_abs() const;
    std::string to_string(int digits) const;
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }

private:
    mpfr_t value_;
};

// Interval [mid - rad, mid + rad]; rad is always rounded upward.
class BallReal {
public:
    explicit BallReal(mpfr_prec_t prec = 256);
    static BallReal exact(const Rational& q, mpfr_prec_t prec);
    static BallReal from_parts(BigFloat mid, BigFloat rad);

    const BigFloat& mid() const { return mid_; }
    const BigFloat& rad() const { return rad_; }
    mpfr_prec_t prec() const { return mid_.prec(); }

    BallReal& operator+=(const BallReal& o);
    BallReal& operator-=(const BallReal& o);
    BallReal& operator*=(const BallReal& o);
    friend BallReal operator+(BallReal a, const BallReal& b) { return a += b; }
    friend BallReal operator-(BallReal a, const BallReal& b) { return a -= b; }
    friend BallReal operator*(BallReal a, const BallReal& b) { return a *= b; }
    BallReal operator-() const;
    BallReal times(const Rational& q) const;
    void add_error(const BigFloat& e);

    bool contains_zero() const;
    bool contains(const BallReal& inner) const;
    bool rad_below(const BigFloat& bound) const { return rad_ < bound; }
    // Upper bound on |x| for x in the ball, rounded up.
    BigFloat abs_upper() const;

    std::string mid_string(int digits) const { return mid_.to_string(digits); }
    std::string rad_string() const { return rad_.to_string(6); }

    // Widens rad by one ulp of mid when the last rounding was inexact.
    void absorb_rounding(int ternary);

private:
    BigFloat mid_;
    BigFloat rad_;
};

BallReal log_ball(const Rational& x, mpfr_prec_t prec);
BallReal pi_ball(mpfr_prec_t prec);

inline constexpr mpfr_prec_t kRadPrec = 64;

// Bits needed for roughly `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(long digits);

} // namespace sf
