#include "sf/ball.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace sf {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.prec());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::from(const BigInt& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_z(r.value_, v.get_mpz_t(), rnd);
    return r;
}

BigFloat BigFloat::from(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.value_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow10(long e, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec), ten(prec);
    mpfr_set_ui(ten.value_, 10, MPFR_RNDN);
    mpfr_pow_si(r.value_, ten.value_, e, rnd);
    return r;
}

double BigFloat::log10_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    double m = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(exp) * std::log10(2.0);
}

std::string BigFloat::to_string(int digits) const {
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
    const std::size_t cap = static_cast<std::size_t>(digits) + 64;
    std::unique_ptr<char[]> buf(new char[cap]);
    mpfr_snprintf(buf.get(), cap, "%.*Re", digits > 0 ? digits - 1 : 0, value_);
    return buf.get();
}

BallReal::BallReal(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}

BallReal BallReal::exact(const Rational& q, mpfr_prec_t prec) {
    BallReal b(prec);
    int t = mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
    b.absorb_rounding(t);
    return b;
}

BallReal BallReal::from_parts(BigFloat mid, BigFloat rad) {
    BallReal b(mid.prec());
    b.mid_ = std::move(mid);
    mpfr_set(b.rad_.get(), rad.get(), MPFR_RNDU);
    mpfr_abs(b.rad_.get(), b.rad_.get(), MPFR_RNDU);
    return b;
}

void BallReal::absorb_rounding(int ternary) {
    if (ternary == 0 || mid_.is_zero()) return;
    BigFloat ulp(kRadPrec);
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - mid_.prec(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

void BallReal::add_error(const BigFloat& e) {
    BigFloat a(kRadPrec);
    mpfr_abs(a.get(), e.get(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), a.get(), MPFR_RNDU);
}

BallReal& BallReal::operator+=(const BallReal& o) {
    int t = mpfr_add(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    absorb_rounding(t);
    return *this;
}

BallReal& BallReal::operator-=(const BallReal& o) {
    int t = mpfr_sub(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    absorb_rounding(t);
    return *this;
}

BallReal& BallReal::operator*=(const BallReal& o) {
    BigFloat am(kRadPrec), bm(kRadPrec), e(kRadPrec), f(kRadPrec);
    mpfr_abs(am.get(), mid_.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), o.mid_.get(), MPFR_RNDU);
    // |a| rb + |b| ra + ra rb
    mpfr_mul(e.get(), am.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_mul(f.get(), bm.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(e.get(), e.get(), f.get(), MPFR_RNDU);
    mpfr_mul(f.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(rad_.get(), e.get(), f.get(), MPFR_RNDU);
    int t = mpfr_mul(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    absorb_rounding(t);
    return *this;
}

BallReal BallReal::operator-() const {
    BallReal r(*this);
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

BallReal BallReal::times(const Rational& q) const { return *this * exact(q, prec()); }

bool BallReal::contains_zero() const {
    BigFloat a(kRadPrec);
    mpfr_abs(a.get(), mid_.get(), MPFR_RNDD);
    return mpfr_lessequal_p(a.get(), rad_.get()) != 0;
}

bool BallReal::contains(const BallReal& inner) const {
    // |m_in - m| + r_in <= r
    BigFloat d(std::max(prec(), inner.prec()) + 8);
    mpfr_sub(d.get(), inner.mid_.get(), mid_.get(), MPFR_RNDN);
    mpfr_abs(d.get(), d.get(), MPFR_RNDU);
    BigFloat s(kRadPrec);
    mpfr_add(s.get(), d.get(), inner.rad_.get(), MPFR_RNDU);
    return mpfr_lessequal_p(s.get(), rad_.get()) != 0;
}

BigFloat BallReal::abs_upper() const {
    BigFloat a(kRadPrec);
    mpfr_abs(a.get(), mid_.get(), MPFR_RNDU);
    mpfr_add(a.get(), a.get(), rad_.get(), MPFR_RNDU);
    return a;
}

BallReal log_ball(const Rational& x, mpfr_prec_t prec) {
    if (x <= 0) throw InvalidInput("log of non-positive value");
    BigFloat xv(prec + 16);
    int tx = mpfr_set_q(xv.get(), x.get_mpq_t(), MPFR_RNDN);
    BallReal b(prec);
    BigFloat mid(prec);
    int t = mpfr_log(mid.get(), xv.get(), MPFR_RNDN);
    b = BallReal::from_parts(mid, BigFloat(kRadPrec));
    b.absorb_rounding(t);
    if (tx != 0) {
        // |log(x(1+u)) - log x| <= 2|u| for |u| <= 2^{-prec-16}
        BigFloat e(kRadPrec);
        mpfr_set_ui_2exp(e.get(), 1, -(prec + 14), MPFR_RNDU);
        b.add_error(e);
    }
    return b;
}

BallReal pi_ball(mpfr_prec_t prec) {
    BigFloat mid(prec);
    int t = mpfr_const_pi(mid.get(), MPFR_RNDN);
    BallReal b = BallReal::from_parts(mid, BigFloat(kRadPrec));
    b.absorb_rounding(t);
    return b;
}

mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(std::max(digits, 1L)) * 3.3219280948873623)) + 32;
}

} // namespace sf
