#include "sf/series.hpp"

#include <algorithm>
#include <cmath>

namespace sf {

BallReal SeriesResult::ball(long digits) const {
    const double mag = value == 0 ? 0.0 : std::max(0.0, log_abs(value) / std::log(2.0));
    BallReal b = BallReal::exact(value, bits_for_digits(digits) + static_cast<mpfr_prec_t>(mag));
    b.add_error(error);
    return b;
}

namespace {

Rational ceil_of(const Rational& q) {
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
}

// 2^{-J} sum |C| (s)_J / (T - rho)^{s+J}
BigFloat euler_remainder(const std::vector<PoleTerm>& poles, long T, long J) {
    BigFloat total(kRadPrec);
    for (const auto& pt : poles) {
        if (pt.coeff == 0) continue;
        BigFloat term = BigFloat::from(BigInt(abs(pt.coeff.get_num())), kRadPrec, MPFR_RNDU);
        BigFloat den = BigFloat::from(pt.coeff.get_den(), kRadPrec, MPFR_RNDD);
        mpfr_div(term.get(), term.get(), den.get(), MPFR_RNDU);
        BigFloat poch = BigFloat::from(pochhammer(pt.order, J), kRadPrec, MPFR_RNDU);
        mpfr_mul(term.get(), term.get(), poch.get(), MPFR_RNDU);
        BigFloat gap = BigFloat::from(Rational(T) - pt.rho, kRadPrec, MPFR_RNDD);
        mpfr_pow_ui(gap.get(), gap.get(), static_cast<unsigned long>(pt.order + J), MPFR_RNDD);
        mpfr_div(term.get(), term.get(), gap.get(), MPFR_RNDU);
        mpfr_div_2ui(term.get(), term.get(), static_cast<unsigned long>(J), MPFR_RNDU);
        mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDU);
    }
    return total;
}

// A (T+c)^m x^T / (1 - ((T+1+c)/(T+c))^m x), or +inf when the ratio is not below 1.
BigFloat geometric_remainder(const GeometricSummand& g, long T) {
    BigFloat out(kRadPrec);
    const long base = T + g.c;
    if (base <= 0) {
        mpfr_set_inf(out.get(), 1);
        return out;
    }
    BigFloat ratio = BigFloat::from(Rational(base + 1, base), kRadPrec, MPFR_RNDU);
    mpfr_pow_ui(ratio.get(), ratio.get(), static_cast<unsigned long>(g.m), MPFR_RNDU);
    BigFloat x = BigFloat::from(g.x, kRadPrec, MPFR_RNDU);
    mpfr_mul(ratio.get(), ratio.get(), x.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(ratio.get(), 1) >= 0) {
        mpfr_set_inf(out.get(), 1);
        return out;
    }
    mpfr_ui_sub(ratio.get(), 1, ratio.get(), MPFR_RNDD);

    out = BigFloat::from(g.A, kRadPrec, MPFR_RNDU);
    BigFloat f = BigFloat::from(BigInt(base), kRadPrec, MPFR_RNDU);
    mpfr_pow_ui(f.get(), f.get(), static_cast<unsigned long>(g.m), MPFR_RNDU);
    mpfr_mul(out.get(), out.get(), f.get(), MPFR_RNDU);
    mpfr_pow_ui(x.get(), x.get(), static_cast<unsigned long>(T), MPFR_RNDU);
    mpfr_mul(out.get(), out.get(), x.get(), MPFR_RNDU);
    mpfr_div(out.get(), out.get(), ratio.get(), MPFR_RNDU);
    return out;
}

} // namespace

SeriesResult alternating_sum(const AlternatingSummand& g, long t0, long target_digits) {
    SeriesResult res;
    bool any = false;
    Rational rho_max = t0 - 1;
    for (const auto& pt : g.poles) {
        if (pt.order < 1) throw InvalidInput("alternating_sum: pole order must be >= 1");
        if (pt.coeff == 0) continue;
        any = true;
        rho_max = std::max(rho_max, pt.rho);
    }
    if (!any) return res;
    if (rho_max >= t0) throw InvalidInput("alternating_sum: a pole lies in the summation range");

    const BigFloat target = BigFloat::pow10(-target_digits, kRadPrec, MPFR_RNDD);
    const long start = ceil_of(rho_max).get_num().get_si();
    long J = 4, T = 0;
    while (true) {
        T = std::max(t0, start + 2 * J);
        res.error = euler_remainder(g.poles, T, J);
        if (res.error < target) break;
        J += 4;
        if (J > 100000) throw InvariantViolation("alternating_sum: remainder does not shrink");
    }

    Rational head = 0;
    for (long t = t0; t < T; ++t) head += (t % 2 ? -g.eval(t) : g.eval(t));

    // W_u = sum_{j=u}^{J-1} C(j,u) / 2^{j+1}
    Rational tail = 0;
    for (long u = 0; u < J; ++u) {
        Rational w = 0;
        for (long j = u; j < J; ++j) w += Rational(binomial(j, u)) / Rational(BigInt(1) << static_cast<mp_bitcnt_t>(j + 1));
        Rational term = w * g.eval(T + u);
        tail += (u % 2 ? -term : term);
    }
    res.value = head + (T % 2 ? -tail : tail);
    res.terms = (T - t0) + J;
    return res;
}

SeriesResult geometric_sum(const GeometricSummand& g, long t0, long target_digits) {
    SeriesResult res;
    if (g.x < 0 || g.x >= 1) throw InvalidInput("geometric_sum: need 0 <= x < 1");
    if (g.m < 0) throw InvalidInput("geometric_sum: need m >= 0");
    if (g.A == 0 || g.x == 0) {
        // Every term from t = max(t0, 1) on vanishes.
        for (long t = t0; t < std::max(t0, 1L); ++t) res.value += g.eval(t);
        res.terms = std::max(0L, 1 - t0);
        return res;
    }
    const BigFloat target = BigFloat::pow10(-target_digits, kRadPrec, MPFR_RNDD);
    long T = std::max(t0, 1 - g.c);
    while (true) {
        res.error = geometric_remainder(g, T);
        if (res.error < target) break;
        T += std::max(16L, T / 4);
        if (T > 10'000'000) throw InvariantViolation("geometric_sum: remainder does not shrink");
    }
    for (long t = t0; t < T; ++t) res.value += g.eval(t);
    res.terms = T - t0;
    return res;
}

} // namespace sf
