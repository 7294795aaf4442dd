#include "sf/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>

namespace sf {

namespace {

// Li_s(x) as an exact partial sum plus error, |x| <= 1.
SeriesResult li_series(long s, const Rational& x, long target_digits) {
    if (s < 1) throw InvalidInput("polylog: s must be >= 1");
    if (abs(x) > 1) throw InvalidInput("polylog: need |x| <= 1");
    if (x == 1) {
        if (s == 1) throw InvalidInput("polylog: Li_1 diverges at x = 1");
        // zeta(s) = -Li_s(-1) 2^{s-1} / (2^{s-1} - 1)
        SeriesResult eta = li_series(s, -1, target_digits + 1);
        const Rational two_pow(BigInt(1) << static_cast<mp_bitcnt_t>(s - 1));
        const Rational f = -two_pow / (two_pow - 1);
        eta.value *= f;
        BigFloat fb = BigFloat::from(Rational(abs(f)), kRadPrec, MPFR_RNDU);
        mpfr_mul(eta.error.get(), eta.error.get(), fb.get(), MPFR_RNDU);
        return eta;
    }
    if (x == -1) {
        AlternatingSummand g;
        g.eval = [s](long t) -> Rational { return Rational(1) / Rational(ipow(BigInt(t), static_cast<unsigned long>(s))); };
        g.poles.push_back({0, s, 1});
        return alternating_sum(g, 1, target_digits);
    }
    GeometricSummand g;
    g.eval = [s, x](long t) -> Rational { return rpow(x, t) / Rational(ipow(BigInt(t), static_cast<unsigned long>(s))); };
    g.A = 1;
    g.x = abs(x);
    return geometric_sum(g, 1, target_digits);
}

void check_shape(const CoeffTable& t, const Params& params, long p) {
    params.validate();
    if (t.a != params.a || t.n != params.n) throw InvalidInput("table shape does not match params (a, n)");
    if (p < 0 || p > params.h) throw InvalidInput("p must satisfy 0 <= p <= h");
}

// q^{(r+1)n+k-1} (z0 (1 - z0))^{k-1} delta_k / (k-1)!, with delta_k for a+h and (r+1)n.
Rational form_scale(const Params& params, long k) {
    const long N = params.rn() + params.n;
    const BigInt delta = denominator(k, params.a + params.h, N).value();
    Rational s = Rational(delta) / Rational(factorial(k - 1));
    s *= rpow(Rational(params.q), N + k - 1);
    s *= rpow(params.z0 * (Rational(1) - params.z0), k - 1);
    return s;
}

// Coefficients of c'_{i,j} = c_{i,j} (-1)^p (i)_p with exponent i + p.
struct ShiftedTerm {
    long j;
    long m;
    Rational c;
};

std::vector<ShiftedTerm> derivative_terms(const CoeffTable& t, long p) {
    std::vector<ShiftedTerm> out;
    for (long i = 1; i <= t.a; ++i)
        for (long j = 0; j <= t.n; ++j) {
            const BigInt& c = t.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            if (c == 0) continue;
            BigInt v = c * pochhammer(i, p);
            out.push_back({j, i + p, Rational(p % 2 ? BigInt(-v) : v)});
        }
    return out;
}

Rational F_p(const std::vector<ShiftedTerm>& terms, const Rational& x) {
    Rational s = 0;
    for (const auto& tm : terms) s += tm.c / rpow(x + tm.j, tm.m);
    return s;
}

BigInt falling_long(long m, long K) {
    BigInt r = 1;
    for (long e = 0; e < K; ++e) r *= m - e;
    return r;
}

// Coefficients in u of prod_{e=0}^{K-1} (base - e + sign*u).
std::vector<BigInt> shifted_falling(long base, long sign, long K) {
    std::vector<BigInt> poly{1};
    for (long e = 0; e < K; ++e) {
        std::vector<BigInt> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d] * (base - e);
            next[d + 1] += poly[d] * sign;
        }
        poly = std::move(next);
    }
    return poly;
}

// Adds coeff * (t + shift)^d to a polynomial in t.
void add_shifted_power(std::vector<Rational>& poly, const Rational& coeff, long shift, long d) {
    if (poly.size() < static_cast<std::size_t>(d) + 1) poly.resize(static_cast<std::size_t>(d) + 1, 0);
    for (long e = 0; e <= d; ++e)
        poly[static_cast<std::size_t>(e)] += coeff * Rational(binomial(d, e) * ipow(BigInt(shift), static_cast<unsigned long>(d - e)));
}

SeriesResult lhs_series(const CoeffTable& t, const Params& params, long p, long k, long target_digits) {
    check_shape(t, params, p);
    if (k < 1) throw InvalidInput("k must be >= 1");
    if (!series_converges(params, p, k))
        throw DivergenceError("series_lhs: need k < omega*n + p for the differentiated series to converge");

    const long rn = params.rn();
    const auto terms = derivative_terms(t, p);
    const Rational scale = form_scale(params, k);
    const bool unit_circle = abs(params.z0) == 1;

    if (!unit_circle) {
        // sum_t scale F^{(p)}(t) ff(rn - t, k-1) z0^{rn-t-k+1}
        const Rational z0 = params.z0;
        GeometricSummand g;
        g.eval = [&, z0](long tt) -> Rational {
            return scale * F_p(terms, tt) * Rational(falling_long(rn - tt, k - 1)) * rpow(z0, rn - tt - k + 1);
        };
        Rational mass = 0;
        for (const auto& tm : terms) mass += abs(tm.c);
        g.A = abs(scale) * mass * rpow(abs(z0), rn - k + 1);
        g.c = k;
        g.m = k - 1;
        g.x = Rational(1) / abs(z0);
        return geometric_sum(g, rn + 1, target_digits);
    }

    // sum_t (-1)^t g(t) with g(t) = s0 scale [F(t) ff(rn-t, k-1) - F(-t) ff(rn+t, k-1)],
    // the second part only in zeta mode.
    const bool both = params.mode == Mode::Zeta;
    const Rational s0 = ((rn - k + 1) % 2 ? Rational(-1) : Rational(1)) * scale;

    std::map<std::pair<long, long>, Rational> poles;  // (rho, order) -> coeff
    std::vector<Rational> poly;
    for (const auto& tm : terms) {
        // (t + j)^{-m} ff(rn - t, k-1), u = t + j
        auto pa = shifted_falling(rn + tm.j, -1, k - 1);
        for (long e = 0; e < static_cast<long>(pa.size()); ++e) {
            if (pa[static_cast<std::size_t>(e)] == 0) continue;
            const Rational cf = s0 * tm.c * Rational(pa[static_cast<std::size_t>(e)]);
            if (e < tm.m) poles[{-tm.j, tm.m - e}] += cf;
            else add_shifted_power(poly, cf, tm.j, e - tm.m);
        }
        if (!both) continue;
        // -(-t + j)^{-m} ff(rn + t, k-1) = -(-1)^m (t - j)^{-m} ff(rn + t, k-1), u = t - j
        auto pb = shifted_falling(rn + tm.j, 1, k - 1);
        const Rational sgn = tm.m % 2 ? Rational(1) : Rational(-1);
        for (long e = 0; e < static_cast<long>(pb.size()); ++e) {
            if (pb[static_cast<std::size_t>(e)] == 0) continue;
            const Rational cf = sgn * s0 * tm.c * Rational(pb[static_cast<std::size_t>(e)]);
            if (e < tm.m) poles[{tm.j, tm.m - e}] += cf;
            else add_shifted_power(poly, cf, -tm.j, e - tm.m);
        }
    }
    for (const auto& v : poly)
        if (v != 0) throw DivergenceError("series_lhs: summand does not decay; the table vanishes to too low an order");

    AlternatingSummand g;
    for (const auto& [key, cf] : poles)
        if (cf != 0) g.poles.push_back({key.first, key.second, cf});
    g.eval = [&](long tt) -> Rational {
        Rational v = F_p(terms, tt) * Rational(falling_long(rn - tt, k - 1));
        if (both) v -= F_p(terms, -tt) * Rational(falling_long(rn + tt, k - 1));
        return s0 * v;
    };
    return alternating_sum(g, rn + 1, target_digits);
}

long digits_of(const BigInt& v) { return v == 0 ? 0 : static_cast<long>(std::ceil(log_abs(v) / std::log(10.0))); }

} // namespace

BallReal zeta(long s, long digits) {
    if (s < 2) throw InvalidInput("zeta: s must be >= 2");
    return li_series(s, 1, digits + 1).ball(digits + 1);
}

BallReal polylog(long s, const Rational& x, long digits) { return li_series(s, x, digits + 1).ball(digits + 1); }

VpPolynomials vp_polynomials(const CoeffTable& t, long p, const Params& params) {
    check_shape(t, params, p);
    const long rn = params.rn();
    VpPolynomials v;
    v.v_inf.assign(static_cast<std::size_t>(rn + t.n), 0);
    v.v_zero.assign(static_cast<std::size_t>(2 * rn) + 1, 0);
    for (long i = 1; i <= t.a; ++i)
        for (long j = 0; j <= t.n; ++j) {
            const BigInt& c = t.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            if (c == 0) continue;
            const BigInt base = c * pochhammer(i, p);
            const Rational cinf(p % 2 ? BigInt(base) : BigInt(-base));
            const Rational czero(i % 2 ? BigInt(base) : BigInt(-base));
            const unsigned long m = static_cast<unsigned long>(i + p);
            for (long s = 0; s <= rn + j - 1; ++s)
                v.v_inf[static_cast<std::size_t>(s)] += cinf / Rational(ipow(BigInt(rn + j - s), m));
            for (long s = rn + j + 1; s <= 2 * rn; ++s)
                v.v_zero[static_cast<std::size_t>(s)] += czero / Rational(ipow(BigInt(s - rn - j), m));
        }
    for (long s = 0; s <= rn; ++s)
        if (v.v_zero[static_cast<std::size_t>(s)] != 0) throw InvariantViolation("vp_polynomials: V^[0] is not a multiple of z^{rn+1}");
    return v;
}

std::pair<long, long> k_window(const Params& params) {
    const long rn = params.rn();
    const long lo = params.mode == Mode::Zeta ? 2 * rn + 2 : rn + params.n + 1;
    return {lo, params.kappa_n()};
}

bool series_converges(const Params& params, long p, long k) {
    if (params.mode == Mode::Polylog && abs(params.z0) != 1) return true;
    return k < params.omega_n() + p;
}

std::vector<std::pair<long, long>> admissible_pairs(const Params& params, bool convergent_only) {
    const auto [lo, hi] = k_window(params);
    std::vector<std::pair<long, long>> out;
    for (long p = 0; p <= params.h; ++p)
        for (long k = lo; k <= hi; ++k)
            if (!convergent_only || series_converges(params, p, k)) out.emplace_back(p, k);
    return out;
}

std::vector<BigInt> form_coefficients(const CoeffTable& t, const Params& params, long p, long k) {
    check_shape(t, params, p);
    const auto [lo, hi] = k_window(params);
    if (k < lo || k > hi)
        throw InvalidInput("k = " + std::to_string(k) + " outside the admissible window [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");

    const long rn = params.rn(), N = rn + params.n, A = params.a + params.h;
    std::vector<std::vector<BigInt>> init(static_cast<std::size_t>(A), std::vector<BigInt>(static_cast<std::size_t>(N) + 1, 0));
    for (long i = 1; i <= t.a; ++i) {
        const BigInt f = pochhammer(i, p);
        for (long j = 0; j <= t.n; ++j) {
            BigInt v = t.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] * f;
            init[static_cast<std::size_t>(i + p - 1)][static_cast<std::size_t>(rn + j)] = p % 2 ? BigInt(-v) : v;
        }
    }
    RecurrenceState st = RecurrenceState::start(init, params.alpha());
    for (long step = 1; step < k; ++step) st.step();

    const Rational scale = form_scale(params, k);
    std::vector<BigInt> ell;
    for (long i = 0; i <= A; ++i) {
        Rational v = scale * st.polys[static_cast<std::size_t>(i)].eval(params.z0);
        if (!is_integer(v))
            throw InvariantViolation("form_coefficients: ell_{" + std::to_string(p) + "," + std::to_string(k) + "," +
                                     std::to_string(i) + "} is not an integer");
        ell.push_back(v.get_num());
    }
    return ell;
}

BallReal series_lhs(const CoeffTable& t, const Params& params, long p, long k, long digits) {
    return lhs_series(t, params, p, k, digits + 10).ball(digits + 10);
}

FormRecord verify_form(const CoeffTable& t, const Params& params, long p, long k, long digits) {
    FormRecord rec;
    rec.p = p;
    rec.k = k;
    rec.z0 = params.z0;
    rec.q = params.q;
    rec.digits = digits;
    rec.ell = form_coefficients(t, params, p, k);
    const long target = digits + 10;
    SeriesResult lhs = lhs_series(t, params, p, k, target);

    BigInt mass = 0;
    for (const auto& v : rec.ell) mass += abs(v);
    const long li_digits = target + digits_of(mass) + 2;
    const bool zeta_mode = params.mode == Mode::Zeta;
    const Rational x = zeta_mode ? Rational(-1) : Rational(1) / params.z0;

    SeriesResult rhs;
    rhs.value = rec.ell[0];
    for (std::size_t i = 1; i < rec.ell.size(); ++i) {
        if (rec.ell[i] == 0) continue;
        Rational w = rec.ell[i];
        if (zeta_mode) {
            if (i % 2 == 0) continue;  // 1 - (-1)^i
            w *= 2;
        }
        SeriesResult li = li_series(static_cast<long>(i), x, li_digits);
        rhs.value += w * li.value;
        BigFloat wb = BigFloat::from(Rational(abs(w)), kRadPrec, MPFR_RNDU);
        mpfr_mul(wb.get(), wb.get(), li.error.get(), MPFR_RNDU);
        mpfr_add(rhs.error.get(), rhs.error.get(), wb.get(), MPFR_RNDU);
    }

    SeriesResult diff;
    diff.value = lhs.value - rhs.value;
    mpfr_add(diff.error.get(), lhs.error.get(), rhs.error.get(), MPFR_RNDU);

    rec.lhs = lhs.ball(target);
    rec.rhs = rhs.ball(target);
    rec.residual = diff.ball(target);
    rec.ok = rec.residual.contains_zero() &&
             rec.residual.rad_below(BigFloat::pow10(-(digits - 10), kRadPrec, MPFR_RNDD));
    return rec;
}

std::vector<FormRecord> verify_forms(const CoeffTable& t, const Params& params,
                                     const std::vector<std::pair<long, long>>& pairs, long digits) {
    std::vector<FormRecord> out(pairs.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        try {
            out[idx] = verify_form(t, params, pairs[idx].first, pairs[idx].second, digits);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

RankResult rank_matrix(const CoeffTable& t, const Params& params, const std::vector<std::pair<long, long>>& selection) {
    const long size = t.b() + params.h + 1;
    if (static_cast<long>(selection.size()) != size)
        throw InvalidInput("rank_matrix: selection needs b+h+1 = " + std::to_string(size) + " pairs, got " +
                           std::to_string(selection.size()));
    RankResult res;
    res.selection = selection;
    res.matrix.assign(static_cast<std::size_t>(size), IntVec(static_cast<std::size_t>(size), 0));
    std::vector<std::vector<BigInt>> cols(selection.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < selection.size(); ++j) {
        try {
            cols[j] = form_coefficients(t, params, selection[j].first, selection[j].second);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (long i = 0; i < size; ++i) res.matrix[static_cast<std::size_t>(i)][j] = cols[j][static_cast<std::size_t>(i)];
    DetRank dr = bareiss(res.matrix);
    res.det = dr.det;
    res.rank = dr.rank;
    return res;
}

std::vector<std::pair<long, long>> auto_selection(const CoeffTable& t, const Params& params) {
    const std::size_t size = static_cast<std::size_t>(t.b() + params.h + 1);
    const auto pairs = admissible_pairs(params, false);
    if (pairs.size() < size) throw InvalidInput("auto_selection: fewer admissible pairs than b+h+1");

    std::vector<IntVec> cols(pairs.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        try {
            auto ell = form_coefficients(t, params, pairs[j].first, pairs[j].second);
            ell.resize(size);
            cols[j] = std::move(ell);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    std::vector<std::size_t> chosen;
    std::vector<IntVec> rows;  // chosen columns as rows; rank is unchanged by transposition
    std::size_t rank = 0;
    for (std::size_t j = 0; j < pairs.size() && chosen.size() < size; ++j) {
        rows.push_back(cols[j]);
        const std::size_t r = bareiss(rows).rank;
        if (r > rank) {
            rank = r;
            chosen.push_back(j);
        } else {
            rows.pop_back();
        }
    }
    for (std::size_t j = 0; j < pairs.size() && chosen.size() < size; ++j)
        if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) chosen.push_back(j);
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::pair<long, long>> out;
    for (auto j : chosen) out.push_back(pairs[j]);
    return out;
}

} // namespace sf
