#include "sf/construct.hpp"

#include <cmath>
#include <limits>

namespace sf {

CoeffTable CoeffTable::zeros(long a, long n) {
    if (a < 1 || n < 0) throw InvalidInput("table shape needs a >= 1, n >= 0");
    CoeffTable t;
    t.a = a;
    t.n = n;
    t.c.assign(static_cast<std::size_t>(a), std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    return t;
}

CoeffTable CoeffTable::from_vector(long a, long n, const IntVec& x) {
    CoeffTable t = zeros(a, n);
    if (static_cast<long>(x.size()) != a * (n + 1)) throw InvalidInput("table vector has the wrong length");
    for (long i = 0; i < a; ++i)
        for (long j = 0; j <= n; ++j)
            t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(i * (n + 1) + j)];
    return t;
}

long CoeffTable::b() const {
    for (long i = a; i >= 1; --i)
        for (const auto& v : c[static_cast<std::size_t>(i - 1)])
            if (v != 0) return i;
    return 0;
}

BigInt CoeffTable::max_abs() const {
    BigInt m = 0;
    for (const auto& row : c)
        for (const auto& v : row) m = std::max<BigInt>(m, abs(v));
    return m;
}

BigInt CoeffTable::abs_sum() const {
    BigInt s = 0;
    for (const auto& row : c)
        for (const auto& v : row) s += abs(v);
    return s;
}

BigInt tail_coefficient(const CoeffTable& t, long d) {
    if (d < 1) throw InvalidInput("tail_coefficient needs d >= 1");
    BigInt s = 0;
    for (long i = 1; i <= std::min(t.a, d); ++i) {
        BigInt b = binomial(d - 1, i - 1);
        BigInt row = 0;
        for (long j = 0; j <= t.n; ++j) {
            const BigInt& c = t.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            if (c != 0) row += ipow(BigInt(j), static_cast<unsigned long>(d - i)) * c;  // 0^0 = 1
        }
        s += (i % 2 ? -b : b) * row;
    }
    return d % 2 ? BigInt(-s) : s;
}

TailExpansion tail_expansion(const CoeffTable& t, long D) {
    TailExpansion e;
    for (long d = 1; d <= D; ++d) e.coeffs.push_back(tail_coefficient(t, d));
    return e;
}

namespace {

// Row k of the equality system, column (i'-1)(n+1)+j'.
std::vector<IntVec> equality_rows(const Params& p) {
    const long rows = p.omega_n() - 1, cols = p.unknowns();
    std::vector<IntVec> out(static_cast<std::size_t>(std::max(rows, 0L)), IntVec(static_cast<std::size_t>(cols), 0));
    if (rows <= 0) return out;
    std::vector<BigInt> dk(static_cast<std::size_t>(rows) + 1), fact(static_cast<std::size_t>(rows) + 1);
    for (long k = 1; k <= rows; ++k) {
        dk[static_cast<std::size_t>(k)] = denominator(k, p.a, p.n).value();
        fact[static_cast<std::size_t>(k)] = factorial(k - 1);
    }
    const ThetaShape shape{p.a, p.n, p.alpha()};
    bool bad = false;
#pragma omp parallel for schedule(dynamic)
    for (long col = 0; col < cols; ++col) {
        std::vector<std::vector<BigInt>> init(static_cast<std::size_t>(p.a),
                                              std::vector<BigInt>(static_cast<std::size_t>(p.n) + 1, 0));
        init[static_cast<std::size_t>(col / (p.n + 1))][static_cast<std::size_t>(col % (p.n + 1))] = 1;
        RecurrenceState st = RecurrenceState::start(init, shape.alpha);
        for (long k = 1; k <= rows; ++k) {
            if (k > 1) st.step();
            BigInt s = 0;
            for (const auto& v : st.polys[1].num) s += v;
            BigInt scaled = dk[static_cast<std::size_t>(k)] * s, q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), fact[static_cast<std::size_t>(k)].get_mpz_t());
            if (rem != 0) {
#pragma omp atomic write
                bad = true;
            }
            out[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(col)] = q;
        }
    }
    if (bad) throw InvariantViolation("vanishing_system: non-integral equality row entry");
    return out;
}

} // namespace

SiegelProblem vanishing_system(const Params& p, bool weighted) {
    p.validate();
    std::vector<IntVec> rows = equality_rows(p);
    const std::size_t m0 = rows.size();
    if (static_cast<long>(m0) >= p.unknowns()) throw InvalidInput("vanishing_system: more equations than unknowns");
    std::vector<BigFloat> H, G;
    if (weighted) {
        const long lo = p.omega_n(), hi = p.Omega_n();
        for (long d = lo; d < hi; ++d) {
            IntVec row;
            for (long i = 1; i <= p.a; ++i)
                for (long j = 0; j <= p.n; ++j) {
                    if (i > d) {
                        row.emplace_back(0);
                        continue;
                    }
                    BigInt v = binomial(d - 1, i - 1) * ipow(BigInt(j), static_cast<unsigned long>(d - i));
                    row.push_back((d + i) % 2 ? BigInt(-v) : v);
                }
            rows.push_back(std::move(row));
        }
        if (rows.size() > m0) {
            // H for the equality rows: Euclidean norm rounded up.
            for (std::size_t m = 0; m < m0; ++m) {
                BigInt s = 0;
                for (const auto& v : rows[m]) s += v * v;
                BigFloat h = BigFloat::from(s, 256, MPFR_RNDU);
                mpfr_sqrt(h.get(), h.get(), MPFR_RNDU);
                if (mpfr_cmp_ui(h.get(), 1) < 0) mpfr_set_ui(h.get(), 1, MPFR_RNDU);
                H.push_back(std::move(h));
            }
            for (long d = lo; d < hi; ++d) {
                BigFloat h = BigFloat::from(BigInt(p.unknowns()), 256, MPFR_RNDU);
                mpfr_sqrt(h.get(), h.get(), MPFR_RNDU);
                BigInt f = ipow(BigInt(d), static_cast<unsigned long>(p.a)) * ipow(BigInt(p.n), static_cast<unsigned long>(d));
                BigFloat fv = BigFloat::from(f, 256, MPFR_RNDU);
                mpfr_mul(h.get(), h.get(), fv.get(), MPFR_RNDU);
                H.push_back(std::move(h));
                G.push_back(BigFloat::from(rpow(p.r, hi - d), 256, MPFR_RNDD));
            }
        }
    }
    return SiegelProblem::make(std::move(rows), m0, static_cast<std::size_t>(p.unknowns()), std::move(H), std::move(G));
}

double log_chi(const Params& p) {
    const double w = p.omega.get_d(), W = p.Omega.get_d(), r = p.r.get_d(), a = static_cast<double>(p.a);
    return (w * std::log(2.0) + 3 * w * w + w * w * std::log(a + 1) + 0.5 * W * W * std::log(r)) / (a - w);
}

std::vector<BigInt> p_k1_at_one(const CoeffTable& t, Alpha alpha, long k_max) {
    RecurrenceState st = RecurrenceState::start(t.c, alpha);
    std::vector<BigInt> out;
    for (long k = 1; k <= k_max; ++k) {
        if (k > 1) st.step();
        BigInt s = 0;
        for (const auto& v : st.polys[1].num) s += v;
        out.push_back(s);
    }
    return out;
}

BuildResult build_Fn(const Params& p, const BuildOptions& opt) {
    SiegelProblem sys = vanishing_system(p, opt.weighted);
    BuildResult r;
    r.solution = solve(sys, opt.backend);
    r.table = CoeffTable::from_vector(p.a, p.n, r.solution.x);
    if (r.table.is_zero()) throw InvariantViolation("build_Fn: solver returned the zero vector");

    const long wn = p.omega_n(), Wn = std::max(p.Omega_n(), wn);
    r.tail = tail_expansion(r.table, Wn);
    for (long d = 1; d < wn; ++d)
        if (r.tail.at(d) != 0) throw InvariantViolation("build_Fn: A_" + std::to_string(d) + " does not vanish");
    auto pk = p_k1_at_one(r.table, p.alpha(), wn - 1);
    for (long k = 1; k < wn; ++k)
        if (pk[static_cast<std::size_t>(k - 1)] != 0)
            throw InvariantViolation("build_Fn: P_{" + std::to_string(k) + ",1}(1) does not vanish");

    const double lchi = log_chi(p);
    r.log_max_c = log_abs(r.table.max_abs());
    r.log_chi_n = static_cast<double>(p.n) * lchi;
    const double lr = std::log(p.r.get_d()), ln = std::log(static_cast<double>(p.n));
    for (long d = 1; d <= Wn; ++d) {
        r.log_tail_abs.push_back(log_abs(r.tail.at(d)));
        r.log_tail_bound.push_back(static_cast<double>(d - p.Omega_n()) * lr + static_cast<double>(d) * ln +
                                   static_cast<double>(p.a) * std::log(static_cast<double>(d)) + r.log_chi_n);
    }
    return r;
}

EquivalenceReport verify_equivalences(const CoeffTable& t, const Params& p, long digits) {
    EquivalenceReport rep;
    rep.cap = 3 * p.omega_n();
    for (long d = 1; d <= rep.cap && !rep.d1; ++d)
        if (tail_coefficient(t, d) != 0) rep.d1 = d;
    auto pk = p_k1_at_one(t, p.alpha(), rep.cap);
    for (long k = 1; k <= rep.cap && !rep.d2; ++k)
        if (pk[static_cast<std::size_t>(k - 1)] != 0) rep.d2 = k;

    // R_n(z) against sum_d A_d (-1)^{d-1} (log z)^{d-1} / (d-1)! at z = 3/2.
    const Rational z(3, 2);
    const BigInt S = t.abs_sum();
    const double extra = (S == 0 ? 0.0 : log_abs(S) / std::log(2.0)) + 2.0 * static_cast<double>(t.n + 1) + 64;
    const mpfr_prec_t prec = bits_for_digits(digits) + static_cast<mpfr_prec_t>(extra);
    const BallReal L = log_ball(z, prec);

    BallReal lhs(prec), Lpow = BallReal::exact(1, prec);
    for (long i = 1; i <= t.a; ++i) {
        Rational Pi = 0;
        for (long j = t.n; j >= 0; --j) Pi = Pi * z + Rational(t.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
        Rational coef = Pi / Rational(factorial(i - 1));
        if (i % 2 == 0) coef = -coef;
        lhs += Lpow.times(coef);
        Lpow *= L;
    }

    // |A_d| <= S (n+1)^{d-1}; tail beyond D is <= S x^D / D! / (1 - x/(D+1)), x = (n+1) log z.
    const BigFloat target = BigFloat::pow10(-(digits + 5), kRadPrec, MPFR_RNDD);
    BigFloat x(kRadPrec);
    mpfr_mul_si(x.get(), L.abs_upper().get(), t.n + 1, MPFR_RNDU);
    long D = 1;
    BigFloat tail(kRadPrec);
    while (true) {
        // S x^D / D!
        BigFloat term = BigFloat::from(S, kRadPrec, MPFR_RNDU), f(kRadPrec);
        BigFloat xd(kRadPrec);
        mpfr_pow_ui(xd.get(), x.get(), static_cast<unsigned long>(D), MPFR_RNDU);
        mpfr_mul(term.get(), term.get(), xd.get(), MPFR_RNDU);
        mpfr_fac_ui(f.get(), static_cast<unsigned long>(D), MPFR_RNDD);
        mpfr_div(term.get(), term.get(), f.get(), MPFR_RNDU);
        BigFloat ratio(kRadPrec);
        mpfr_div_ui(ratio.get(), x.get(), static_cast<unsigned long>(D + 1), MPFR_RNDU);
        if (mpfr_cmp_ui(ratio.get(), 1) < 0) {
            mpfr_ui_sub(ratio.get(), 1, ratio.get(), MPFR_RNDD);
            mpfr_div(tail.get(), term.get(), ratio.get(), MPFR_RNDU);
            if (tail < target) break;
        }
        ++D;
    }
    BallReal rhs(prec);
    Lpow = BallReal::exact(1, prec);
    Rational inv_fact = 1;
    for (long d = 1; d <= D; ++d) {
        if (d > 1) {
            Lpow *= L;
            inv_fact /= d - 1;
        }
        Rational coef = Rational(tail_coefficient(t, d)) * inv_fact;
        if (d % 2 == 0) coef = -coef;
        if (coef != 0) rhs += Lpow.times(coef);
    }
    rhs.add_error(tail);

    rep.residual = lhs - rhs;
    rep.residual_ok = rep.residual.contains_zero() && rep.residual.rad_below(BigFloat::pow10(-(digits - 10), kRadPrec, MPFR_RNDD));
    return rep;
}

} // namespace sf
