#include "doctest.h"

#include "sf/evaluate.hpp"

#include <cmath>
#include <random>

using namespace sf;

namespace {

Params zeta_params(long a, long n, Rational r, Rational omega, Rational Omega, Rational kappa, long h) {
    Params p;
    p.a = a;
    p.n = n;
    p.r = r;
    p.omega = omega;
    p.Omega = Omega;
    p.kappa = kappa;
    p.h = h;
    p.validate();
    return p;
}

// |mid(x) - y| at 256 bits, as a double.
double distance(const BallReal& x, mpfr_srcptr y) {
    BigFloat d(512);
    mpfr_sub(d.get(), x.mid().get(), y, MPFR_RNDN);
    return std::fabs(mpfr_get_d(d.get(), MPFR_RNDN));
}

BigFloat mpfr_zeta_value(unsigned long s, mpfr_prec_t prec) {
    BigFloat z(prec);
    mpfr_zeta_ui(z.get(), s, MPFR_RNDN);
    return z;
}

} // namespace

TEST_CASE("zeta(2) against pi^2/6") {
    BallReal z = zeta(2, 30);
    BigFloat ref(512);
    mpfr_const_pi(ref.get(), MPFR_RNDN);
    mpfr_sqr(ref.get(), ref.get(), MPFR_RNDN);
    mpfr_div_ui(ref.get(), ref.get(), 6, MPFR_RNDN);
    CHECK(distance(z, ref.get()) < 1e-30);
    CHECK(z.rad_below(BigFloat::pow10(-30, kRadPrec, MPFR_RNDD)));
    CHECK(z.mid_string(40).rfind("1.64493406684822643647241516664", 0) == 0);
}

TEST_CASE("zeta(3) digits and the MPFR cross-check") {
    BallReal z3 = zeta(3, 30);
    CHECK(z3.mid_string(40).rfind("1.20205690315959428539973816151", 0) == 0);
    for (unsigned long s = 2; s <= 9; ++s) {
        BallReal z = zeta(static_cast<long>(s), 50);
        BigFloat ref = mpfr_zeta_value(s, 512);
        CAPTURE(s);
        CHECK(distance(z, ref.get()) < 1e-50);
    }
    CHECK_THROWS_AS(zeta(1, 10), InvalidInput);
}

TEST_CASE("higher precision enclosures nest") {
    BallReal z30 = zeta(3, 30), z50 = zeta(3, 50);
    CHECK(z30.contains(z50));
    BallReal l30 = polylog(2, Rational(1, 3), 30), l60 = polylog(2, Rational(1, 3), 60);
    CHECK(l30.contains(l60));
}

TEST_CASE("polylog special values") {
    BallReal li1 = polylog(1, Rational(1, 2), 40);
    BallReal log2 = log_ball(2, 300);
    CHECK(distance(li1, log2.mid().get()) < 1e-40);

    BigFloat pi2(512);
    mpfr_const_pi(pi2.get(), MPFR_RNDN);
    mpfr_sqr(pi2.get(), pi2.get(), MPFR_RNDN);
    mpfr_div_si(pi2.get(), pi2.get(), -12, MPFR_RNDN);
    CHECK(distance(polylog(2, -1, 40), pi2.get()) < 1e-40);

    // Li_3(-1) = -(3/4) zeta(3)
    BigFloat z3 = mpfr_zeta_value(3, 512);
    mpfr_mul_d(z3.get(), z3.get(), -0.75, MPFR_RNDN);
    BallReal li3 = polylog(3, -1, 40);
    CHECK(distance(li3, z3.get()) < 1e-40);
    CHECK(li3.mid_string(30).rfind("-9.01542677369695", 0) == 0);

    CHECK(distance(polylog(4, 1, 30), mpfr_zeta_value(4, 512).get()) < 1e-30);
    CHECK_THROWS_AS(polylog(1, 1, 10), InvalidInput);
    CHECK_THROWS_AS(polylog(2, Rational(3, 2), 10), InvalidInput);
    CHECK(polylog(3, 0, 10).contains_zero());
}

TEST_CASE("polylog at rationals matches naive long double summation") {
    for (Rational x : {Rational(1, 2), Rational(-1, 2), Rational(2, 3), Rational(-3, 7)}) {
        for (long s = 1; s <= 4; ++s) {
            long double acc = 0, xd = static_cast<long double>(x.get_d()), pw = 1;
            for (int t = 1; t < 400; ++t) {
                pw *= xd;
                acc += pw / std::pow(static_cast<long double>(t), static_cast<long double>(s));
            }
            CHECK(polylog(s, x, 25).mid().to_double() == doctest::Approx(static_cast<double>(acc)).epsilon(1e-14));
        }
    }
}

TEST_CASE("alternating sums are stable under a finer target") {
    AlternatingSummand g;
    g.eval = [](long t) -> Rational { return Rational(1) / Rational(BigInt(t + 3) * (t + 3)) - Rational(2) / Rational(BigInt(t - 1)); };
    g.poles = {{-3, 2, 1}, {1, 1, -2}};
    SeriesResult coarse = alternating_sum(g, 5, 20), fine = alternating_sum(g, 5, 40);
    CHECK(fine.terms > coarse.terms);
    BallReal diff = BallReal::exact(coarse.value - fine.value, 256);
    CHECK(diff.abs_upper() <= coarse.error);
}

TEST_CASE("vp polynomials") {
    Params p = zeta_params(2, 1, 1, 1, 1, 4, 0);
    CoeffTable t = CoeffTable::zeros(2, 1);
    t.c[0][0] = 1;
    auto v = vp_polynomials(t, 0, p);
    REQUIRE(v.v_inf.size() == 2);
    CHECK(v.v_inf[0] == -1);
    CHECK(v.v_inf[1] == 0);

    auto z = vp_polynomials(CoeffTable::zeros(2, 1), 0, p);
    for (const auto& c : z.v_inf) CHECK(c == 0);
    for (const auto& c : z.v_zero) CHECK(c == 0);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-5, 5);
    Params q = zeta_params(3, 4, 2, 1, 2, 5, 2);
    for (int rep = 0; rep < 10; ++rep) {
        CoeffTable u = CoeffTable::zeros(3, 4);
        for (auto& row : u.c)
            for (auto& x : row) x = d(rng);
        for (long pp = 0; pp <= 2; ++pp) {
            auto w = vp_polynomials(u, pp, q);
            CHECK(w.v_inf.size() == 12);
            CHECK(w.v_zero.size() == 17);
            for (long s = 0; s <= 8; ++s) CHECK(w.v_zero[static_cast<std::size_t>(s)] == 0);
        }
    }
}

TEST_CASE("expansion of the series at infinity in polylogarithms") {
    // z^{rn} sum_{t > rn} F^{(p)}(t) z^{-t} = V^[inf](z) + sum_i z^{rn} P_i(z) (-1)^p (i)_p Li_{i+p}(1/z) at z = -2.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-4, 4);
    Params q = zeta_params(3, 2, 1, 1, 2, 4, 1);
    const long rn = 2;
    const Rational z(-2);
    for (int rep = 0; rep < 3; ++rep) {
        CoeffTable u = CoeffTable::zeros(3, 2);
        for (auto& row : u.c)
            for (auto& x : row) x = d(rng);
        for (long p = 0; p <= 1; ++p) {
            long double direct = 0;
            for (long t = rn + 1; t < 300; ++t) {
                long double F = 0;
                for (long i = 1; i <= 3; ++i)
                    for (long j = 0; j <= 2; ++j) {
                        long double c = static_cast<long double>(u.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)].get_si());
                        long double poch = p ? static_cast<long double>(-i) : 1.0L;
                        F += c * poch / std::pow(static_cast<long double>(t + j), static_cast<long double>(i + p));
                    }
                direct += F * std::pow(-2.0L, static_cast<long double>(rn - t));
            }
            auto v = vp_polynomials(u, p, q);
            Rational poly = 0;
            for (auto it = v.v_inf.rbegin(); it != v.v_inf.rend(); ++it) poly = poly * z + *it;
            long double total = static_cast<long double>(poly.get_d());
            for (long i = 1; i <= 3; ++i) {
                Rational Pi = 0;
                for (long j = 2; j >= 0; --j) Pi = Pi * z + Rational(u.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
                Rational f = rpow(z, rn) * Pi * Rational(pochhammer(i, p)) * (p ? -1 : 1);
                total += static_cast<long double>(f.get_d()) * static_cast<long double>(polylog(i + p, Rational(-1, 2), 30).mid().to_double());
            }
            CAPTURE(rep);
            CAPTURE(p);
            CHECK(static_cast<double>(total) == doctest::Approx(static_cast<double>(direct)).epsilon(1e-10));
        }
    }
}

TEST_CASE("form coefficients on a constructed table") {
    Params p = zeta_params(4, 4, 1, 1, 2, Rational(5, 2), 1);
    auto built = build_Fn(p);
    const auto [lo, hi] = k_window(p);
    CHECK(lo == 10);
    CHECK(hi == 10);
    for (long pp = 0; pp <= 1; ++pp) {
        auto ell = form_coefficients(built.table, p, pp, 10);
        CHECK(ell.size() == 6);
        for (std::size_t i = static_cast<std::size_t>(p.a + pp) + 1; i < ell.size(); ++i) CHECK(ell[i] == 0);
    }
    auto zero = form_coefficients(CoeffTable::zeros(4, 4), p, 0, 10);
    for (const auto& v : zero) CHECK(v == 0);
    CHECK_THROWS_AS(form_coefficients(built.table, p, 0, 9), InvalidInput);
    CHECK_THROWS_AS(form_coefficients(built.table, p, 2, 10), InvalidInput);
}

TEST_CASE("linear form identity in zeta mode") {
    Params p = zeta_params(5, 4, 1, 3, 3, 3, 1);
    auto built = build_Fn(p);
    auto pairs = admissible_pairs(p, true);
    REQUIRE(!pairs.empty());
    auto recs = verify_forms(built.table, p, pairs, 40);
    for (const auto& r : recs) {
        CAPTURE(r.p);
        CAPTURE(r.k);
        CHECK(r.ok);
    }
    CHECK_THROWS_AS(series_lhs(built.table, p, 0, 12, 30), DivergenceError);

    BallReal z = series_lhs(CoeffTable::zeros(5, 4), p, 0, 10, 30);
    CHECK(z.mid().is_zero());
    CHECK(z.rad().is_zero());
    FormRecord zr = verify_form(CoeffTable::zeros(5, 4), p, 0, 10, 30);
    CHECK(zr.ok);
}

TEST_CASE("linear form identity in polylog mode") {
    Params p = zeta_params(4, 4, 1, 1, 2, 3, 1);
    p.mode = Mode::Polylog;
    p.z0 = -2;
    p.q = 2;
    p.validate();
    auto built = build_Fn(p);
    auto pairs = admissible_pairs(p, true);
    CHECK(pairs.size() == 8);
    auto recs = verify_forms(built.table, p, pairs, 40);
    for (const auto& r : recs) {
        CAPTURE(r.p);
        CAPTURE(r.k);
        CHECK(r.ok);
    }
}

TEST_CASE("rank matrix") {
    Params p = zeta_params(4, 4, 1, 1, 2, 3, 1);
    auto built = build_Fn(p);
    auto sel = auto_selection(built.table, p);
    CHECK(static_cast<long>(sel.size()) == built.table.b() + p.h + 1);
    auto rk = rank_matrix(built.table, p, sel);
    CHECK(rk.rank <= sel.size());
    CHECK((rk.det != 0) == (rk.rank == sel.size()));

    if (sel.size() >= 2) {
        auto swapped = sel;
        std::swap(swapped[0], swapped[1]);
        auto rs = rank_matrix(built.table, p, swapped);
        CHECK(rs.det == -rk.det);
        CHECK(rs.rank == rk.rank);
    }
    auto short_sel = sel;
    short_sel.pop_back();
    CHECK_THROWS_AS(rank_matrix(built.table, p, short_sel), InvalidInput);
}
