#include "doctest.h"

#include "sf/construct.hpp"

#include <random>

using namespace sf;

namespace {

Params make_params(long a, long n, Rational omega, Rational Omega, Rational r) {
    Params p;
    p.a = a;
    p.n = n;
    p.omega = omega;
    p.Omega = Omega;
    p.r = r;
    p.validate();
    return p;
}

CoeffTable random_table(std::mt19937_64& rng, long a, long n) {
    std::uniform_int_distribution<long> d(-6, 6);
    CoeffTable t = CoeffTable::zeros(a, n);
    for (auto& row : t.c)
        for (auto& v : row) v = d(rng);
    return t;
}

} // namespace

TEST_CASE("tail coefficient examples") {
    CoeffTable t = CoeffTable::zeros(2, 3);
    t.c[0][0] = 1;
    CHECK(tail_coefficient(t, 1) == 1);
    for (long d = 2; d <= 10; ++d) CHECK(tail_coefficient(t, d) == 0);

    CoeffTable u = CoeffTable::zeros(2, 3);
    u.c[1][1] = 1;
    CHECK(tail_coefficient(u, 3) == -2);
    for (long d = 2; d <= 12; ++d) CHECK(tail_coefficient(u, d) == (d % 2 ? -(d - 1) : d - 1));
}

TEST_CASE("tail coefficients match the expansion of F at a large point") {
    std::mt19937_64 rng(99);
    const Rational t(1000000);
    for (int rep = 0; rep < 5; ++rep) {
        CoeffTable c = random_table(rng, 3, 4);
        Rational F = 0;
        for (long i = 1; i <= c.a; ++i)
            for (long j = 0; j <= c.n; ++j)
                F += Rational(c.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]) / rpow(t + j, i);
        Rational rest = F;
        for (long d = 1; d <= 8; ++d) {
            Rational est = rest * rpow(t, d);
            BigInt A = tail_coefficient(c, d);
            if (A != 0) CHECK(Rational(abs((est - A) / A)).get_d() < 1e-3);
            rest -= Rational(A) / rpow(t, d);
        }
    }
}

TEST_CASE("vanishing system shape and entries") {
    Params p = make_params(3, 4, 1, 1, 1);
    auto sys = vanishing_system(p);
    CHECK(sys.m0 == 3);
    CHECK(sys.rows() == 3);
    CHECK(sys.cols() == 15);
    const BigInt d1 = denominator(1, 3, 4).value();
    for (std::size_t col = 0; col < 15; ++col) CHECK(sys.lambda[0][col] == (col < 5 ? d1 : BigInt(0)));
    for (long k = 1; k <= 3; ++k) {
        BigInt bound = (p.n + 1) * ipow(BigInt(k), 3) * ipow(BigInt(2), 4) * denominator(k, 3, 4).value();
        for (const auto& v : sys.lambda[static_cast<std::size_t>(k - 1)]) CHECK(abs(v) <= bound);
    }
}

TEST_CASE("weighted rows") {
    Params p = make_params(4, 4, 1, 2, Rational(3, 2));
    auto sys = vanishing_system(p, true);
    CHECK(sys.m0 == 3);
    CHECK(sys.rows() == 7);
    CHECK(sys.G.size() == 4);
    CHECK(sys.G[0].to_double() == doctest::Approx(1.5 * 1.5 * 1.5 * 1.5));
}

TEST_CASE("build a small instance") {
    Params p = make_params(4, 4, 1, 2, 1);
    auto res = build_Fn(p);
    CHECK_FALSE(res.table.is_zero());
    for (long d = 1; d <= 3; ++d) CHECK(res.tail.at(d) == 0);
    auto pk = p_k1_at_one(res.table, p.alpha(), 3);
    for (const auto& v : pk) CHECK(v == 0);
    auto eq = verify_equivalences(res.table, p);
    CHECK(eq.d1 == eq.d2);
    REQUIRE(eq.d1);
    CHECK(*eq.d1 >= 4);
    CHECK(eq.residual_ok);
}

TEST_CASE("weighted build still satisfies the equalities") {
    Params p = make_params(4, 4, 1, 2, 1);
    auto res = build_Fn(p, {Backend::Auto, true});
    for (long d = 1; d <= 3; ++d) CHECK(res.tail.at(d) == 0);
    CHECK(res.solution.row_ratios.size() == 4);
}

TEST_CASE("no constraints when omega n = 1") {
    Params p = make_params(3, 1, 1, 1, 1);
    auto res = build_Fn(p);
    CHECK(res.table.max_abs() == 1);
}

TEST_CASE("equivalence of first nonvanishing indices") {
    CoeffTable t = CoeffTable::zeros(2, 2);
    t.c[0][0] = 1;
    Params p = make_params(3, 2, 1, 1, 1);
    auto e = verify_equivalences(t, p);
    CHECK(e.d1 == 1);
    CHECK(e.d2 == 1);

    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 100; ++rep) {
        const long a = 1 + rep % 3, n = 1 + rep % 4;
        CoeffTable c = random_table(rng, a, n);
        // Half the time force A_1 = sum_j c_{1,j} = 0 so that D > 1 is exercised.
        if (rep % 2) {
            BigInt sum = 0;
            for (long j = 0; j < n; ++j) sum += c.c[0][static_cast<std::size_t>(j)];
            c.c[0][static_cast<std::size_t>(n)] = -sum;
        }
        Params q = make_params(std::max(a, 2L), n, 1, 1, 1);
        auto r = verify_equivalences(c, q, 30);
        CAPTURE(rep);
        CHECK(r.d1 == r.d2);
        CHECK(r.residual.contains_zero());
    }
}

TEST_CASE("tail is linear in the table") {
    std::mt19937_64 rng(5);
    CoeffTable c = random_table(rng, 3, 3), s = c;
    for (auto& row : s.c)
        for (auto& v : row) v *= -7;
    for (long d = 1; d <= 10; ++d) CHECK(tail_coefficient(s, d) == -7 * tail_coefficient(c, d));
}

TEST_CASE("params validation") {
    Params p;
    p.a = 3;
    p.n = 3;
    p.omega = Rational(1, 2);
    CHECK_THROWS_AS(p.validate(), InvalidInput);
    p.omega = Rational(4, 3);
    p.Omega = Rational(4, 3);
    CHECK_NOTHROW(p.validate());
    p.Omega = Rational(5, 4);
    CHECK_THROWS_AS(p.validate(), InvalidInput);
    p.Omega = 3;
    CHECK_THROWS_AS(p.validate(), InvalidInput);
    p.Omega = 2;
    p.mode = Mode::Polylog;
    p.z0 = Rational(1, 2);
    CHECK_THROWS_AS(p.validate(), InvalidInput);
    p.z0 = Rational(-3, 2);
    p.q = 2;
    CHECK_NOTHROW(p.validate());
}
