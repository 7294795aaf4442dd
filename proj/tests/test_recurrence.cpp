#include "doctest.h"

#include "sf/recurrence.hpp"

#include <random>

using namespace sf;

namespace {

using Poly = std::vector<Rational>;

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}
Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(r);
}
Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
}
Poly scale(const Poly& a, const Rational& s) {
    Poly r = a;
    for (auto& x : r) x *= s;
    return trim(r);
}
Poly deriv(const Poly& a) {
    Poly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
    return trim(r);
}
Rational evalp(const Poly& a, const Rational& z) {
    Rational s = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * z + *it;
    return s;
}

// Plain rational function num/den, differentiated by the quotient rule.
struct RatFun {
    Poly num, den{1};
    RatFun derivative() const {
        return {add(mul(deriv(num), den), scale(mul(num, deriv(den)), -1)), mul(den, den)};
    }
    RatFun operator+(const RatFun& o) const { return {add(mul(num, o.den), mul(o.num, den)), mul(den, o.den)}; }
    RatFun times(const Poly& p, const Poly& q) const { return {mul(num, p), mul(den, q)}; }
    Rational at(const Rational& z) const { return evalp(num, z) / evalp(den, z); }
};

// Applies the derivative recurrence to plain rational functions.
std::vector<RatFun> naive_level(const std::vector<Poly>& init, Alpha al, long k) {
    std::vector<RatFun> P(init.size() + 1);
    for (std::size_t i = 0; i < init.size(); ++i) P[i + 1].num = trim(init[i]);
    for (long lev = 1; lev < k; ++lev) {
        std::vector<RatFun> Q(P.size());
        for (std::size_t i = 1; i < P.size(); ++i) {
            Q[i] = P[i].derivative();
            if (i + 1 < P.size()) Q[i] = Q[i] + P[i + 1].times({-1}, {0, 1});
        }
        Q[0] = P[0].derivative() + P[1].times({al.a0, al.a1}, {0, 1, -1});
        P = std::move(Q);
    }
    return P;
}

} // namespace

TEST_CASE("recurrence examples") {
    ThetaShape sh{1, 1, Alpha::zeta()};
    auto st = RecurrenceState::start({{0, 1}}, sh.alpha);
    st.step();
    CHECK(st.polys[1].eval(Rational(7, 3)) == 1);
    // (z+1)/(1-z)
    for (Rational z : {Rational(2), Rational(1, 3), Rational(-4, 5)})
        CHECK(st.polys[0].eval(z) == (z + 1) / (1 - z));

    for (long T = 1; T <= 4; ++T) {
        std::vector<BigInt> zT(5, 0);
        zT[static_cast<std::size_t>(T)] = 1;
        auto s2 = RecurrenceState::start({std::vector<BigInt>(5, 0), zT}, Alpha::zeta());
        s2.step();
        Rational z(3, 2);
        CHECK(s2.polys[1].eval(z) == -rpow(z, T - 1));
    }
}

TEST_CASE("theta examples") {
    ThetaShape sh{2, 4, Alpha::zeta()};
    for (long ip = 1; ip <= 2; ++ip)
        for (long jp = 0; jp <= 4; ++jp)
            for (long i = 1; i <= 2; ++i)
                for (long j = 0; j <= 4; ++j)
                    CHECK(theta_oracle(1, i, j, ip, jp, sh) == ((i == ip && j == jp) ? 1 : 0));
    CHECK(theta_oracle(2, 1, 3, 1, 3, sh) == 3);
    for (long T = 0; T <= 4; ++T) CHECK(theta_oracle(2, 1, T, 2, T, sh) == -1);
    CHECK_THROWS_AS(theta_oracle(2, 1, 0, 3, 0, sh), InvalidInput);
}

TEST_CASE("recurrence matches naive rational functions") {
    std::mt19937_64 rng(20241016);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (Alpha al : {Alpha::zeta(), Alpha::polylog()})
        for (int rep = 0; rep < 4; ++rep) {
            const long a = 1 + rep % 3, n = 2 + rep;
            std::vector<std::vector<BigInt>> init(static_cast<std::size_t>(a));
            std::vector<Poly> naive(static_cast<std::size_t>(a));
            for (long i = 0; i < a; ++i)
                for (long j = 0; j <= n; ++j) {
                    int c = coef(rng);
                    init[static_cast<std::size_t>(i)].push_back(c);
                    naive[static_cast<std::size_t>(i)].push_back(c);
                }
            auto st = RecurrenceState::start(init, al);
            for (long k = 1; k <= 6; ++k) {
                if (k > 1) st.step();
                auto ref = naive_level(naive, al, k);
                for (std::size_t i = 0; i < ref.size(); ++i)
                    for (Rational z : {Rational(5, 2), Rational(-2, 7)}) {
                        CAPTURE(k);
                        CAPTURE(i);
                        CHECK(st.polys[i].eval(z) == ref[i].at(z));
                    }
                for (std::size_t i = 1; i < st.polys.size(); ++i) CHECK(st.polys[i].degree() <= n);
                CHECK(st.polys[0].degree() <= n + k - 1);
            }
        }
}

TEST_CASE("recurrence is linear in the table") {
    auto run = [](const std::vector<std::vector<BigInt>>& c) {
        auto st = RecurrenceState::start(c, Alpha::zeta());
        for (int s = 0; s < 5; ++s) st.step();
        return st;
    };
    std::vector<std::vector<BigInt>> c1{{1, -2, 0, 3}, {0, 4, 1, -1}}, c2{{2, 2, -1, 0}, {5, 0, 0, 7}}, c3 = c1;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) c3[i][j] += c2[i][j];
    auto s1 = run(c1), s2 = run(c2), s3 = run(c3);
    for (std::size_t i = 0; i < s3.polys.size(); ++i)
        for (std::size_t j = 0; j < s3.polys[i].num.size(); ++j)
            CHECK(s3.polys[i].num[j] == s1.polys[i].num[j] + s2.polys[i].num[j]);
}

TEST_CASE("closed form agrees with probing") {
    for (Alpha al : {Alpha::zeta(), Alpha::polylog()})
        for (long a = 1; a <= 3; ++a)
            for (long n = 0; n <= 4; ++n) {
                ThetaShape sh{a, n, al};
                auto bad = theta_crosscheck_serial(sh, 8);
                CAPTURE(a);
                CAPTURE(n);
                CHECK(bad.empty());
            }
}

TEST_CASE("parallel kernels match serial references") {
    ThetaShape sh{3, 4, Alpha::zeta()};
    CHECK(theta_table_oracle(sh, 7).entries == theta_table_oracle_serial(sh, 7).entries);
    CHECK(theta_table_oracle(sh, 7).entries == theta_table_closed(sh, 7).entries);
    CHECK(theta_crosscheck(sh, 6).size() == theta_crosscheck_serial(sh, 6).size());
    auto r1 = integrality_report(sh, 8), r2 = integrality_report_serial(sh, 8);
    CHECK(r1.checked == r2.checked);
    CHECK(r1.max_ratio_rows == r2.max_ratio_rows);
    CHECK(r1.max_ratio_row0 == r2.max_ratio_row0);
}

TEST_CASE("denominator") {
    CHECK(denominator(2, 2, 4).value() == 96);
    CHECK(denominator(1, 3, 2).value() == delta(3, 2).value());
}

TEST_CASE("integrality on a small shape") {
    for (Alpha al : {Alpha::zeta(), Alpha::polylog()}) {
        auto rep = integrality_report({2, 3, al}, 8);
        CHECK(rep.ok());
        CHECK(rep.max_ratio_rows <= 1.0);
        CHECK(rep.max_ratio_row0 <= 1.0);
        CHECK(rep.checked > 0);
    }
}
