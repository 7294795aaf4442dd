#include "doctest.h"

#include "sf/siegel.hpp"

#include <functional>
#include <optional>
#include <random>

using namespace sf;

namespace {

BigFloat sqrt_of(long v) {
    BigFloat r = BigFloat::from(BigInt(v), 256, MPFR_RNDU);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
    return r;
}

IntVec row(std::initializer_list<long> xs) {
    IntVec r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

// Exhaustive box search: best vector by (max|x|, |x|^2, lex with positive leading entry).
std::optional<IntVec> brute_best(const std::vector<IntVec>& eq, std::size_t n, long bound) {
    std::optional<IntVec> best;
    IntVec x(n, 0);
    auto key_less = [](const IntVec& a, const IntVec& b) {
        BigInt ma = 0, mb = 0, na = 0, nb = 0;
        for (auto& v : a) { ma = std::max<BigInt>(ma, abs(v)); na += v * v; }
        for (auto& v : b) { mb = std::max<BigInt>(mb, abs(v)); nb += v * v; }
        if (ma != mb) return ma < mb;
        if (na != nb) return na < nb;
        return a < b;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            bool nz = false, lead_pos = false;
            for (auto& v : x)
                if (v != 0) { nz = true; lead_pos = v > 0; break; }
            if (!nz || !lead_pos) return;
            for (const auto& r : eq)
                if (dot(r, x) != 0) return;
            if (!best || key_less(x, *best)) best = x;
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            x[i] = v;
            rec(i + 1);
        }
        x[i] = 0;
    };
    rec(0);
    return best;
}

} // namespace

TEST_CASE("bound_X examples") {
    auto p = SiegelProblem::make({row({2, 3})}, 1, 2);
    CHECK(bound_X(p).to_double() == doctest::Approx(3.605551275).epsilon(1e-9));
    auto empty = SiegelProblem::make({}, 0, 3);
    CHECK(bound_X(empty).to_double() == 1.0);
    auto q = SiegelProblem::make({row({1, 0, 0, 0}), row({0, 1, 0, 0}), row({0, 0, 1, 1})}, 2, 4,
                                 {BigFloat::from(BigInt(4), 256), BigFloat::from(BigInt(9), 256), sqrt_of(2)},
                                 {BigFloat::from(BigInt(2), 256)});
    CHECK(bound_X(q).to_double() == doctest::Approx(8.485281374).epsilon(1e-9));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(SiegelProblem::make({row({2, 3})}, 1, 2, {BigFloat::from(BigInt(3), 256)}), InvalidInput);
    CHECK_THROWS_AS(SiegelProblem::make({row({1, 2}), row({1, 1})}, 1, 2), InvalidInput);
    CHECK_THROWS_AS(SiegelProblem::make({row({1, 2})}, 1, 3), InvalidInput);
}

TEST_CASE("solve small examples") {
    auto s = solve(SiegelProblem::make({row({2, 3})}, 1, 2));
    CHECK(s.x == row({3, -2}));
    CHECK(s.certified);
    CHECK(s.used == Backend::Enumeration);

    auto z = solve(SiegelProblem::make({row({0, 0, 0})}, 1, 3));
    CHECK(s.max_abs == 3);
    CHECK(z.max_abs == 1);
    BigInt nz = 0;
    for (auto& v : z.x) nz += abs(v);
    CHECK(nz == 1);

    CHECK_THROWS_AS(solve(SiegelProblem::make({row({1, 0}), row({0, 1})}, 2, 2)), NoSolution);
}

TEST_CASE("kernel and LLL basics") {
    auto K = integer_kernel({row({2, 3, 5}), row({1, -1, 4})}, 3);
    REQUIRE(K.size() == 1);
    CHECK(dot(row({2, 3, 5}), K[0]) == 0);
    CHECK(dot(row({1, -1, 4}), K[0]) == 0);
    BigInt g = 0;
    for (auto& v : K[0]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    CHECK(g == 1);

    IntBasis b{row({1, 1, 1}), row({-1, 0, 2}), row({3, 5, 6})};
    lll_reduce(b);
    auto dr = bareiss(b);
    CHECK(abs(dr.det) == 3);
    CHECK(dr.rank == 3);
}

TEST_CASE("bareiss") {
    CHECK(bareiss({row({2, 0}), row({0, 3})}).det == 6);
    CHECK(bareiss({row({0, 1}), row({1, 0})}).det == -1);
    auto s = bareiss({row({1, 2, 3}), row({2, 4, 6}), row({1, 0, 1})});
    CHECK(s.det == 0);
    CHECK(s.rank == 2);
    CHECK(bareiss({row({1, 2, 3}), row({4, 5, 6})}).rank == 2);
}

TEST_CASE("enumeration matches exhaustive search") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> ent(-4, 4);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 3 + rep % 2, m0 = 1 + rep % 2;
        std::vector<IntVec> eq;
        for (std::size_t m = 0; m < m0; ++m) {
            IntVec r;
            for (std::size_t i = 0; i < n; ++i) r.emplace_back(ent(rng));
            eq.push_back(r);
        }
        auto p = SiegelProblem::make(eq, m0, n);
        SiegelSolution s;
        try {
            s = solve(p, Backend::Enumeration);
        } catch (const NoSolution&) {
            CHECK(integer_kernel(eq, n).empty());
            continue;
        }
        CHECK(s.certified);
        long box = static_cast<long>(mpfr_get_si(s.X.get(), MPFR_RNDD));
        auto ref = brute_best(eq, n, box);
        REQUIRE(ref);
        CAPTURE(rep);
        CHECK(s.x == *ref);
    }
}

TEST_CASE("reduction backend stays in the kernel") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> ent(-9, 9);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<IntVec> rows;
        for (int m = 0; m < 3; ++m) {
            IntVec r;
            for (int i = 0; i < 8; ++i) r.emplace_back(ent(rng));
            rows.push_back(r);
        }
        rows.push_back(rows[0]);
        for (auto& v : rows.back()) v *= 5;
        auto p = SiegelProblem::make(rows, 3, 8);
        auto s = solve(p, Backend::Reduction);
        for (int m = 0; m < 3; ++m) CHECK(dot(rows[static_cast<std::size_t>(m)], s.x) == 0);
        CHECK(s.row_ratios.size() == 1);
        CHECK(s.max_abs > 0);
    }
}
