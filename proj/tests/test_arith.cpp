#include "doctest.h"

#include "sf/arith.hpp"

#include <cmath>

using namespace sf;

namespace {

BigInt lcm_upto(unsigned long n) {
    BigInt r = 1;
    for (unsigned long m = 1; m <= n; ++m) {
        BigInt b(m);
        mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t());
    }
    return r;
}

} // namespace

TEST_CASE("lcm_range small values") {
    CHECK(lcm_range(1).value() == 1);
    CHECK(lcm_range(6).value() == 60);
    CHECK(lcm_range(10).value() == 2520);
    for (unsigned long n = 1; n <= 120; ++n) CHECK(lcm_range(n).value() == lcm_upto(n));
    CHECK_THROWS_AS(lcm_range(0), InvalidInput);
}

TEST_CASE("delta examples") {
    CHECK(delta(1, 6).value() == 60);
    CHECK(delta(2, 4).value() == 24);
    CHECK(delta(4, 4).value() == 24);
    CHECK(delta(1, 6) == lcm_range(6));
}

TEST_CASE("delta_bruteforce examples and guard") {
    CHECK(delta_bruteforce(1, 1) == 1);
    CHECK(delta_bruteforce(1, 3) == 6);
    CHECK(delta_bruteforce(2, 4) == 24);
    CHECK_THROWS_AS(delta_bruteforce(7, 10), std::out_of_range);
    CHECK_THROWS_AS(delta_bruteforce(2, 41), std::out_of_range);
}

TEST_CASE("delta agrees with enumeration") {
    for (unsigned long a = 1; a <= 3; ++a)
        for (unsigned long n = 1; n <= 20; ++n) {
            CAPTURE(a);
            CAPTURE(n);
            CHECK(delta(a, n).value() == delta_bruteforce_serial(a, n));
        }
}

TEST_CASE("parallel enumeration matches serial") {
    for (unsigned long n : {7ul, 15ul, 24ul}) CHECK(delta_bruteforce(3, n) == delta_bruteforce_serial(3, n));
}

TEST_CASE("delta divisibility is monotone") {
    for (unsigned long a = 1; a <= 6; ++a)
        for (unsigned long n = 1; n <= 60; ++n) {
            CHECK(delta(a, n).divides(delta(a + 1, n)));
            CHECK(delta(a, n).divides(delta(a, n + 1)));
        }
}

TEST_CASE("binomial lcm") {
    CHECK(binomial_lcm(1) == 1);
    CHECK(binomial_lcm(4) == 12);
    CHECK(binomial_lcm(6) == 60);
    for (unsigned long n = 1; n <= 200; ++n) {
        BigInt q = lcm_upto(n + 1) / (n + 1);
        CHECK(binomial_lcm(n) == q);
    }
}

TEST_CASE("delta growth bound") {
    const double gamma = 0.5772156649015329;
    for (unsigned long n : {500ul, 1000ul, 3000ul})
        for (unsigned long a = 1; a <= 8; ++a) {
            CAPTURE(n);
            CAPTURE(a);
            CHECK(delta(a, n).log() / static_cast<double>(n) < gamma + std::log(a + 1.0) + 0.05);
        }
}

TEST_CASE("factor_smooth round trip") {
    auto f = lcm_range(50);
    CHECK(FactoredInt::factor_smooth(f.value()) == f);
    CHECK_THROWS_AS(FactoredInt::factor_smooth(BigInt("1000003") * 1000033, 1000), InvalidInput);
}
