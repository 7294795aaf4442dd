#include "doctest.h"

#include "sf/combinatorics.hpp"

#include <algorithm>
#include <cmath>

using namespace sf;

namespace {

// Other branch: for 0 <= T <= k-2 with T+1 a partial sum, every non-omitted factor is explicit.
BigInt kappa_by_sets(long T, long k, const Composition& h) {
    std::vector<long> removed;
    long s = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        s += h[i];
        removed.push_back(s - 1);
    }
    BigInt r = 1;
    for (long u = 0; u <= k - 2; ++u)
        if (std::find(removed.begin(), removed.end(), u) == removed.end()) r *= T - u;
    return r;
}

} // namespace

TEST_CASE("compositions examples") {
    CHECK(compositions(0, 5) == std::vector<Composition>{{5}});
    CHECK(compositions(1, 3) == std::vector<Composition>{{1, 2}, {2, 1}});
    CHECK(compositions(2, 2).empty());
    CHECK(compositions(-1, 4).empty());
}

TEST_CASE("compositions count and order") {
    for (long k = 1; k <= 10; ++k)
        for (long l = 0; l < k; ++l) {
            auto hs = compositions(l, k);
            CHECK(hs.size() == binomial(k - 1, l).get_ui());
            CHECK(std::is_sorted(hs.begin(), hs.end()));
            for (const auto& h : hs) {
                long s = 0;
                for (long x : h) s += x;
                CHECK(s == k);
            }
        }
}

TEST_CASE("kappa examples") {
    for (long T = -5; T <= 5; ++T) CHECK(kappa(T, 1, {1}) == 1);
    CHECK(kappa(5, 3, {3}) == 20);
    CHECK(kappa(1, 4, {2, 2}) == -1);
    CHECK_THROWS_AS(kappa(1, 4, {2, 1}), InvalidInput);
}

TEST_CASE("kappa agrees with set formula") {
    for (long k = 1; k <= 9; ++k)
        for (long l = 0; l < k; ++l)
            for (const auto& h : compositions(l, k))
                for (long T = -6; T <= 14; ++T) {
                    CAPTURE(T);
                    CAPTURE(k);
                    CHECK(kappa(T, k, h) == kappa_by_sets(T, k, h));
                }
}

TEST_CASE("kappa recursion over compositions") {
    // (t+1) S(I-i, k-1) + S(I-i-1, k-1) = S(I-i, k), S(l, k) = sum over H_{l,k} of kappa(t+k-1, k, h)
    auto S = [](long l, long kk, long T) {
        BigInt s = 0;
        for (const auto& h : compositions(l, kk)) s += kappa(T, kk, h);
        return s;
    };
    const long n = 6;
    for (long k = 2; k <= 8; ++k)
        for (long l = 0; l <= 3; ++l)
            for (long t = 1 - k; t <= n + 1 - k; ++t) {
                CAPTURE(k);
                CAPTURE(l);
                CAPTURE(t);
                BigInt lhs = (t + 1) * S(l, k - 1, t + k - 1) + S(l - 1, k - 1, t + k - 1);
                CHECK(lhs == S(l, k, t + k - 1));
            }
}

TEST_CASE("kappa size bound") {
    for (long k = 1; k <= 12; ++k)
        for (long l = 0; l < k; ++l)
            for (const auto& h : compositions(l, k))
                for (long T = 0; T <= 20; ++T) {
                    BigInt v = abs(kappa(T, k, h));
                    BigInt lim = factorial(k - 1) * ((BigInt(1) << static_cast<unsigned long>(T)) + 1);
                    CHECK(v <= lim);
                }
}
