#pragma once

#include "sf/bigint.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sf {

// Positive integer stored as prime -> exponent.
struct FactoredInt {
    std::map<std::uint64_t, std::uint64_t> factors;

    BigInt value() const;
    double log() const;
    bool divides(const FactoredInt& other) const;
    FactoredInt& operator*=(const FactoredInt& other);
    friend FactoredInt operator*(FactoredInt lhs, const FactoredInt& rhs) { return lhs *= rhs; }
    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

    // Trial division; throws unless v > 0 and v is `bound`-smooth.
    static FactoredInt factor_smooth(const BigInt& v, std::uint64_t bound = 100000);
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// lcm(1, ..., N)
FactoredInt lcm_range(std::uint64_t n);

// prod_{p^e <= N} p^{min(a, floor(N / p^e))}
FactoredInt delta(std::uint64_t a, std::uint64_t n);

// lcm over products of at most a distinct nonzero integers in [-N, N]
// whose max and min differ by at most N. Limited to a <= 6, N <= 40.
BigInt delta_bruteforce(std::uint64_t a, std::uint64_t n);
BigInt delta_bruteforce_serial(std::uint64_t a, std::uint64_t n);

// lcm_i C(N, i)
BigInt binomial_lcm(std::uint64_t n);

} // namespace sf
