#include "sf/combinatorics.hpp"

#include <optional>

namespace sf {

namespace {

void extend(long parts_left, long remaining, Composition& cur, std::vector<Composition>& out) {
    if (parts_left == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long x = 1; x <= remaining - (parts_left - 1); ++x) {
        cur.push_back(x);
        extend(parts_left - 1, remaining - x, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions(long l, long k) {
    std::vector<Composition> out;
    if (l < 0 || l >= k) return out;
    Composition cur;
    extend(l + 1, k, cur, out);
    return out;
}

BigInt kappa(long T, long k, const Composition& h) {
    if (k < 1 || h.empty() || static_cast<long>(h.size()) > k) throw InvalidInput("kappa: bad composition size");
    long sum = 0;
    for (long x : h) {
        if (x < 1) throw InvalidInput("kappa: composition parts must be positive");
        sum += x;
    }
    if (sum != k) throw InvalidInput("kappa: composition does not sum to k");

    const long l = static_cast<long>(h.size()) - 1;
    std::vector<long> den;
    long s = 0;
    for (long i = 0; i < l; ++i) {
        s += h[static_cast<std::size_t>(i)];
        den.push_back(T + 1 - s);
    }
    std::optional<std::size_t> i0;
    for (std::size_t i = 0; i < den.size(); ++i)
        if (den[i] == 0) i0 = i;

    BigInt num = 1;
    bool zero_dropped = false;
    for (long u = 0; u <= k - 2; ++u) {
        if (T - u == 0 && i0 && !zero_dropped) {
            zero_dropped = true;
            continue;
        }
        num *= T - u;
    }
    BigInt d = 1;
    for (std::size_t i = 0; i < den.size(); ++i)
        if (!i0 || i != *i0) d *= den[i];

    if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t()))
        throw InvariantViolation("kappa: denominator does not divide numerator");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    return q;
}

} // namespace sf
