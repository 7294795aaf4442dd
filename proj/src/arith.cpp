#include "sf/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sf {

BigInt FactoredInt::value() const {
    BigInt r = 1;
    for (auto [p, e] : factors) r *= ipow(BigInt(static_cast<unsigned long>(p)), e);
    return r;
}

double FactoredInt::log() const {
    double s = 0;
    for (auto [p, e] : factors) s += static_cast<double>(e) * std::log(static_cast<double>(p));
    return s;
}

bool FactoredInt::divides(const FactoredInt& other) const {
    for (auto [p, e] : factors) {
        auto it = other.factors.find(p);
        if (it == other.factors.end() || it->second < e) return false;
    }
    return true;
}

FactoredInt& FactoredInt::operator*=(const FactoredInt& other) {
    for (auto [p, e] : other.factors) factors[p] += e;
    return *this;
}

FactoredInt FactoredInt::factor_smooth(const BigInt& v, std::uint64_t bound) {
    if (v <= 0) throw InvalidInput("factor_smooth expects a positive integer");
    FactoredInt f;
    BigInt rest = v;
    for (std::uint64_t p : primes_up_to(bound)) {
        if (rest == 1) break;
        std::uint64_t e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) f.factors[p] = e;
    }
    if (rest != 1) throw InvalidInput("value is not smooth over the trial bound");
    return f;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
    }
    return out;
}

FactoredInt lcm_range(std::uint64_t n) {
    if (n == 0) throw InvalidInput("lcm_range needs N >= 1");
    FactoredInt f;
    for (std::uint64_t p : primes_up_to(n)) {
        std::uint64_t e = 0;
        for (std::uint64_t pe = p; pe <= n; pe *= p) {
            ++e;
            if (pe > n / p) break;
        }
        f.factors[p] = e;
    }
    return f;
}

FactoredInt delta(std::uint64_t a, std::uint64_t n) {
    if (a == 0 || n == 0) throw InvalidInput("delta needs a >= 1 and N >= 1");
    FactoredInt f;
    for (std::uint64_t p : primes_up_to(n)) {
        std::uint64_t v = 0;
        for (std::uint64_t pe = p; pe <= n; pe *= p) {
            v += std::min(a, n / pe);
            if (pe > n / p) break;
        }
        f.factors[p] = v;
    }
    return f;
}

namespace {

struct BruteContext {
    std::uint64_t a, n;
    std::vector<long> values;                      // sorted nonzero values in [-N, N]
    std::vector<std::uint64_t> primes;
    std::vector<std::vector<std::uint32_t>> val;   // val[|x|][prime index]

    BruteContext(std::uint64_t a_, std::uint64_t n_) : a(a_), n(n_) {
        if (a > 6 || n > 40) throw std::out_of_range("delta_bruteforce is limited to a <= 6, N <= 40");
        if (a == 0 || n == 0) throw InvalidInput("delta_bruteforce needs a >= 1 and N >= 1");
        for (long x = -static_cast<long>(n); x <= static_cast<long>(n); ++x)
            if (x != 0) values.push_back(x);
        primes = primes_up_to(n);
        val.assign(n + 1, std::vector<std::uint32_t>(primes.size(), 0));
        for (std::uint64_t x = 1; x <= n; ++x)
            for (std::size_t k = 0; k < primes.size(); ++k)
                for (std::uint64_t y = x; y % primes[k] == 0; y /= primes[k]) ++val[x][k];
    }

    void walk(std::size_t next, std::uint64_t depth, long first, std::vector<std::uint32_t>& cur,
              std::vector<std::uint32_t>& best) const {
        for (std::size_t k = 0; k < cur.size(); ++k) best[k] = std::max(best[k], cur[k]);
        if (depth == a) return;
        for (std::size_t idx = next; idx < values.size(); ++idx) {
            long x = values[idx];
            if (x - first > static_cast<long>(n)) break;
            const auto& vx = val[static_cast<std::size_t>(std::labs(x))];
            for (std::size_t k = 0; k < cur.size(); ++k) cur[k] += vx[k];
            walk(idx + 1, depth + 1, first, cur, best);
            for (std::size_t k = 0; k < cur.size(); ++k) cur[k] -= vx[k];
        }
    }

    void from_first(std::size_t idx, std::vector<std::uint32_t>& best) const {
        long x = values[idx];
        std::vector<std::uint32_t> cur = val[static_cast<std::size_t>(std::labs(x))];
        walk(idx + 1, 1, x, cur, best);
    }

    BigInt assemble(const std::vector<std::uint32_t>& best) const {
        BigInt r = 1;
        for (std::size_t k = 0; k < primes.size(); ++k)
            r *= ipow(BigInt(static_cast<unsigned long>(primes[k])), best[k]);
        return r;
    }
};

} // namespace

BigInt delta_bruteforce_serial(std::uint64_t a, std::uint64_t n) {
    BruteContext ctx(a, n);
    std::vector<std::uint32_t> best(ctx.primes.size(), 0);
    for (std::size_t idx = 0; idx < ctx.values.size(); ++idx) ctx.from_first(idx, best);
    return ctx.assemble(best);
}

BigInt delta_bruteforce(std::uint64_t a, std::uint64_t n) {
    BruteContext ctx(a, n);
    std::vector<std::uint32_t> best(ctx.primes.size(), 0);
    const long count = static_cast<long>(ctx.values.size());
#pragma omp parallel
    {
        std::vector<std::uint32_t> local(ctx.primes.size(), 0);
#pragma omp for schedule(dynamic)
        for (long idx = 0; idx < count; ++idx) ctx.from_first(static_cast<std::size_t>(idx), local);
#pragma omp critical
        for (std::size_t k = 0; k < best.size(); ++k) best[k] = std::max(best[k], local[k]);
    }
    return ctx.assemble(best);
}

BigInt binomial_lcm(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i <= n; ++i) {
        BigInt c = binomial(static_cast<long>(n), static_cast<long>(i));
        mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

} // namespace sf
