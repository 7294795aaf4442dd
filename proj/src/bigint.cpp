#include "sf/bigint.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace sf {

BigInt factorial(long n) {
    if (n < 0) throw InvalidInput("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw InvalidInput("zero to a negative power");
        Rational inv = 1 / base;
        return rpow(inv, -e);
    }
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)),
               ipow(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

BigInt pochhammer(const BigInt& x, long m) {
    if (m < 0) throw InvalidInput("pochhammer with negative length");
    BigInt r = 1;
    for (long u = 0; u < m; ++u) r *= x + u;
    return r;
}

BigInt falling(const BigInt& x, long m) {
    if (m < 0) throw InvalidInput("falling factorial with negative length");
    BigInt r = 1;
    for (long u = 0; u < m; ++u) r *= x - u;
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    BigInt r;
    if (s.empty() || r.set_str(s, 10) != 0) throw InvalidInput("not an integer: " + std::string(text));
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    if (s.empty()) throw InvalidInput("empty rational");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt num = parse_bigint(s.substr(0, slash));
        BigInt den = parse_bigint(s.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator: " + s);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (s.find_first_of("eE") != std::string::npos)
        throw InvalidInput("exponent notation not supported: " + s);
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits == "-" || digits == "+" || digits.empty()) throw InvalidInput("bad decimal: " + s);
        BigInt num = parse_bigint(digits);
        Rational q(num, ipow(10, s.size() - dot - 1));
        q.canonicalize();
        return q;
    }
    return Rational(parse_bigint(s));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt as_integer(const Rational& q, const char* what) {
    if (!is_integer(q)) throw InvariantViolation(std::string(what) + " is not an integer: " + q.get_str());
    return q.get_num();
}

double log_abs(const BigInt& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    return log_abs(v.get_num()) - log_abs(v.get_den());
}

} // namespace sf
