#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sf {

using BigInt = mpz_class;
using Rational = mpq_class;

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

BigInt factorial(long n);
// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);
BigInt ipow(const BigInt& base, unsigned long e);
Rational rpow(const Rational& base, long e);
// Rising factorial (x)_m, with (x)_0 = 1.
BigInt pochhammer(const BigInt& x, long m);
// x (x-1) ... (x-m+1)
BigInt falling(const BigInt& x, long m);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);
bool is_integer(const Rational& q);
BigInt as_integer(const Rational& q, const char* what);

// log|v| as a double, finite for any nonzero v; -inf for zero.
double log_abs(const BigInt& v);
double log_abs(const Rational& v);

} // namespace sf
