#pragma once

#include "sf/bigint.hpp"
#include "sf/recurrence.hpp"

#include <map>
#include <optional>
#include <string>

namespace sf {

enum class Mode { Zeta, Polylog };

Mode parse_mode(const std::string& s);
std::string to_string(Mode m);

struct Params {
    long a = 1;
    long n = 1;
    Rational r = 1;
    Rational omega = 1;
    Rational Omega = 1;
    std::optional<Rational> kappa;
    long h = 0;
    Mode mode = Mode::Zeta;
    Rational z0 = -1;
    long q = 1;

    // Throws InvalidInput naming the first violated constraint.
    void validate() const;

    long rn() const;
    long omega_n() const;
    long Omega_n() const;
    long kappa_n() const;  // throws if kappa is unset
    long unknowns() const { return a * (n + 1); }
    Alpha alpha() const { return mode == Mode::Zeta ? Alpha::zeta() : Alpha::polylog(); }
};

// Flat key/value view of a params file; values keep their source text.
struct ConfigValue {
    enum class Kind { String, Number, Bool } kind = Kind::String;
    std::string text;
};
using Config = std::map<std::string, ConfigValue>;

// Keys: a, n, r, omega, Omega, kappa, h, mode, z0, q. Rationals may be written
// as integers, decimals, or quoted "p/q" strings.
Params params_from_config(const Config& cfg);

} // namespace sf
