#include "sf/params.hpp"

namespace sf {

namespace {

long times_n(const Rational& x, long n, const char* what) {
    Rational v = x * n;
    if (!is_integer(v)) throw InvalidInput(std::string(what) + "*n must be an integer");
    if (!v.get_num().fits_slong_p()) throw InvalidInput(std::string(what) + "*n is too large");
    return v.get_num().get_si();
}

long as_long(const ConfigValue& v, const std::string& key) {
    if (v.kind == ConfigValue::Kind::Bool) throw InvalidInput(key + " must be an integer");
    Rational q = parse_rational(v.text);
    if (!is_integer(q) || !q.get_num().fits_slong_p()) throw InvalidInput(key + " must be an integer");
    return q.get_num().get_si();
}

} // namespace

Mode parse_mode(const std::string& s) {
    if (s == "zeta") return Mode::Zeta;
    if (s == "polylog") return Mode::Polylog;
    throw InvalidInput("mode must be zeta or polylog, got " + s);
}

std::string to_string(Mode m) { return m == Mode::Zeta ? "zeta" : "polylog"; }

void Params::validate() const {
    if (a < 1 || n < 1) throw InvalidInput("a and n must be positive");
    if (r < 1) throw InvalidInput("r must be >= 1");
    if (omega < 1) throw InvalidInput("omega must be >= 1");
    if (Omega < omega) throw InvalidInput("Omega must be >= omega");
    if (!(Rational(a) > Omega)) throw InvalidInput("a must exceed Omega");
    if (h < 0 || h > a) throw InvalidInput("h must satisfy 0 <= h <= a");
    times_n(r, n, "r");
    times_n(omega, n, "omega");
    times_n(Omega, n, "Omega");
    if (kappa) {
        if (*kappa <= 0) throw InvalidInput("kappa must be positive");
        times_n(*kappa, n, "kappa");
    }
    if (q < 1) throw InvalidInput("q must be a positive integer");
    if (mode == Mode::Zeta) {
        if (z0 != -1 || q != 1) throw InvalidInput("zeta mode fixes z0 = -1 and q = 1");
    } else {
        if (abs(z0) < 1) throw InvalidInput("polylog mode needs |z0| >= 1");
        if (z0 == 1) throw InvalidInput("polylog mode needs z0 != 1");
        if (!is_integer(z0 * q)) throw InvalidInput("q*z0 must be an integer");
    }
}

long Params::rn() const { return times_n(r, n, "r"); }
long Params::omega_n() const { return times_n(omega, n, "omega"); }
long Params::Omega_n() const { return times_n(Omega, n, "Omega"); }
long Params::kappa_n() const {
    if (!kappa) throw InvalidInput("kappa is required for this operation");
    return times_n(*kappa, n, "kappa");
}

Params params_from_config(const Config& cfg) {
    static const char* known[] = {"a", "n", "r", "omega", "Omega", "kappa", "h", "mode", "z0", "q"};
    for (const auto& [key, _] : cfg) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw InvalidInput("unknown params key: " + key);
    }
    auto need = [&](const char* key) -> const ConfigValue& {
        auto it = cfg.find(key);
        if (it == cfg.end()) throw InvalidInput(std::string("missing params key: ") + key);
        return it->second;
    };
    auto rat = [&](const char* key) { return parse_rational(need(key).text); };

    Params p;
    p.a = as_long(need("a"), "a");
    p.n = as_long(need("n"), "n");
    p.r = rat("r");
    p.omega = rat("omega");
    p.Omega = cfg.count("Omega") ? rat("Omega") : p.omega;
    if (cfg.count("kappa")) p.kappa = rat("kappa");
    if (cfg.count("h")) p.h = as_long(cfg.at("h"), "h");
    if (cfg.count("mode")) p.mode = parse_mode(cfg.at("mode").text);
    if (p.mode == Mode::Polylog) {
        p.z0 = rat("z0");
        p.q = cfg.count("q") ? as_long(cfg.at("q"), "q") : p.z0.get_den().get_si();
    } else {
        if (cfg.count("z0")) p.z0 = rat("z0");
        if (cfg.count("q")) p.q = as_long(cfg.at("q"), "q");
    }
    p.validate();
    return p;
}

} // namespace sf
