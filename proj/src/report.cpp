#include "sf/report.hpp"

#include "sf/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace sf {

AsymptoticConstants asymptotic_constants(double r, double kappa, double omega, double Omega_coef, double h_frac, Mode) {
    if (r <= 0 || kappa <= 0 || omega <= 0 || Omega_coef <= 0 || h_frac < 0)
        throw InvalidInput("asymptotic_constants: parameters must be positive");
    AsymptoticConstants c;
    c.logchi_coef = 0.5 * Omega_coef * Omega_coef * std::log(r);
    c.logbeta_coef = c.logchi_coef + kappa;
    c.logalpha_coef = Omega_coef * std::log(r);
    c.shrink_factor = std::sqrt(1.0 / (1.0 + h_frac));
    c.tau_ratio_coef = c.logalpha_coef / c.logbeta_coef;
    c.final_coef = c.tau_ratio_coef * c.shrink_factor;
    return c;
}

bool feasibility_check(const Rational& r, const Rational& kappa, const Rational& omega, const Rational& h,
                       const Rational& a, Mode mode) {
    const Rational gap = mode == Mode::Zeta ? Rational(kappa - 2 * r) : Rational(kappa - r - 1);
    return (h + 1) * gap + omega > a;
}

double dimension_bound(double log_alpha, double log_beta, long degree, bool real_embedding) {
    if (!(log_beta > 0)) throw InvalidInput("dimension_bound: log_beta must be positive");
    if (degree < 1) throw InvalidInput("dimension_bound: degree must be >= 1");
    const double tau = -log_alpha / log_beta;
    return (real_embedding ? 1.0 : 2.0) / static_cast<double>(degree) * (tau + 1);
}

double growth_slope(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 3) throw InvalidInput("growth slope needs at least 3 points");
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) {
        if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidInput("growth slope needs finite values");
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) throw InvalidInput("growth slope needs at least two distinct n");
    return sxy / sxx;
}

double measured_growth(const std::vector<std::pair<double, double>>& n_magnitude) {
    std::vector<std::pair<double, double>> logs;
    for (const auto& [n, m] : n_magnitude) {
        if (!(m > 0)) throw InvalidInput("measured_growth: magnitudes must be positive");
        logs.emplace_back(n, std::log(m));
    }
    return growth_slope(logs);
}

namespace {

double kappa_of(const Params& p) {
    if (!p.kappa) throw InvalidInput("kappa is required for this operation");
    return p.kappa->get_d();
}

double two_a_plus_one(const Params& p) { return 2.0 * static_cast<double>(p.a) + 1.0; }

} // namespace

double log_beta(const Params& p) {
    const double kappa = kappa_of(p), r = p.r.get_d();
    const double z = p.z0.get_d();
    const double house = static_cast<double>(p.q) * std::max({1.0, std::fabs(z), std::fabs(1 - z)});
    return log_chi(p) + kappa * (std::log(8.0) + 3 + std::log(two_a_plus_one(p))) + (kappa + r + 1) * std::log(house);
}

double log_alpha0(const Params& p) {
    return log_chi(p) - p.Omega.get_d() * std::log(p.r.get_d()) + kappa_of(p) * (4 + std::log(two_a_plus_one(p)));
}

double log_alpha(const Params& p) { return log_alpha0(p) + kappa_of(p) * std::log(2.0); }

double log_alpha1(const Params& p) {
    const double kappa = kappa_of(p), r = p.r.get_d(), q = static_cast<double>(p.q), z = p.z0.get_d();
    return log_chi(p) - p.Omega.get_d() * std::log(r) + (r + 1) * std::log(q) +
           kappa * (4 + std::log(two_a_plus_one(p)) + std::log(q * std::fabs(z * (1 - z))));
}

SweepReport run_sweep(const Params& base, const std::vector<long>& ns, long digits, const BuildOptions& opt) {
    SweepReport rep;
    rep.log_chi = log_chi(base);
    rep.log_beta = log_beta(base);
    rep.log_alpha0 = base.mode == Mode::Zeta ? log_alpha0(base) : log_alpha1(base);
    const double ln10 = std::log(10.0);
    for (long n : ns) {
        Params p = base;
        p.n = n;
        p.validate();
        (void)p.kappa_n();
        BuildResult built = build_Fn(p, opt);
        SweepRow row;
        row.n = n;
        row.log_max_c = built.log_max_c;

        BigInt max_ell = 0;
        for (const auto& [pp, k] : admissible_pairs(p, false))
            for (const auto& v : form_coefficients(built.table, p, pp, k)) max_ell = std::max<BigInt>(max_ell, abs(v));
        row.log_max_ell = log_abs(max_ell);

        const auto pairs = admissible_pairs(p, true);
        row.log_max_form = -std::numeric_limits<double>::infinity();
        if (pairs.empty()) row.log_max_form = std::numeric_limits<double>::quiet_NaN();
        for (const auto& rec : verify_forms(built.table, p, pairs, digits)) {
            row.forms_ok = row.forms_ok && rec.ok;
            row.log_max_form = std::max(row.log_max_form, rec.lhs.mid().log10_abs() * ln10);
        }
        row.forms = pairs.size();
        rep.rows.push_back(row);
    }
    if (rep.rows.size() >= 3) {
        std::vector<std::pair<double, double>> c, e, f;
        for (const auto& r : rep.rows) {
            c.emplace_back(static_cast<double>(r.n), r.log_max_c);
            e.emplace_back(static_cast<double>(r.n), r.log_max_ell);
            f.emplace_back(static_cast<double>(r.n), r.log_max_form);
        }
        rep.slope_c = growth_slope(c);
        rep.slope_ell = growth_slope(e);
        rep.slope_form = growth_slope(f);
    } else {
        rep.slope_c = rep.slope_ell = rep.slope_form = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

std::string sweep_csv(const SweepReport& rep) {
    std::ostringstream out;
    out << std::setprecision(10);
    out << "n,log_max_c,log_max_ell,log_max_form,log_chi,log_beta,log_alpha0\n";
    for (const auto& r : rep.rows) {
        const double n = static_cast<double>(r.n);
        out << r.n << ',' << r.log_max_c << ',' << r.log_max_ell << ',' << r.log_max_form << ',' << n * rep.log_chi << ','
            << n * rep.log_beta << ',' << n * rep.log_alpha0 << '\n';
    }
    out << "slope," << rep.slope_c << ',' << rep.slope_ell << ',' << rep.slope_form << ',' << rep.log_chi << ','
        << rep.log_beta << ',' << rep.log_alpha0 << '\n';
    return out.str();
}

} // namespace sf
