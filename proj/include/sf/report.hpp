#pragma once

#include "sf/construct.hpp"
#include "sf/params.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sf {

// a -> infinity coefficients: log chi ~ logchi_coef log a, log beta ~ logbeta_coef log a,
// log alpha ~ -logalpha_coef sqrt(a log a), tau ~ tau_ratio_coef sqrt(a / log a).
struct AsymptoticConstants {
    double logchi_coef = 0;
    double logbeta_coef = 0;
    double logalpha_coef = 0;
    double tau_ratio_coef = 0;
    double shrink_factor = 0;
    double final_coef = 0;
};

AsymptoticConstants asymptotic_constants(double r, double kappa, double omega, double Omega_coef, double h_frac, Mode mode);

// zeta: (h+1)(kappa-2r)+omega > a; polylog: (h+1)(kappa-r-1)+omega > a.
bool feasibility_check(const Rational& r, const Rational& kappa, const Rational& omega, const Rational& h,
                       const Rational& a, Mode mode);

// ([K_inf:R] / [K:Q]) (tau + 1), tau = -log_alpha / log_beta.
double dimension_bound(double log_alpha, double log_beta, long degree, bool real_embedding);

// Least-squares slope of log(magnitude) against n.
double measured_growth(const std::vector<std::pair<double, double>>& n_magnitude);
// Same, with the logarithms already taken.
double growth_slope(const std::vector<std::pair<double, double>>& n_log_magnitude);

// Finite-a rates per unit n (kappa must be set).
double log_beta(const Params& p);
double log_alpha0(const Params& p);
double log_alpha(const Params& p);   // zeta mode: 2^kappa alpha0
double log_alpha1(const Params& p);  // polylog mode

struct SweepRow {
    long n = 0;
    double log_max_c = 0;
    double log_max_ell = 0;
    double log_max_form = 0;
    std::size_t forms = 0;
    bool forms_ok = true;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    double slope_c = 0;
    double slope_ell = 0;
    double slope_form = 0;
    double log_chi = 0;
    double log_beta = 0;
    double log_alpha0 = 0;
};

// Builds F_n for every n, computes every admissible ell and verifies every convergent form.
SweepReport run_sweep(const Params& base, const std::vector<long>& ns, long digits = 60, const BuildOptions& opt = {});
std::string sweep_csv(const SweepReport& rep);

} // namespace sf
