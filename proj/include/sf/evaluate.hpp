#pragma once

#include "sf/ball.hpp"
#include "sf/construct.hpp"
#include "sf/params.hpp"
#include "sf/series.hpp"

#include <utility>
#include <vector>

namespace sf {

// Radius at most 10^{-digits}.
BallReal zeta(long s, long digits);
// Li_s(x) for |x| <= 1, excluding (s, x) = (1, 1).
BallReal polylog(long s, const Rational& x, long digits);

// Coefficient vectors, index = power of z.
struct VpPolynomials {
    std::vector<Rational> v_inf;   // degree <= (r+1)n - 1
    std::vector<Rational> v_zero;  // degree <= 2rn, multiple of z^{rn+1}
};
VpPolynomials vp_polynomials(const CoeffTable& t, long p, const Params& params);

// Smallest and largest admissible k for the linear forms.
std::pair<long, long> k_window(const Params& params);
// Pairs (p, k) with 0 <= p <= h inside the window, in (p, k) order. With
// `convergent_only`, pairs failing the divergence guard are dropped.
std::vector<std::pair<long, long>> admissible_pairs(const Params& params, bool convergent_only);
// True when the termwise-differentiated series is known to converge.
bool series_converges(const Params& params, long p, long k);

// ell_{p,k,i} for i = 0..a+h; throws InvariantViolation on a non-integral entry.
std::vector<BigInt> form_coefficients(const CoeffTable& t, const Params& params, long p, long k);

// Scaled derivative of the defining series at z0, summed termwise.
BallReal series_lhs(const CoeffTable& t, const Params& params, long p, long k, long digits);

struct FormRecord {
    long p = 0;
    long k = 0;
    Rational z0;
    long q = 1;
    long digits = 0;
    std::vector<BigInt> ell;
    BallReal lhs;
    BallReal rhs;
    BallReal residual;
    bool ok = false;  // residual contains 0 and its radius is below 10^{-(digits-10)}
};

FormRecord verify_form(const CoeffTable& t, const Params& params, long p, long k, long digits = 60);
// Independent pairs run in parallel; order of the result follows `pairs`.
std::vector<FormRecord> verify_forms(const CoeffTable& t, const Params& params,
                                     const std::vector<std::pair<long, long>>& pairs, long digits = 60);

struct RankResult {
    std::vector<std::pair<long, long>> selection;
    std::vector<IntVec> matrix;  // matrix[i][j] = ell_{p_j, k_j, i}, i = 0..b+h
    BigInt det;
    std::size_t rank = 0;
    bool invertible() const { return det != 0; }
};

// Needs exactly b+h+1 pairs.
RankResult rank_matrix(const CoeffTable& t, const Params& params, const std::vector<std::pair<long, long>>& selection);
// Greedy choice over all admissible pairs, padded to b+h+1 columns.
std::vector<std::pair<long, long>> auto_selection(const CoeffTable& t, const Params& params);

} // namespace sf
