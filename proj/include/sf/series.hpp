#pragma once

#include "sf/ball.hpp"
#include "sf/bigint.hpp"

#include <functional>
#include <vector>

namespace sf {

// coeff / (t - rho)^order
struct PoleTerm {
    Rational rho;
    long order = 1;
    Rational coeff;
};

// g(t) evaluated exactly, together with its partial fraction decomposition
// (no polynomial part). Used for sums of (-1)^t g(t).
struct AlternatingSummand {
    std::function<Rational(long)> eval;
    std::vector<PoleTerm> poles;
};

// |term(t)| <= A (t + c)^m x^t for every t >= t0, with 0 <= x < 1.
struct GeometricSummand {
    std::function<Rational(long)> eval;
    Rational A;
    long c = 0;
    long m = 0;
    Rational x;
};

// Exact partial sum plus a certified bound on everything left out.
struct SeriesResult {
    Rational value;
    BigFloat error{kRadPrec};
    long terms = 0;

    // Enclosure with enough working precision for `digits` absolute digits.
    BallReal ball(long digits) const;
};

// sum_{t >= t0} (-1)^t g(t); the error is below 10^{-target_digits}.
// Head terms up to T, then J Euler-weighted terms.
SeriesResult alternating_sum(const AlternatingSummand& g, long t0, long target_digits);

// sum_{t >= t0} term(t); the error is below 10^{-target_digits}.
SeriesResult geometric_sum(const GeometricSummand& g, long t0, long target_digits);

} // namespace sf
