#pragma once

#include "sf/ball.hpp"
#include "sf/params.hpp"
#include "sf/siegel.hpp"

#include <optional>
#include <vector>

namespace sf {

// c[i-1][j] is c_{i,j}, i = 1..a, j = 0..n.
struct CoeffTable {
    long a = 0;
    long n = 0;
    std::vector<std::vector<BigInt>> c;

    static CoeffTable zeros(long a, long n);
    // Column order (i'-1)(n+1)+j', matching the linear system.
    static CoeffTable from_vector(long a, long n, const IntVec& x);
    long b() const;  // largest i with a nonzero row, 0 for the zero table
    bool is_zero() const { return b() == 0; }
    BigInt max_abs() const;
    BigInt abs_sum() const;
};

// A_d for d = 1..D stored at index d-1.
struct TailExpansion {
    std::vector<BigInt> coeffs;
    BigInt at(long d) const { return coeffs.at(static_cast<std::size_t>(d - 1)); }
};

BigInt tail_coefficient(const CoeffTable& t, long d);
TailExpansion tail_expansion(const CoeffTable& t, long D);

// omega*n - 1 equality rows; with `weighted`, rows for omega*n <= d < Omega*n as well.
SiegelProblem vanishing_system(const Params& p, bool weighted = false);

struct BuildOptions {
    Backend backend = Backend::Auto;
    bool weighted = false;
};

struct BuildResult {
    CoeffTable table;
    TailExpansion tail;  // d = 1..Omega*n
    SiegelSolution solution;
    double log_max_c = 0;
    double log_chi_n = 0;                 // n log chi
    std::vector<double> log_tail_abs;     // log|A_d| for d = 1..Omega*n, -inf when zero
    std::vector<double> log_tail_bound;   // log of r^{d-Omega n} n^d d^a chi^n
};

double log_chi(const Params& p);
BuildResult build_Fn(const Params& p, const BuildOptions& opt = {});

struct EquivalenceReport {
    long cap = 0;
    std::optional<long> d1;  // first d with A_d != 0
    std::optional<long> d2;  // first k with P_{k,1}(1) != 0
    BallReal residual;       // R_n(3/2) minus the A_d series
    bool residual_ok = false;
    bool ok() const { return d1 == d2 && residual_ok; }
};

// P_{k,1}(1) for k = 1..k_max, from the derivative recurrence.
std::vector<BigInt> p_k1_at_one(const CoeffTable& t, Alpha alpha, long k_max);

EquivalenceReport verify_equivalences(const CoeffTable& t, const Params& p, long digits = 50);

} // namespace sf
