#pragma once

#include "sf/arith.hpp"
#include "sf/bigint.hpp"

#include <compare>
#include <map>
#include <vector>

namespace sf {

struct Alpha {
    long a0 = 1;
    long a1 = 1;
    static Alpha zeta() { return {1, 1}; }
    static Alpha polylog() { return {1, 0}; }
};

// num(z) * z^{-z_order} * (1-z)^{-one_minus_z_order}; num[j] is the z^j coefficient.
struct ShiftedPoly {
    std::vector<BigInt> num;
    long z_order = 0;
    long one_minus_z_order = 0;

    BigInt coeff(long j) const;
    long degree() const;  // -1 for zero
    Rational eval(const Rational& z) const;
};

// Level k of the derivative recurrence: polys[i] is P_{k,i}, i = 0..A.
struct RecurrenceState {
    long level = 1;
    Alpha alpha;
    std::vector<ShiftedPoly> polys;

    // P_{1,i} = initial[i-1] for i = 1..A; P_{1,0} = 0.
    static RecurrenceState start(const std::vector<std::vector<BigInt>>& initial, Alpha alpha);
    void step();
};

struct ThetaShape {
    long a = 1;
    long n = 0;
    Alpha alpha;
};

struct ThetaKey {
    long k, i, j, ip, jp;
    auto operator<=>(const ThetaKey&) const = default;
};

// Sparse table of nonzero coefficients.
struct ThetaTable {
    std::map<ThetaKey, Rational> entries;
    Rational at(const ThetaKey& key) const;
};

// Coefficient of z^j in the numerator of P_{k,i} when c = unit vector at (i', j').
Rational theta_oracle(long k, long i, long j, long ip, long jp, const ThetaShape& shape);
// Same quantity from the combinatorial closed form.
Rational theta_closed(long k, long i, long j, long ip, long jp, const ThetaShape& shape);

// All nonzero theta at level k by unit-vector probing.
ThetaTable theta_table_oracle(const ThetaShape& shape, long k);
ThetaTable theta_table_oracle_serial(const ThetaShape& shape, long k);
ThetaTable theta_table_closed(const ThetaShape& shape, long k);

struct ThetaMismatch {
    ThetaKey key;
    Rational oracle;
    Rational closed;
};
// Compares both paths on every index with k <= k_max.
std::vector<ThetaMismatch> theta_crosscheck(const ThetaShape& shape, long k_max);
std::vector<ThetaMismatch> theta_crosscheck_serial(const ThetaShape& shape, long k_max);

// d_k^2 * Delta_{a, max(k, n)}
FactoredInt denominator(long k, long a, long n);

struct IntegralityViolationRecord {
    ThetaKey key;
    std::string kind;  // "non-integral" or "bound"
};

struct IntegralityReport {
    long k_max = 0;
    std::size_t checked = 0;
    double max_ratio_rows = 0;  // i >= 1
    double max_ratio_row0 = 0;  // i = 0
    std::vector<IntegralityViolationRecord> violations;
    bool ok() const { return violations.empty(); }
};

IntegralityReport integrality_report(const ThetaShape& shape, long k_max);
IntegralityReport integrality_report_serial(const ThetaShape& shape, long k_max);

} // namespace sf
