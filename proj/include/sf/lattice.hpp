#pragma once

#include "sf/bigint.hpp"

#include <functional>
#include <vector>

namespace sf {

using IntVec = std::vector<BigInt>;
using IntBasis = std::vector<IntVec>;  // one basis vector per row

BigInt dot(const IntVec& a, const IntVec& b);

// Integral LLL on linearly independent rows, delta = num/den.
void lll_reduce(IntBasis& basis, long delta_num = 99, long delta_den = 100);

// Z-basis of {x in Z^n : r.x = 0 for every row r}, LLL-reduced.
IntBasis integer_kernel(const std::vector<IntVec>& rows, std::size_t n);

// Fraction-free elimination.
struct DetRank {
    BigInt det;  // zero unless square and full rank
    std::size_t rank = 0;
};
DetRank bareiss(std::vector<IntVec> m);

// Fincke-Pohst enumeration of nonzero lattice vectors with |v|^2 <= radius2.
// The visitor may return a smaller radius2 to shrink the search.
// Throws InvariantViolation after `node_budget` tree nodes.
using LatticeVisitor = std::function<long double(const IntVec& v, long double radius2)>;
void enumerate_ball(const IntBasis& basis, long double radius2, const LatticeVisitor& visit,
                    std::size_t node_budget = 200'000'000);

} // namespace sf
