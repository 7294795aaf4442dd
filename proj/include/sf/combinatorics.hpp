#pragma once

#include "sf/bigint.hpp"

#include <vector>

namespace sf {

using Composition = std::vector<long>;

// Compositions of k into l+1 positive parts, lexicographic. Empty when l < 0 or l >= k.
std::vector<Composition> compositions(long l, long k);

// T(T-1)...(T-k+2) divided by prod_{i<l} (T+1-S_i), S_i the partial sums of h.
// A zero factor shared by numerator and denominator is dropped from both.
BigInt kappa(long T, long k, const Composition& h);

} // namespace sf
