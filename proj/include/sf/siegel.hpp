#pragma once

#include "sf/ball.hpp"
#include "sf/bigint.hpp"
#include "sf/lattice.hpp"

#include <string>
#include <vector>

namespace sf {

// Rows [0, m0) are equalities; rows [m0, M) are weighted inequalities with weights G.
struct SiegelProblem {
    std::vector<IntVec> lambda;
    std::size_t m0 = 0;
    std::size_t n = 0;
    std::vector<BigFloat> H;  // size M, H[m] >= Euclidean norm of row m, H[m] > 0
    std::vector<BigFloat> G;  // size M - m0, each >= 1

    std::size_t rows() const { return lambda.size(); }
    std::size_t cols() const { return n; }

    // H defaults to max(1, row norm) rounded up, G to ones. Validates shapes and bounds exactly.
    static SiegelProblem make(std::vector<IntVec> lambda, std::size_t m0, std::size_t n_cols,
                              std::vector<BigFloat> H = {}, std::vector<BigFloat> G = {});
};

enum class Backend { Auto, Enumeration, Reduction };

Backend parse_backend(const std::string& s);
std::string to_string(Backend b);

struct SiegelSolution {
    IntVec x;
    Backend used = Backend::Auto;
    BigFloat X;
    BigInt max_abs;
    double box_ratio = 0;              // max|x_n| / X
    std::vector<double> row_ratios;    // |lambda_m x| G_m / (H_m X), m >= m0
    bool certified = false;            // box_ratio <= 1 and every row ratio <= 1
};

// (prod_{m<m0} H_m * prod_{m>=m0} G_m)^{1/(N-m0)}, rounded up at 256 bits.
BigFloat bound_X(const SiegelProblem& p);

SiegelSolution solve(const SiegelProblem& p, Backend backend = Backend::Auto);

} // namespace sf
