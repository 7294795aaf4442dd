#include "sf/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace sf {

namespace {

constexpr mpfr_prec_t kPrec = 256;

BigFloat row_norm_up(const IntVec& row) {
    BigInt s = 0;
    for (const auto& x : row) s += x * x;
    BigFloat r = BigFloat::from(s, kPrec, MPFR_RNDU);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
    return r;
}

// H^2 >= |row|^2, compared exactly via a downward-rounded square.
bool dominates_norm(const BigFloat& H, const IntVec& row) {
    BigInt s = 0;
    for (const auto& x : row) s += x * x;
    BigFloat sq(2 * H.prec() + 2);
    mpfr_sqr(sq.get(), H.get(), MPFR_RNDD);  // exact at doubled precision
    return mpfr_cmp_z(sq.get(), s.get_mpz_t()) >= 0;
}

BigInt max_abs(const IntVec& x) {
    BigInt m = 0;
    for (const auto& v : x) m = std::max<BigInt>(m, abs(v));
    return m;
}

BigInt norm2(const IntVec& x) {
    BigInt s = 0;
    for (const auto& v : x) s += v * v;
    return s;
}

IntVec canonical(IntVec x) {
    for (const auto& v : x) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : x) w = -w;
        break;
    }
    return x;
}

// (max|x|, |x|^2, lexicographic) on the sign-normalized vector.
bool better(const IntVec& a, const IntVec& b) {
    BigInt ma = max_abs(a), mb = max_abs(b);
    if (ma != mb) return ma < mb;
    BigInt na = norm2(a), nb = norm2(b);
    if (na != nb) return na < nb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// G_m |lambda_m x| <= H_m X, checked with lhs rounded up and rhs rounded down.
bool row_ok(const SiegelProblem& p, std::size_t m, const BigInt& value, const BigFloat& X) {
    BigFloat lhs = BigFloat::from(BigInt(abs(value)), kPrec, MPFR_RNDU);
    mpfr_mul(lhs.get(), lhs.get(), p.G[m - p.m0].get(), MPFR_RNDU);
    BigFloat rhs(kPrec);
    mpfr_mul(rhs.get(), p.H[m].get(), X.get(), MPFR_RNDD);
    return mpfr_lessequal_p(lhs.get(), rhs.get()) != 0;
}

bool feasible(const SiegelProblem& p, const IntVec& x, const BigFloat& X) {
    for (const auto& v : x)
        if (mpfr_cmp_z(X.get(), BigInt(abs(v)).get_mpz_t()) < 0) return false;
    for (std::size_t m = p.m0; m < p.rows(); ++m)
        if (!row_ok(p, m, dot(p.lambda[m], x), X)) return false;
    return true;
}

double ratio(const BigFloat& num, const BigFloat& den) {
    BigFloat r(64);
    mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
    return r.to_double();
}

SiegelSolution finish(const SiegelProblem& p, IntVec x, Backend used, const BigFloat& X) {
    SiegelSolution s;
    s.x = std::move(x);
    s.used = used;
    s.X = X;
    s.max_abs = max_abs(s.x);
    s.box_ratio = ratio(BigFloat::from(s.max_abs, kPrec), X);
    for (std::size_t m = p.m0; m < p.rows(); ++m) {
        BigFloat lhs = BigFloat::from(BigInt(abs(dot(p.lambda[m], s.x))), kPrec, MPFR_RNDU);
        mpfr_mul(lhs.get(), lhs.get(), p.G[m - p.m0].get(), MPFR_RNDU);
        BigFloat rhs(kPrec);
        mpfr_mul(rhs.get(), p.H[m].get(), X.get(), MPFR_RNDD);
        s.row_ratios.push_back(ratio(lhs, rhs));
    }
    s.certified = feasible(p, s.x, X);
    for (std::size_t m = 0; m < p.m0; ++m)
        if (dot(p.lambda[m], s.x) != 0) throw InvariantViolation("siegel: equality row violated");
    return s;
}

IntBasis equality_kernel(const SiegelProblem& p) {
    std::vector<IntVec> eq(p.lambda.begin(), p.lambda.begin() + static_cast<long>(p.m0));
    IntBasis K = integer_kernel(eq, p.cols());
    if (K.empty()) throw NoSolution("siegel: the equality rows admit no nonzero integer solution");
    return K;
}

std::optional<IntVec> solve_enumeration(const SiegelProblem& p, const IntBasis& K, const BigFloat& X) {
    std::optional<IntVec> best;
    for (const auto& b : K)
        if (feasible(p, b, X)) {
            IntVec c = canonical(b);
            if (!best || better(c, *best)) best = c;
        }
    const long double n = static_cast<long double>(p.cols());
    auto radius_for = [&](const BigInt& mu) {
        long double m = mpz_get_d(mu.get_mpz_t());
        return n * m * m;
    };
    long double r2;
    if (best) {
        r2 = radius_for(max_abs(*best));
    } else {
        long double x = mpfr_get_ld(X.get(), MPFR_RNDU);
        r2 = n * x * x;
    }
    enumerate_ball(K, r2, [&](const IntVec& v, long double cur) {
        if (!feasible(p, v, X)) return cur;
        IntVec c = canonical(v);
        if (!best || better(c, *best)) best = c;
        return radius_for(max_abs(*best));
    });
    return best;
}

IntVec solve_reduction(const SiegelProblem& p, IntBasis K) {
    if (p.rows() == p.m0) {
        lll_reduce(K);
        IntVec best = canonical(K[0]);
        for (const auto& b : K)
            if (better(canonical(b), best)) best = canonical(b);
        return best;
    }
    // Weight 2^{e_m} ~ G_m / H_m on row m; scale everything by 2^E to stay integral.
    std::vector<long> e;
    long E = 0;
    for (std::size_t m = p.m0; m < p.rows(); ++m) {
        BigFloat w(kPrec);
        mpfr_div(w.get(), p.G[m - p.m0].get(), p.H[m].get(), MPFR_RNDN);
        const long ex = static_cast<long>(mpfr_get_exp(w.get())) - 1;  // 2^ex <= w < 2^{ex+1}
        e.push_back(ex);
        E = std::max(E, -ex);
    }
    const std::size_t N = p.cols();
    IntBasis emb;
    for (const auto& b : K) {
        IntVec v;
        for (const auto& x : b) v.push_back(x << static_cast<unsigned long>(E));
        for (std::size_t m = p.m0; m < p.rows(); ++m)
            v.push_back(dot(p.lambda[m], b) << static_cast<unsigned long>(E + e[m - p.m0]));
        emb.push_back(std::move(v));
    }
    lll_reduce(emb);
    auto weighted = [&](const IntVec& v) { return max_abs(v); };
    const IntVec* pick = &emb[0];
    for (const auto& v : emb)
        if (weighted(v) < weighted(*pick)) pick = &v;
    std::vector<IntVec> ties;
    for (const auto& v : emb)
        if (weighted(v) == weighted(*pick)) {
            IntVec x(v.begin(), v.begin() + static_cast<long>(N));
            for (auto& c : x) c >>= static_cast<unsigned long>(E);
            ties.push_back(canonical(x));
        }
    IntVec best = ties[0];
    for (const auto& t : ties)
        if (better(t, best)) best = t;
    return best;
}

} // namespace

SiegelProblem SiegelProblem::make(std::vector<IntVec> lambda, std::size_t m0, std::size_t n_cols,
                                  std::vector<BigFloat> H, std::vector<BigFloat> G) {
    SiegelProblem p;
    const std::size_t M = lambda.size();
    if (n_cols == 0) throw InvalidInput("siegel: need at least one unknown");
    if (m0 > M) throw InvalidInput("siegel: M0 exceeds the number of rows");
    if (M > m0 && n_cols <= M) throw InvalidInput("siegel: need N > M when inequality rows are present");
    for (const auto& r : lambda)
        if (r.size() != n_cols) throw InvalidInput("siegel: ragged coefficient matrix");
    if (H.empty()) {
        for (const auto& r : lambda) {
            BigFloat h = row_norm_up(r);
            if (mpfr_cmp_ui(h.get(), 1) < 0) mpfr_set_ui(h.get(), 1, MPFR_RNDU);
            H.push_back(std::move(h));
        }
    }
    if (G.empty()) G.assign(M - m0, BigFloat::from(BigInt(1), kPrec));
    if (H.size() != M || G.size() != M - m0) throw InvalidInput("siegel: H or G has the wrong length");
    for (std::size_t m = 0; m < M; ++m) {
        if (H[m].sign() <= 0) throw InvalidInput("siegel: H must be positive");
        if (!dominates_norm(H[m], lambda[m])) throw InvalidInput("siegel: H_m is below the row norm");
    }
    for (const auto& g : G)
        if (mpfr_cmp_ui(g.get(), 1) < 0) throw InvalidInput("siegel: G must be >= 1");
    p.lambda = std::move(lambda);
    p.m0 = m0;
    p.n = n_cols;
    p.H = std::move(H);
    p.G = std::move(G);
    return p;
}

Backend parse_backend(const std::string& s) {
    if (s == "auto") return Backend::Auto;
    if (s == "enumeration") return Backend::Enumeration;
    if (s == "reduction") return Backend::Reduction;
    throw InvalidInput("unknown backend: " + s);
}

std::string to_string(Backend b) {
    switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Enumeration: return "enumeration";
    case Backend::Reduction: return "reduction";
    }
    return "auto";
}

BigFloat bound_X(const SiegelProblem& p) {
    if (p.rows() == 0 && p.m0 == 0) return BigFloat::from(BigInt(1), kPrec);
    if (p.cols() <= p.m0) throw InvalidInput("bound_X: need N > M0");
    BigFloat prod = BigFloat::from(BigInt(1), kPrec);
    for (std::size_t m = 0; m < p.m0; ++m) mpfr_mul(prod.get(), prod.get(), p.H[m].get(), MPFR_RNDU);
    for (const auto& g : p.G) mpfr_mul(prod.get(), prod.get(), g.get(), MPFR_RNDU);
    BigFloat X(kPrec);
    mpfr_rootn_ui(X.get(), prod.get(), static_cast<unsigned long>(p.cols() - p.m0), MPFR_RNDU);
    return X;
}

SiegelSolution solve(const SiegelProblem& p, Backend backend) {
    if (p.cols() <= p.m0) throw NoSolution("siegel: N - M0 must be at least 1");
    IntBasis K = equality_kernel(p);
    BigFloat X = bound_X(p);
    const bool small = K.size() <= 12;
    if (backend == Backend::Enumeration || (backend == Backend::Auto && small)) {
        try {
            if (auto x = solve_enumeration(p, K, X)) return finish(p, *x, Backend::Enumeration, X);
            if (backend == Backend::Enumeration)
                throw InvariantViolation("siegel: enumeration found no vector inside the Minkowski box");
        } catch (const InvariantViolation&) {
            if (backend == Backend::Enumeration) throw;
        }
    }
    return finish(p, solve_reduction(p, std::move(K)), Backend::Reduction, X);
}

} // namespace sf
