#include "sf/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace sf {

BigInt dot(const IntVec& a, const IntVec& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

BigInt round_div(const BigInt& num, const BigInt& den) {
    // floor((2 num + den) / (2 den)), den > 0
    BigInt q;
    BigInt t = 2 * num + den, d2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
    return q;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void axpy(IntVec& y, const BigInt& q, const IntVec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

// Integral LLL, following Cohen's Algorithm 2.6.7 with 1-based indices.
class IntegralLLL {
public:
    IntegralLLL(IntBasis& b, long dn, long dd) : b_(b), n_(b.size()), dn_(dn), dd_(dd) {
        d_.assign(n_ + 1, 0);
        lam_.assign(n_ + 1, std::vector<BigInt>(n_ + 1, 0));
    }

    void run() {
        if (n_ <= 1) return;
        d_[0] = 1;
        d_[1] = dot(v(1), v(1));
        if (d_[1] == 0) throw InvalidInput("lll_reduce: zero basis vector");
        std::size_t k = 2, kmax = 1;
        while (k <= n_) {
            if (k > kmax) {
                kmax = k;
                for (std::size_t j = 1; j <= k; ++j) {
                    BigInt u = dot(v(k), v(j));
                    for (std::size_t i = 1; i < j; ++i) u = exact_div(d_[i] * u - lam_[k][i] * lam_[j][i], d_[i - 1]);
                    if (j < k) lam_[k][j] = u;
                    else d_[k] = u;
                }
                if (d_[k] == 0) throw InvalidInput("lll_reduce: basis vectors are linearly dependent");
            }
            red(k, k - 1);
            if (dd_ * d_[k] * d_[k - 2] < dn_ * d_[k - 1] * d_[k - 1] - dd_ * lam_[k][k - 1] * lam_[k][k - 1]) {
                swap(k, kmax);
                k = std::max<std::size_t>(2, k - 1);
            } else {
                for (std::size_t l = k - 1; l-- > 1;) red(k, l);
                ++k;
            }
        }
    }

private:
    IntBasis& b_;
    std::size_t n_;
    long dn_, dd_;
    std::vector<BigInt> d_;
    std::vector<std::vector<BigInt>> lam_;

    IntVec& v(std::size_t i) { return b_[i - 1]; }

    void red(std::size_t k, std::size_t l) {
        if (2 * abs(lam_[k][l]) <= d_[l]) return;
        BigInt q = round_div(lam_[k][l], d_[l]);
        axpy(v(k), q, v(l));
        lam_[k][l] -= q * d_[l];
        for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
    }

    void swap(std::size_t k, std::size_t kmax) {
        std::swap(v(k), v(k - 1));
        for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
        BigInt lam = lam_[k][k - 1];
        BigInt B = exact_div(d_[k - 2] * d_[k] + lam * lam, d_[k - 1]);
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            BigInt t = lam_[i][k];
            lam_[i][k] = exact_div(d_[k] * lam_[i][k - 1] - lam * t, d_[k - 1]);
            lam_[i][k - 1] = exact_div(B * t + lam * lam_[i][k], d_[k]);
        }
        d_[k - 1] = B;
    }
};

} // namespace

void lll_reduce(IntBasis& basis, long delta_num, long delta_den) {
    if (delta_num * 4 <= delta_den || delta_num >= delta_den) throw InvalidInput("lll_reduce: delta outside (1/4, 1)");
    IntegralLLL(basis, delta_num, delta_den).run();
}

IntBasis integer_kernel(const std::vector<IntVec>& rows, std::size_t n) {
    IntBasis basis(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    for (const auto& row : rows) {
        if (row.size() != n) throw InvalidInput("integer_kernel: row length mismatch");
        IntVec r = row;
        BigInt g = 0;
        for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 0) continue;
        for (auto& x : r) x = exact_div(x, g);

        std::vector<BigInt> val(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) val[i] = dot(r, basis[i]);
        // Euclid on the values, mirrored on the basis vectors.
        while (true) {
            std::size_t piv = basis.size();
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (val[i] != 0 && (piv == basis.size() || abs(val[i]) < abs(val[piv]))) piv = i;
            if (piv == basis.size()) break;
            bool others = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (i == piv || val[i] == 0) continue;
                BigInt q = round_div(val[i] * sgn(val[piv]), abs(val[piv]));
                val[i] -= q * val[piv];
                axpy(basis[i], q, basis[piv]);
                others = others || val[i] != 0;
            }
            if (!others) {
                basis.erase(basis.begin() + static_cast<long>(piv));
                break;
            }
        }
        lll_reduce(basis);
    }
    return basis;
}

DetRank bareiss(std::vector<IntVec> m) {
    DetRank out;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    BigInt prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    out.rank = r;
    out.det = (rows == cols && r == rows && rows > 0) ? BigInt(sign * prev) : BigInt(rows == 0 && cols == 0 ? 1 : 0);
    return out;
}

namespace {

struct Enumerator {
    std::size_t dim;
    const IntBasis& basis;
    std::vector<std::vector<long double>> mu;
    std::vector<long double> B;
    std::vector<long> y;
    long double r2;
    const LatticeVisitor& visit;
    std::size_t nodes = 0, budget;

    void recurse(std::size_t i, long double partial) {
        long double c = 0;
        for (std::size_t j = i + 1; j < dim; ++j) c -= static_cast<long double>(y[j]) * mu[j][i];
        const long double slack = r2 * (1 + 1e-12L) + 1e-9L - partial;
        if (slack < 0) return;
        const long double w = std::sqrt(slack / B[i]);
        const long lo = static_cast<long>(std::ceil(c - w)), hi = static_cast<long>(std::floor(c + w));
        for (long t = lo; t <= hi; ++t) {
            if (++nodes > budget) throw InvariantViolation("lattice enumeration exceeded its node budget");
            const long double d = static_cast<long double>(t) - c;
            const long double np = partial + d * d * B[i];
            if (np > r2 * (1 + 1e-12L) + 1e-9L) continue;
            y[i] = t;
            if (i == 0) {
                bool zero = true;
                for (long yy : y) zero = zero && yy == 0;
                if (zero) continue;
                IntVec v(basis[0].size(), 0);
                for (std::size_t j = 0; j < dim; ++j)
                    if (y[j] != 0)
                        for (std::size_t m = 0; m < v.size(); ++m) v[m] += y[j] * basis[j][m];
                r2 = std::min(r2, visit(v, r2));
            } else {
                recurse(i - 1, np);
            }
        }
        y[i] = 0;
    }
};

} // namespace

void enumerate_ball(const IntBasis& basis, long double radius2, const LatticeVisitor& visit, std::size_t node_budget) {
    const std::size_t dim = basis.size();
    if (dim == 0) return;
    std::vector<std::vector<long double>> b(dim), bstar(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (const auto& x : basis[i]) {
            long double v = mpz_get_d(x.get_mpz_t());
            if (!std::isfinite(v)) throw InvariantViolation("enumeration basis entry out of floating range");
            b[i].push_back(v);
        }
    Enumerator e{dim, basis, std::vector<std::vector<long double>>(dim, std::vector<long double>(dim, 0)),
                 std::vector<long double>(dim, 0), std::vector<long>(dim, 0), radius2, visit, 0, node_budget};
    for (std::size_t i = 0; i < dim; ++i) {
        bstar[i] = b[i];
        for (std::size_t j = 0; j < i; ++j) {
            long double num = 0;
            for (std::size_t m = 0; m < b[i].size(); ++m) num += b[i][m] * bstar[j][m];
            e.mu[i][j] = num / e.B[j];
            for (std::size_t m = 0; m < b[i].size(); ++m) bstar[i][m] -= e.mu[i][j] * bstar[j][m];
        }
        for (long double x : bstar[i]) e.B[i] += x * x;
        if (e.B[i] <= 0) throw InvalidInput("enumerate_ball: degenerate basis");
    }
    e.recurse(dim - 1, 0);
}

} // namespace sf
