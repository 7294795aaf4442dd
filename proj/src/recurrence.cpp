#include "sf/recurrence.hpp"

#include "sf/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sf {

BigInt ShiftedPoly::coeff(long j) const {
    if (j < 0 || j >= static_cast<long>(num.size())) return 0;
    return num[static_cast<std::size_t>(j)];
}

long ShiftedPoly::degree() const {
    for (long j = static_cast<long>(num.size()) - 1; j >= 0; --j)
        if (num[static_cast<std::size_t>(j)] != 0) return j;
    return -1;
}

Rational ShiftedPoly::eval(const Rational& z) const {
    Rational acc = 0;
    for (auto it = num.rbegin(); it != num.rend(); ++it) acc = acc * z + Rational(*it);
    if (acc == 0) return 0;
    return acc * rpow(z, -z_order) * rpow(Rational(1) - z, -one_minus_z_order);
}

RecurrenceState RecurrenceState::start(const std::vector<std::vector<BigInt>>& initial, Alpha alpha) {
    RecurrenceState s;
    s.alpha = alpha;
    std::size_t len = 1;
    for (const auto& p : initial) len = std::max(len, p.size());
    s.polys.resize(initial.size() + 1);
    s.polys[0].num.assign(len, 0);
    for (std::size_t i = 0; i < initial.size(); ++i) {
        s.polys[i + 1].num = initial[i];
        s.polys[i + 1].num.resize(len, 0);
    }
    return s;
}

void RecurrenceState::step() {
    const long e = level - 1;
    const std::size_t rows = polys.size();
    const std::size_t len = polys.size() > 1 ? polys[1].num.size() : 1;

    std::vector<ShiftedPoly> next(rows);
    for (std::size_t i = 1; i < rows; ++i) {
        auto& out = next[i].num;
        out.assign(len, 0);
        for (std::size_t j = 0; j < len; ++j) {
            out[j] = (static_cast<long>(j) - e) * polys[i].num[j];
            if (i + 1 < rows) out[j] -= polys[i + 1].num[j];
        }
        next[i].z_order = e + 1;
    }

    // z(1-z) N0' - e(1-2z) N0 + (a1 z + a0)(1-z)^e N1
    const auto& n0 = polys[0].num;
    std::vector<BigInt> out(n0.size() + 1, 0);
    for (std::size_t j = 1; j < n0.size(); ++j) {
        BigInt d = static_cast<long>(j) * n0[j];
        out[j] += d;
        out[j + 1] -= d;
    }
    for (std::size_t j = 0; j < n0.size(); ++j) {
        out[j] -= e * n0[j];
        out[j + 1] += 2 * e * n0[j];
    }
    if (rows > 1) {
        std::vector<BigInt> w(static_cast<std::size_t>(e) + 2, 0);
        for (long m = 0; m <= e; ++m) {
            BigInt b = binomial(e, m);
            if (m % 2) b = -b;
            w[static_cast<std::size_t>(m)] += alpha.a0 * b;
            w[static_cast<std::size_t>(m) + 1] += alpha.a1 * b;
        }
        const auto& n1 = polys[1].num;
        for (std::size_t u = 0; u < w.size(); ++u) {
            if (w[u] == 0) continue;
            for (std::size_t j = 0; j < n1.size(); ++j)
                if (n1[j] != 0) {
                    if (u + j >= out.size()) out.resize(u + j + 1, 0);
                    out[u + j] += w[u] * n1[j];
                }
        }
    }
    out.resize(len + static_cast<std::size_t>(e) + 1, 0);
    next[0].num = std::move(out);
    next[0].z_order = e + 1;
    next[0].one_minus_z_order = e + 1;

    polys = std::move(next);
    ++level;
}

Rational ThetaTable::at(const ThetaKey& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? Rational(0) : it->second;
}

namespace {

void check_probe(long ip, long jp, const ThetaShape& shape) {
    if (shape.a < 1 || shape.n < 0) throw InvalidInput("theta: need a >= 1 and n >= 0");
    if (ip < 1 || ip > shape.a || jp < 0 || jp > shape.n) throw InvalidInput("theta: probe index out of range");
}

RecurrenceState unit_state(long ip, long jp, const ThetaShape& shape) {
    std::vector<std::vector<BigInt>> init(static_cast<std::size_t>(shape.a),
                                          std::vector<BigInt>(static_cast<std::size_t>(shape.n) + 1, 0));
    init[static_cast<std::size_t>(ip - 1)][static_cast<std::size_t>(jp)] = 1;
    return RecurrenceState::start(init, shape.alpha);
}

// (-1)^{I-i} sum_{h in H_{I-i,k}} kappa(T, k, h), for 1 <= i.
BigInt closed_row(long k, long i, long I, long T) {
    if (i > I || i <= I - k) return 0;
    BigInt s = 0;
    for (const auto& h : compositions(I - i, k)) s += kappa(T, k, h);
    return (I - i) % 2 ? BigInt(-s) : s;
}

BigInt closed_row0(long k, long j, long I, long T, const ThetaShape& shape) {
    const long n = shape.n;
    const long alphas[2] = {shape.alpha.a0, shape.alpha.a1};
    BigInt total = 0;
    for (long eps = 0; eps <= 1; ++eps) {
        if (alphas[eps] == 0) continue;
        BigInt part = 0;
        for (long sp = 1 - k; sp <= -1; ++sp) {
            for (long tp = -sp - k + eps; tp <= n - sp - k + eps; ++tp) {
                const long m = j - tp - k + 1;
                BigInt c = binomial(sp + k - 1, m);
                if (c == 0) continue;
                BigInt inner = 0;
                for (long al = -1 - sp; al <= k - 2; ++al) {
                    BigInt th = (tp + sp - eps + k == T) ? closed_row(k - al - 1, 1, I, T) : BigInt(0);
                    if (th == 0) continue;
                    inner += pochhammer(tp + 1, sp + al + 1) * pochhammer(sp + al + 2, -sp - 1) * th;
                }
                if (m % 2) c = -c;
                part += c * inner;
            }
        }
        total += alphas[eps] * part;
    }
    return total;
}

long row_length(long i, long k, const ThetaShape& shape) { return i == 0 ? shape.n + k : shape.n + 1; }

void record_level(const RecurrenceState& st, long ip, long jp, ThetaTable& out) {
    for (std::size_t i = 0; i < st.polys.size(); ++i) {
        const auto& num = st.polys[i].num;
        for (std::size_t j = 0; j < num.size(); ++j)
            if (num[j] != 0)
                out.entries.emplace(ThetaKey{st.level, static_cast<long>(i), static_cast<long>(j), ip, jp},
                                    Rational(num[j]));
    }
}

ThetaTable probe_table(const ThetaShape& shape, long k, long probe) {
    const long ip = probe / (shape.n + 1) + 1, jp = probe % (shape.n + 1);
    RecurrenceState st = unit_state(ip, jp, shape);
    while (st.level < k) st.step();
    ThetaTable t;
    record_level(st, ip, jp, t);
    return t;
}

void compare_probe(const ThetaShape& shape, long k_max, long probe, std::vector<ThetaMismatch>& out) {
    const long ip = probe / (shape.n + 1) + 1, jp = probe % (shape.n + 1);
    RecurrenceState st = unit_state(ip, jp, shape);
    for (long k = 1; k <= k_max; ++k) {
        if (k > 1) st.step();
        for (long i = 0; i <= shape.a; ++i)
            for (long j = 0; j < row_length(i, k, shape); ++j) {
                BigInt o = st.polys[static_cast<std::size_t>(i)].coeff(j);
                BigInt c = i == 0 ? closed_row0(k, j, ip, jp, shape) : (j == jp ? closed_row(k, i, ip, jp) : BigInt(0));
                if (o != c) out.push_back({{k, i, j, ip, jp}, Rational(o), Rational(c)});
            }
    }
}

struct ProbeIntegrality {
    std::size_t checked = 0;
    double max_rows = 0, max_row0 = 0;
    std::vector<IntegralityViolationRecord> violations;
};

void integrality_probe(const ThetaShape& shape, long k_max, long probe, const std::vector<BigInt>& deltas,
                       ProbeIntegrality& acc) {
    const long ip = probe / (shape.n + 1) + 1, jp = probe % (shape.n + 1);
    const BigInt amax = std::max(shape.alpha.a0, shape.alpha.a1);
    RecurrenceState st = unit_state(ip, jp, shape);
    for (long k = 1; k <= k_max; ++k) {
        if (k > 1) st.step();
        const BigInt& dk = deltas[static_cast<std::size_t>(k)];
        const BigInt fact = factorial(k - 1);
        const BigInt bound_rows = ipow(BigInt(k), static_cast<unsigned long>(shape.a)) *
                                  ipow(BigInt(2), static_cast<unsigned long>(shape.n)) * dk;
        const BigInt bound_row0 = amax * ipow(BigInt(k), static_cast<unsigned long>(shape.a + 1)) *
                                  ipow(BigInt(8), static_cast<unsigned long>(std::max(shape.n, k))) * dk;
        for (std::size_t i = 0; i < st.polys.size(); ++i) {
            const BigInt& bound = i == 0 ? bound_row0 : bound_rows;
            for (std::size_t j = 0; j < st.polys[i].num.size(); ++j) {
                const BigInt& th = st.polys[i].num[j];
                ++acc.checked;
                if (th == 0) continue;
                ThetaKey key{k, static_cast<long>(i), static_cast<long>(j), ip, jp};
                BigInt scaled = dk * th;
                if (!mpz_divisible_p(scaled.get_mpz_t(), fact.get_mpz_t())) {
                    acc.violations.push_back({key, "non-integral"});
                    continue;
                }
                BigInt v;
                mpz_divexact(v.get_mpz_t(), scaled.get_mpz_t(), fact.get_mpz_t());
                v = abs(v);
                double ratio = std::exp(log_abs(v) - log_abs(bound));
                (i == 0 ? acc.max_row0 : acc.max_rows) = std::max(i == 0 ? acc.max_row0 : acc.max_rows, ratio);
                if (v > bound) acc.violations.push_back({key, "bound"});
            }
        }
    }
}

std::vector<BigInt> delta_list(const ThetaShape& shape, long k_max) {
    std::vector<BigInt> d(static_cast<std::size_t>(k_max) + 1, 0);
    for (long k = 1; k <= k_max; ++k) d[static_cast<std::size_t>(k)] = denominator(k, shape.a, shape.n).value();
    return d;
}

IntegralityReport merge(long k_max, std::vector<ProbeIntegrality>& parts) {
    IntegralityReport r;
    r.k_max = k_max;
    for (auto& p : parts) {
        r.checked += p.checked;
        r.max_ratio_rows = std::max(r.max_ratio_rows, p.max_rows);
        r.max_ratio_row0 = std::max(r.max_ratio_row0, p.max_row0);
        r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
    }
    return r;
}

} // namespace

Rational theta_oracle(long k, long i, long j, long ip, long jp, const ThetaShape& shape) {
    check_probe(ip, jp, shape);
    if (k < 1 || i < 0 || i > shape.a) throw InvalidInput("theta: index out of range");
    RecurrenceState st = unit_state(ip, jp, shape);
    while (st.level < k) st.step();
    return Rational(st.polys[static_cast<std::size_t>(i)].coeff(j));
}

Rational theta_closed(long k, long i, long j, long ip, long jp, const ThetaShape& shape) {
    check_probe(ip, jp, shape);
    if (k < 1 || i < 0 || i > shape.a) throw InvalidInput("theta: index out of range");
    if (i == 0) return Rational(closed_row0(k, j, ip, jp, shape));
    return j == jp ? Rational(closed_row(k, i, ip, jp)) : Rational(0);
}

ThetaTable theta_table_oracle_serial(const ThetaShape& shape, long k) {
    check_probe(1, 0, shape);
    ThetaTable out;
    const long probes = shape.a * (shape.n + 1);
    for (long p = 0; p < probes; ++p) out.entries.merge(probe_table(shape, k, p).entries);
    return out;
}

ThetaTable theta_table_oracle(const ThetaShape& shape, long k) {
    check_probe(1, 0, shape);
    const long probes = shape.a * (shape.n + 1);
    std::vector<ThetaTable> parts(static_cast<std::size_t>(probes));
#pragma omp parallel for schedule(dynamic)
    for (long p = 0; p < probes; ++p) parts[static_cast<std::size_t>(p)] = probe_table(shape, k, p);
    ThetaTable out;
    for (auto& t : parts) out.entries.merge(t.entries);
    return out;
}

ThetaTable theta_table_closed(const ThetaShape& shape, long k) {
    check_probe(1, 0, shape);
    ThetaTable out;
    for (long ip = 1; ip <= shape.a; ++ip)
        for (long jp = 0; jp <= shape.n; ++jp) {
            for (long i = 1; i <= shape.a; ++i) {
                BigInt v = closed_row(k, i, ip, jp);
                if (v != 0) out.entries.emplace(ThetaKey{k, i, jp, ip, jp}, Rational(v));
            }
            for (long j = 0; j < shape.n + k; ++j) {
                BigInt v = closed_row0(k, j, ip, jp, shape);
                if (v != 0) out.entries.emplace(ThetaKey{k, 0, j, ip, jp}, Rational(v));
            }
        }
    return out;
}

std::vector<ThetaMismatch> theta_crosscheck_serial(const ThetaShape& shape, long k_max) {
    check_probe(1, 0, shape);
    std::vector<ThetaMismatch> out;
    const long probes = shape.a * (shape.n + 1);
    for (long p = 0; p < probes; ++p) compare_probe(shape, k_max, p, out);
    return out;
}

std::vector<ThetaMismatch> theta_crosscheck(const ThetaShape& shape, long k_max) {
    check_probe(1, 0, shape);
    const long probes = shape.a * (shape.n + 1);
    std::vector<std::vector<ThetaMismatch>> parts(static_cast<std::size_t>(probes));
#pragma omp parallel for schedule(dynamic)
    for (long p = 0; p < probes; ++p) compare_probe(shape, k_max, p, parts[static_cast<std::size_t>(p)]);
    std::vector<ThetaMismatch> out;
    for (auto& v : parts) out.insert(out.end(), v.begin(), v.end());
    return out;
}

FactoredInt denominator(long k, long a, long n) {
    if (k < 1 || a < 1 || n < 0) throw InvalidInput("denominator: need k >= 1, a >= 1, n >= 0");
    FactoredInt d = lcm_range(static_cast<std::uint64_t>(k));
    d *= d;
    d *= delta(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(std::max(k, n)));
    return d;
}

IntegralityReport integrality_report_serial(const ThetaShape& shape, long k_max) {
    check_probe(1, 0, shape);
    if (k_max < 1) throw InvalidInput("integrality_report: k_max >= 1");
    auto deltas = delta_list(shape, k_max);
    const long probes = shape.a * (shape.n + 1);
    std::vector<ProbeIntegrality> parts(1);
    for (long p = 0; p < probes; ++p) integrality_probe(shape, k_max, p, deltas, parts[0]);
    return merge(k_max, parts);
}

IntegralityReport integrality_report(const ThetaShape& shape, long k_max) {
    check_probe(1, 0, shape);
    if (k_max < 1) throw InvalidInput("integrality_report: k_max >= 1");
    auto deltas = delta_list(shape, k_max);
    const long probes = shape.a * (shape.n + 1);
    std::vector<ProbeIntegrality> parts(static_cast<std::size_t>(probes));
#pragma omp parallel for schedule(dynamic)
    for (long p = 0; p < probes; ++p) integrality_probe(shape, k_max, p, deltas, parts[static_cast<std::size_t>(p)]);
    return merge(k_max, parts);
}

} // namespace sf
