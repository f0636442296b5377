#include "scff/zeta.hpp"

#include "scff/errors.hpp"

#include <cmath>

namespace scff {

namespace {

// in-place division of ser (mod u^{N+1}) by a polynomial with constant
// term 1 given as (offset, coeff) terms
void div_series(std::vector<int64_t>& ser, std::initializer_list<std::pair<int, int64_t>> divisor) {
    const int N = static_cast<int>(ser.size()) - 1;
    for (int n = 0; n <= N; ++n) {
        int64_t s = ser[static_cast<size_t>(n)];
        for (const auto& [j, c] : divisor)
            if (j > 0 && j <= n) s -= c * ser[static_cast<size_t>(n - j)];
        ser[static_cast<size_t>(n)] = s;
    }
}

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<int64_t> euler_series(const Census& census, int N) {
    std::vector<int64_t> ser(static_cast<size_t>(N) + 1, 0);
    ser[0] = 1;
    div_series(ser, {{0, 1}, {1, -2}, {2, 1}}); // infinite place: (1-u)^2
    for (int nu = 1; nu <= static_cast<int>(census.by_degree.size()); ++nu) {
        auto [s, i] = census.by_degree[static_cast<size_t>(nu - 1)];
        for (uint64_t r = 0; r < s; ++r) div_series(ser, {{0, 1}, {nu, -2}, {2 * nu, 1}});
        for (uint64_t r = 0; r < i; ++r) div_series(ser, {{0, 1}, {nu, 1}, {2 * nu, 1}});
    }
    return ser;
}

} // namespace

LPolynomial exact_l_polynomial(const ShanksField& field, const IrreducibleTable& table, bool verify_next_degree,
                               int threads) {
    const int g = field.genus;
    if (g > kOracleGenusCap)
        throw ResourceRefusal("exact_l_polynomial: genus " + std::to_string(g) + " exceeds the oracle cap");
    LPolynomial L;
    L.q = field.q;
    L.g = g;
    if (g == 0) {
        L.a = {1};
        L.h = 1;
        return L;
    }
    int depth = verify_next_degree ? g + 1 : g;
    Census census = classify_primes(field, table, Truncation::degree(depth), threads);
    std::vector<int64_t> ser = euler_series(census, depth);

    L.a.assign(static_cast<size_t>(2 * g) + 1, 0);
    for (int i = 0; i <= g; ++i) L.a[static_cast<size_t>(i)] = ser[static_cast<size_t>(i)];
    for (int i = 0; i < g; ++i) L.a[static_cast<size_t>(2 * g - i)] = ipow(field.q, g - i) * L.a[static_cast<size_t>(i)];
    L.h = 0;
    for (int64_t c : L.a) L.h += c;

    if (L.a[0] != 1) throw InconsistencyError("L-polynomial: a_0 != 1");
    if (verify_next_degree && ser[static_cast<size_t>(g + 1)] != L.a[static_cast<size_t>(g + 1)])
        throw InconsistencyError("L-polynomial: functional equation fails at u^{g+1}; genus input is wrong");
    // N_1 identity: a_1 = N_1 - (q+1) with N_1 = 3 + 3*split_1 + ram_1
    {
        auto [s1, i1] = census.by_degree[0];
        uint64_t r1 = field.q - s1 - i1;
        int64_t n1 = 3 + 3 * static_cast<int64_t>(s1) + static_cast<int64_t>(r1);
        if (L.a[1] != n1 - static_cast<int64_t>(field.q) - 1)
            throw InconsistencyError("L-polynomial: N_1 identity fails");
    }
    if (static_cast<double>(L.a[1]) * L.a[1] > 4.0 * g * g * field.q)
        throw InconsistencyError("L-polynomial: |a_1| exceeds the Weil bound");
    if (!hasse_weil(field.q, g).contains(static_cast<long double>(L.h)))
        throw InconsistencyError("L-polynomial: h outside the Hasse-Weil interval");
    return L;
}

HApprox truncated_estimate(const ShanksField& field, const IrreducibleTable& table, uint64_t n_primes, int threads) {
    if (n_primes < 1) throw std::domain_error("truncated_estimate: N >= 1");
    Census census = classify_primes(field, table, Truncation::count(n_primes), threads);
    HApprox ha;
    ha.truncation = n_primes;
    ha.lambda = census.lambda;
    const long double q = field.q;
    long double logE = (field.genus + 2) * std::log(q) - 2 * std::log(q - 1.0L) + census.log_sum;
    ha.Eprime = std::exp(logE);
    if (ha.lambda < 1) throw std::domain_error("truncated_estimate: truncation below one full degree");
    ha.psi = psi_bound(field.q, field.genus, ha.lambda);
    ha.E = static_cast<int64_t>(std::llroundl(ha.Eprime));
    ha.L = interval_radius(ha.Eprime, ha.psi);
    const auto R = static_cast<long double>(field.regulator.value_or(field.regulator_upper));
    ha.hprime_estimate = static_cast<int64_t>(std::llroundl(ha.Eprime / R));
    return ha;
}

double psi_bound(uint32_t q, int g, int lambda) {
    if (lambda < 1) throw std::domain_error("psi_bound: lambda >= 1");
    if (g < 0) throw std::domain_error("psi_bound: g >= 0");
    const long double lq = q;
    const long double sq = std::sqrt(lq);
    const long double l = lambda;
    const long double eps = (lambda % 2 == 1) ? 2.0L : 3.0L;
    long double t1 = (2.0L * g / (l + 1)) * std::pow(lq, -(l + 1) / 2);
    long double t2 = ((2.0L * g + 4) / (l + 2)) * (sq / (sq - 1)) * (lq / (lq - 1)) * std::pow(lq, -(l + 2) / 2);
    long double t3 = (2.0L / (l + 1)) * std::pow(lq, -(l + 1));
    long double t4 = (2.0L / (l + 1)) * (lq / (lq - 1)) * std::pow(lq, -(l + 1)) * (std::pow(lq, (l + 1) / eps) - 1);
    return static_cast<double>(t1 + t2 + t3 + t4);
}

int64_t interval_radius(long double Eprime, double psi) {
    if (psi >= 1.0) throw BoundUnusableError("interval_radius: psi >= 1, raise lambda");
    long double v = Eprime * std::expm1(static_cast<long double>(psi)) + 0.5L;
    return static_cast<int64_t>(std::ceil(std::sqrt(v)));
}

} // namespace scff
