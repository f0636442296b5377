// Class numbers two ways: the exact small-genus L-polynomial from complete
// splitting data up to degree g plus the functional equation, and the
// truncated Euler-product estimate E' with the psi(lambda, K) error bound.
#pragma once

#include "scff/splitting.hpp"

#include <cstdint>
#include <vector>

namespace scff {

inline constexpr int kOracleGenusCap = 8;

struct LPolynomial {
    uint32_t q = 0;
    int g = 0;
    std::vector<int64_t> a; // a_0 .. a_2g, a_0 = 1, a_{2g-i} = q^{g-i} a_i
    int64_t h = 1;          // L(1)
};

// Power series of (1-u)^{-2} prod_{deg P <= g} (local factor)^{-1} up to
// u^g — equal to L(u) there since primes of degree > g only contribute
// 1 + O(u^{g+1}) — completed by the functional equation. Exact integers.
//
// verify_next_degree additionally classifies primes of degree g+1 and checks
// the u^{g+1} series coefficient against the symmetry value q a_{g-1};
// failure means the genus input was wrong (InconsistencyError).
LPolynomial exact_l_polynomial(const ShanksField& field, const IrreducibleTable& table,
                               bool verify_next_degree = false, int threads = 1);

struct HApprox {
    long double Eprime = 0; // q^{g+2}/(q-1)^2 * prod f(P,1/q) over the first N primes
    double psi = 0;         // tail bound at the recorded lambda
    int64_t E = 0;          // round(E')
    int64_t L = 0;          // ceil(sqrt(E'(e^psi - 1) + 1/2)); |h - E| <= L^2
    int lambda = 0;         // largest degree fully exhausted by the first N primes
    uint64_t truncation = 0;
    int64_t hprime_estimate = 0; // round(E'/R)
};

HApprox truncated_estimate(const ShanksField& field, const IrreducibleTable& table, uint64_t n_primes,
                           int threads = 1);

// The four-term tail bound, evaluated verbatim; eps_lambda = 2 for odd
// lambda, 3 for even.
double psi_bound(uint32_t q, int g, int lambda);

int64_t interval_radius(long double Eprime, double psi);

} // namespace scff
