// Simple cubic families: the three-parameter construction, the square
// discriminant classifier, the Shanks polynomial, standard form and its
// Q-reduction, root degrees at infinity, unit regulator from root degrees.
#pragma once

#include "scff/factor.hpp"
#include "scff/poly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace scff {

// Monic cubic in x with F_q[t] coefficients: x^3 + c2 x^2 + c1 x + c0.
struct Cubic {
    Poly c2, c1, c0;

    uint32_t q() const { return c0.q(); }
    std::array<Poly, 4> as_array() const { return {c0, c1, c2, Poly::constant(q(), 1)}; }
};

// H(t,x) = x^3 + P x^2 + (P + c + n - k^3) x + c
struct SimpleCubicParams {
    Poly P;
    uint32_t c, n, k; // in F_q^*

    void validate() const;
};

Cubic build_simple_cubic(const SimpleCubicParams& params);

// x^3 - A x^2 - (A + b) x - c, the parameterization used for the unit and
// regulator arguments. Shanks is (b, c) = (3, 1).
Cubic simple_cubic_abc(const Poly& A, uint32_t b, uint32_t c);

struct ShanksPoly {
    Poly A;
    explicit ShanksPoly(Poly a);

    uint32_t q() const { return A.q(); }
    Cubic cubic() const { return simple_cubic_abc(A, 3, 1); }
    Poly disc_base() const; // A^2 + 3A + 9, with D(f) = (A^2+3A+9)^2
};

// Discriminant of H(t,x) as a quartic in an indeterminate P, ascending
// coefficients; constant term 4(k^3-c-n)^3 - 27c^2. The quartic agrees with
// disc(x^3 + Px^2 + (P+c+n-k^3)x + c) at every value of P (tested), and the
// Shanks parameters c = -1, k^3-n = 2 complete to (P^2 - 3P + 9)^2.
std::array<uint32_t, 5> discriminant_in_P(uint32_t c, uint32_t k, uint32_t n, uint32_t q);

// Is the quartic a perfect square (P^2 + aP + b)^2? Coefficient matching: a
// from the P^3 term, b from P^2, then verify P^1 and P^0.
bool quartic_is_square(const std::array<uint32_t, 5>& quartic, uint32_t q);

// All (c, k, n) in F_q^* x F_q^* x F_q whose discriminant quartic is a
// perfect square: exactly {(-1, k, k^3 - 2)}, one triple per k. n sweeps all
// of F_q since k^3 = 2 forces n = 0 for that k.
std::vector<std::array<uint32_t, 3>> classify_parameters(uint32_t q);

// Depressed model y^3 - a y + b obtained from x -> x - A/3.
struct StandardForm {
    Poly a, b;

    uint32_t q() const { return a.q(); }
    Poly discriminant() const; // 4a^3 - 27b^2
};

StandardForm standard_form(const ShanksPoly& f);

// Maximal monic Q with Q^2 | a and Q^3 | b, plus the reduced pair.
struct ReducedForm {
    StandardForm reduced;
    Poly Q;
};
ReducedForm reduce_standard_form(const StandardForm& sf, uint64_t seed = kDefaultFactorSeed);

// Degrees of the three roots as Laurent series at infinity, via the Newton
// polygon of the cubic for the degree valuation. Requires the simple cubic
// shape (constant nonzero norm term); always {deg A, 0, -deg A}.
std::array<int, 3> root_degrees_at_infinity(const Cubic& f);

// |det [[n, -n], [n, 0]]| = n^2 for the unit pair {eps, eps + k}.
int64_t regulator_from_root_degrees(const std::array<int, 3>& degrees);

// Frobenius duplicates: A = B^p defines the same field as B. Canonical
// representative takes p-th roots until no longer a p-th power.
bool is_frobenius_power(const Poly& A);
Poly frobenius_canonical(const Poly& A);

// A and -A-3 define literally the same field (1/eps is a root of the
// partner polynomial); the representative fixes sgn in [1, (q-1)/2].
Poly sign_canonical(const Poly& A);

} // namespace scff
