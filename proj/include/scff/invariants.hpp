// Field invariants of a Shanks field: index, discriminant, genus, signature,
// regulator (exact or interval), Hasse-Weil interval, Max Measure, the
// a^2 + 3b^2 norm-form test, and h = R h'.
#pragma once

#include "scff/simple_cubic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scff {

// Signature of every field here: the infinite place splits completely.
inline constexpr const char* kSignature = "(1,1;1,1;1,1)";

struct ShanksField {
    uint32_t q = 0;
    Poly A;
    Poly disc_f_base;       // A^2 + 3A + 9; D(f) = disc_f_base^2
    bool cube_free = true;
    Poly index;             // I: gcd(A^2+3A+9, A') when cube-free, else Q^3
    Poly disc_K_base;       // D(K) = disc_K_base^2
    int genus = 0;
    int64_t regulator_upper = 1;        // deg(A)^2
    std::optional<int64_t> regulator;   // pinned to deg(A)^2 when deg(I) <= deg(A)-1
    StandardForm sf;        // splitting model: reduced when not cube-free
    Poly Q;                 // reduction divisor (constant 1 when cube-free)
    bool frobenius_power = false;
    Poly canonical_A;

    int deg_A() const { return A.degree(); }
    int deg_index() const { return index.degree(); }
};

ShanksField build_field(uint32_t q, const Poly& A, uint64_t seed = kDefaultFactorSeed);

struct HWInterval {
    double lower; // (sqrt(q)-1)^(2g), rounded down
    double upper; // (sqrt(q)+1)^(2g), rounded up
    bool contains(long double h) const { return lower <= h && h <= upper; }
};

HWInterval hasse_weil(uint32_t q, int g);

// (h' - ceil(lower/R)) / (floor(upper/R) - ceil(lower/R))
double max_measure(int64_t hprime, uint32_t q, int g, int64_t R);

// least a >= 0 with a^2 + 3 b^2 = h', b >= 0
std::optional<std::pair<int64_t, int64_t>> norm_form_decompose(int64_t hprime);

struct RegulatorBounds {
    int deg_disc_K;               // lower bound = deg_disc_K^2 / 16 (exact rational)
    int64_t upper;                // deg(A)^2
    bool pinned;                  // deg(I) <= deg(A)-1 forces R = deg(A)^2
    std::vector<int64_t> candidates; // divisors of upper inside [ceil(lower), upper]
};

RegulatorBounds regulator_bounds(const ShanksField& field);

// h = R h' for signature (1,1;1,1;1,1); R must divide h.
int64_t class_number_relation(int64_t h, int64_t R);

} // namespace scff
