// Factorization in F_q[t]: squarefree decomposition, distinct-degree
// splitting, Cantor-Zassenhaus equal-degree splitting.
#pragma once

#include "scff/poly.hpp"

#include <cstdint>
#include <vector>

namespace scff {

struct Factorization {
    uint32_t unit = 1;
    std::vector<std::pair<Poly, int>> factors; // monic irreducible, multiplicity; (degree, lex) sorted

    Poly expand(uint32_t q) const;
};

inline constexpr uint64_t kDefaultFactorSeed = 0x5eed5cffULL;

Factorization factor(const Poly& f, uint64_t seed = kDefaultFactorSeed);

bool is_squarefree(const Poly& f);
bool is_cube_free(const Poly& f, uint64_t seed = kDefaultFactorSeed);

} // namespace scff
