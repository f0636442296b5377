// Enumeration of monic irreducibles over F_q by (degree, lex) and the
// Gauss/necklace counting formula. Degrees are sieved whole and memoized,
// mirroring the precomputed prime tables the computations run from.
#pragma once

#include "scff/poly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace scff {

// (1/n) * sum_{d | n} mu(d) q^{n/d}
uint64_t gauss_irreducible_count(uint32_t q, int n);

bool is_irreducible(const Poly& f);

// Memoized per-degree tables of monic irreducibles, each degree sorted in
// the shared (degree, lex) order. Thread-safe; build once, share read-only.
class IrreducibleTable {
  public:
    explicit IrreducibleTable(uint32_t q);

    uint32_t q() const { return q_; }

    // All monic irreducibles of exactly degree d, lex order.
    const std::vector<Poly>& degree(int d) const;

    // First `count` primes in (degree, lex) order.
    // largest fully exhausted degree for a prefix of `count` primes
    int lambda_for_count(uint64_t count) const;
    uint64_t count_up_to_degree(int d) const;

  private:
    void build(int d) const;

    uint32_t q_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<Poly>> bydeg_;
};

} // namespace scff
