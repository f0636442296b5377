// P-signatures of finite primes in a Shanks field and the local Euler
// factors f(P, 1/q) they induce.
#pragma once

#include "scff/invariants.hpp"
#include "scff/irreducibles.hpp"

#include <cstdint>
#include <vector>

namespace scff {

enum class SplitTag { Split, Inert, Ramified };

// Local inverse-root data (z1, z2): Split (1,1); Inert the primitive cube
// roots of unity, so (q^nu - z1)(q^nu - z2) = q^(2nu) + q^nu + 1;
// Ramified (0,0).
struct SplitType {
    SplitTag tag;

    const char* signature() const {
        switch (tag) {
            case SplitTag::Split: return "(1,1;1,1;1,1)";
            case SplitTag::Inert: return "(1,3)";
            default: return "(3,1)";
        }
    }
    const char* name() const {
        switch (tag) {
            case SplitTag::Split: return "split";
            case SplitTag::Inert: return "inert";
            default: return "ramified";
        }
    }
};

// Ramified iff P divides both a and b; else the square test (when only b
// vanishes mod P) or the cubic's root count decides split against inert.
SplitType p_signature(const ShanksField& field, const Poly& P);

// f(P, 1/q) as an exact rational: Split q^(2nu)/(q^nu-1)^2,
// Inert q^(2nu)/(q^(2nu)+q^nu+1), Ramified 1.
struct LocalFactor {
    uint64_t num, den;
};
LocalFactor local_factor(SplitType st, int nu, uint32_t q);
long double log_local_factor(SplitTag tag, int nu, uint32_t q);

// Truncation policy: the first N primes in (degree, lex) order, or all
// primes of degree <= lambda.
struct Truncation {
    enum class Kind { Count, Degree } kind;
    uint64_t value;

    static Truncation count(uint64_t n) { return {Kind::Count, n}; }
    static Truncation degree(int lam) { return {Kind::Degree, static_cast<uint64_t>(lam)}; }
};

struct Census {
    uint64_t split = 0, inert = 0, ramified = 0;
    int lambda = 0;        // largest fully exhausted degree
    uint64_t used = 0;     // primes consumed
    long double log_sum = 0; // sum of log f(P,1/q), deterministic reduction order
    // per-degree (split, inert) counts for the oracle's series assembly
    std::vector<std::array<uint64_t, 2>> by_degree; // index nu-1
};

// Shared driver for census, estimator and oracle: classifies primes in
// (degree, lex) order. Parallel over fixed-size chunks; chunk partial sums
// are Kahan-compensated and combined in order, so results are bit-identical
// for every thread count.
Census classify_primes(const ShanksField& field, const IrreducibleTable& table, Truncation trunc,
                       int threads = 1);

Census splitting_census(const ShanksField& field, const IrreducibleTable& table, Truncation trunc,
                        int threads = 1);

} // namespace scff
