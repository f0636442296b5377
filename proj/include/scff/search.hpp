// Enumeration drivers: surveys over canonical parameters, the class-number-
// one search, and the large-index (non-cube-free) scan.
#pragma once

#include "scff/zeta.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scff {

// Canonical parameter stream: all A of the given degree with
// sgn in [1, (q-1)/2] (A and -A-3 are the same field), Frobenius powers
// skipped, in (degree, lex) order.
std::vector<Poly> canonical_parameters(uint32_t q, int deg);

uint64_t default_truncation(uint32_t q, int degA);

struct SearchPlan {
    uint32_t q = 5;
    int deg_min = 2;
    int deg_max = 2;
    std::optional<int> deg_index;    // filter when set
    bool cube_free_only = true;
    std::optional<uint64_t> truncation; // prime count; default per degree
    std::optional<int64_t> target_hprime;
    bool with_census = true; // splitting counts are the expensive column; surveys can skip them
    int threads = 1;
    uint64_t seed = kDefaultFactorSeed;
};

struct SurveyRow {
    Poly A;
    int g = 0;
    int deg_index = 0;
    int64_t R = 0;
    int64_t hprime = 0;
    uint64_t split = 0, inert = 0, ramified = 0;
    uint64_t truncation = 0;
    double measure = 0;
    bool oracle = true; // estimator used instead when the genus exceeds the cap
    std::string error;  // per-field inconsistency, collected not fatal
};

std::vector<SurveyRow> survey(const SearchPlan& plan, const IrreducibleTable& table);

struct ClassNumberOneResult {
    uint32_t q = 0;
    int deg_max = 0;
    std::vector<Poly> fields;     // canonical A with h' = 1, deg >= 2
    std::vector<int> deg_index;   // aligned with fields
    std::vector<Poly> unresolved; // beyond the oracle cap and not screened out
    int hw_cutoff_deg = 0;        // degree beyond which Hasse-Weil alone excludes h' = 1
};

// Exhaustive preset: q = 5 enumerates deg(A) <= 4 by default (<= 13 with
// full_depth, the long-running mode), q = 7 deg(A) <= 3. deg(A) = 1 is the
// trivial genus-0 family, reported via hw_cutoff/deg handling by callers.
ClassNumberOneResult search_class_number_one(uint32_t q, const IrreducibleTable& table, bool full_depth = false,
                                             int threads = 1, uint64_t seed = kDefaultFactorSeed);

struct RegulatorCandidate {
    int64_t R = 0;
    int64_t hprime = 0;
    bool norm_form_ok = false;
};

struct LargeIndexRow {
    Poly A;
    int deg_index = 0;
    int g = 0;
    int64_t h = 0;
    std::vector<RegulatorCandidate> candidates; // divisibility-filtered
    std::string error;
};

std::vector<LargeIndexRow> large_index_scan(uint32_t q, int degA, const IrreducibleTable& table, int threads = 1,
                                            uint64_t seed = kDefaultFactorSeed);

} // namespace scff
