#include "scff/search.hpp"

#include "scff/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace scff {

namespace {

// parallel-for with a shared index; results land in pre-sized slots so the
// output order never depends on scheduling
template <typename F>
void ordered_parallel_for(size_t n, int threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int nw = std::min<int>(threads, static_cast<int>(n));
    pool.reserve(static_cast<size_t>(nw));
    for (int w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < n;) body(i);
        });
    for (auto& th : pool) th.join();
}

// admissible (deg I, deg A) shapes for a class-number-one field over F_5:
// outside these, the genus formula and the Hasse-Weil lower bound exclude
// h = deg(A)^2 outright
bool q5_candidate_shape(int degI, int degA) {
    static constexpr int lo[] = {2, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    static constexpr int hi[] = {4, 5, 6, 7, 7, 8, 9, 9, 10, 11, 11, 12, 13};
    if (degI < 0 || degI > 12) return false;
    return lo[degI] <= degA && degA <= hi[degI];
}

} // namespace

std::vector<Poly> canonical_parameters(uint32_t q, int deg) {
    if (deg < 1) throw std::domain_error("canonical_parameters: deg >= 1");
    std::vector<Poly> out;
    uint64_t inner = 1;
    for (int i = 0; i < deg; ++i) inner *= q;
    out.reserve(static_cast<size_t>(inner) * ((q - 1) / 2));
    for (uint32_t sgn = 1; sgn <= (q - 1) / 2; ++sgn) {
        for (uint64_t n = 0; n < inner; ++n) {
            std::vector<uint32_t> c(static_cast<size_t>(deg) + 1);
            uint64_t v = n;
            for (int i = 0; i < deg; ++i) {
                c[static_cast<size_t>(i)] = static_cast<uint32_t>(v % q);
                v /= q;
            }
            c[static_cast<size_t>(deg)] = sgn;
            Poly A(q, std::move(c));
            if (is_frobenius_power(A)) continue;
            out.push_back(std::move(A));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t default_truncation(uint32_t q, int degA) {
    if (q == 5) return degA <= 3 ? 40000 : 100000;
    if (q == 7) return degA <= 2 ? 40000 : 100000;
    return 40000;
}

std::vector<SurveyRow> survey(const SearchPlan& plan, const IrreducibleTable& table) {
    std::vector<Poly> params;
    for (int d = std::max(plan.deg_min, 1); d <= plan.deg_max; ++d) {
        auto v = canonical_parameters(plan.q, d);
        params.insert(params.end(), v.begin(), v.end());
    }
    std::vector<SurveyRow> rows(params.size());
    ordered_parallel_for(params.size(), plan.threads, [&](size_t i) {
        SurveyRow& row = rows[i];
        row.A = params[i];
        try {
            ShanksField field = build_field(plan.q, params[i], plan.seed);
            row.g = field.genus;
            row.deg_index = field.deg_index();
            row.R = field.regulator.value_or(0);
            row.truncation = plan.truncation.value_or(default_truncation(plan.q, params[i].degree()));
            if (plan.cube_free_only && !field.cube_free) {
                row.error = "skipped: not cube-free";
                return;
            }
            if (plan.deg_index && field.deg_index() != *plan.deg_index) {
                row.error = "skipped: deg(I) filter";
                return;
            }
            if (plan.with_census) {
                Census census = classify_primes(field, table, Truncation::count(row.truncation), 1);
                row.split = census.split;
                row.inert = census.inert;
                row.ramified = census.ramified;
            }
            if (field.genus <= kOracleGenusCap) {
                LPolynomial L = exact_l_polynomial(field, table, !field.cube_free, 1);
                row.hprime = class_number_relation(L.h, field.regulator.value_or(field.regulator_upper));
                row.oracle = true;
            } else {
                HApprox ha = truncated_estimate(field, table, row.truncation, 1);
                row.hprime = ha.hprime_estimate;
                row.oracle = false;
            }
            try {
                row.measure = max_measure(row.hprime, plan.q, field.genus,
                                          field.regulator.value_or(field.regulator_upper));
            } catch (const std::domain_error&) {
                row.measure = std::numeric_limits<double>::quiet_NaN(); // genus 0: interval degenerates
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });
    std::erase_if(rows, [&](const SurveyRow& r) {
        return plan.target_hprime && r.error.empty() && r.hprime != *plan.target_hprime;
    });
    return rows;
}

ClassNumberOneResult search_class_number_one(uint32_t q, const IrreducibleTable& table, bool full_depth, int threads,
                                             uint64_t seed) {
    ClassNumberOneResult res;
    res.q = q;
    if (q == 5)
        res.deg_max = full_depth ? 13 : 4;
    else if (q == 7)
        res.deg_max = 3;
    else {
        // HW alone bounds the search: smallest d with (sqrt q - 1)^(2(d-1)) > d^2 onward
        int d = 2;
        while (std::pow(std::sqrt(static_cast<double>(q)) - 1.0, 2 * (d - 1)) <= static_cast<double>(d) * d) ++d;
        res.hw_cutoff_deg = d;
        res.deg_max = d - 1;
    }

    std::vector<Poly> params;
    for (int d = 2; d <= res.deg_max; ++d) {
        auto v = canonical_parameters(q, d);
        params.insert(params.end(), v.begin(), v.end());
    }
    struct Slot {
        int state = 0; // 1 = h'=1, 2 = unresolved
        int degI = 0;
    };
    std::vector<Slot> slots(params.size());
    std::atomic<size_t> progress{0};
    const bool report = params.size() > 5000;
    ordered_parallel_for(params.size(), threads, [&](size_t i) {
        size_t n = ++progress;
        if (report && n % 5000 == 0)
            std::fprintf(stderr, "search-h1: %zu/%zu parameters\n", n, params.size());
        const Poly& A = params[i];
        const int dA = A.degree();
        const int64_t R = static_cast<int64_t>(dA) * dA;
        ShanksField field = build_field(q, A, seed);
        if (!field.cube_free) return;
        if (q == 5 && !q5_candidate_shape(field.deg_index(), dA)) return;
        HWInterval hw = hasse_weil(q, field.genus);
        if (!hw.contains(static_cast<long double>(R))) return; // h = R h' = R would violate Hasse-Weil
        if (field.genus <= kOracleGenusCap) {
            LPolynomial L = exact_l_polynomial(field, table, false, 1);
            if (L.h == R) {
                slots[i].state = 1;
                slots[i].degI = field.deg_index();
            }
            return;
        }
        // estimator screen: h' >= 2 whenever E - L^2 > R
        HApprox ha = truncated_estimate(field, table, default_truncation(q, dA), 1);
        if (ha.E - ha.L * ha.L > R) return;
        slots[i].state = 2;
    });
    for (size_t i = 0; i < params.size(); ++i) {
        if (slots[i].state == 1) {
            res.fields.push_back(params[i]);
            res.deg_index.push_back(slots[i].degI);
        } else if (slots[i].state == 2) {
            res.unresolved.push_back(params[i]);
        }
    }
    return res;
}

std::vector<LargeIndexRow> large_index_scan(uint32_t q, int degA, const IrreducibleTable& table, int threads,
                                            uint64_t seed) {
    if (degA < 2) throw std::domain_error("large_index_scan: degA >= 2");
    std::vector<Poly> params = canonical_parameters(q, degA);
    std::vector<LargeIndexRow> rows(params.size());
    std::vector<uint8_t> keep(params.size(), 0);
    ordered_parallel_for(params.size(), threads, [&](size_t i) {
        ShanksField field = build_field(q, params[i], seed);
        if (field.cube_free) return;
        keep[i] = 1;
        LargeIndexRow& row = rows[i];
        row.A = params[i];
        row.deg_index = field.deg_index();
        row.g = field.genus;
        try {
            LPolynomial L = exact_l_polynomial(field, table, /*verify_next_degree=*/true, 1);
            row.h = L.h;
            for (int64_t R : regulator_bounds(field).candidates) {
                if (L.h % R) continue;
                RegulatorCandidate cand;
                cand.R = R;
                cand.hprime = L.h / R;
                cand.norm_form_ok = norm_form_decompose(cand.hprime).has_value();
                row.candidates.push_back(cand);
            }
            if (row.candidates.empty()) row.error = "no regulator candidate divides h";
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });
    std::vector<LargeIndexRow> out;
    for (size_t i = 0; i < params.size(); ++i)
        if (keep[i]) out.push_back(std::move(rows[i]));
    return out;
}

} // namespace scff
