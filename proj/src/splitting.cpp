#include "scff/splitting.hpp"

#include "scff/errors.hpp"
#include "scff/ext_field.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <thread>

namespace scff {

namespace {

SplitType classify(const StandardForm& sf, const Poly& P) {
    const uint32_t q = P.q();
    Poly a = sf.a % P;
    Poly b = sf.b % P;
    bool az = a.is_zero(), bz = b.is_zero();
    if (az && bz) return {SplitTag::Ramified};
    if (!az && bz) {
        // v_P(a) = 0 < v_P(b): split iff a is a square mod P
        ExtField R(q, P.monic());
        if (R.is_square(R.from_poly(a))) return {SplitTag::Split};
        throw ClassificationGapError("p_signature: v_P(A)=0<v_P(B) with A a non-square mod " + P.str());
    }
    // root count decides; covers v_P(a) > 0 = v_P(b) on reduced models too
    // (the cubic is separable mod P there since disc = -27 b^2 mod P)
#ifndef NDEBUG
    {
        Poly D = sf.discriminant();
        int v = 0;
        while (!D.is_zero()) {
            auto [quo, rem] = D.divmod(P);
            if (!rem.is_zero()) break;
            D = quo;
            ++v;
        }
        assert(v % 2 == 0 && "v_P(D) must be even: D is a square");
    }
#endif
    ExtField R(q, P.monic());
    CubicRootCounter counter(R);
    int roots = counter.count(R.from_poly(a), R.from_poly(b));
    if (roots == 3) return {SplitTag::Split};
    if (roots == 0) return {SplitTag::Inert};
    throw InconsistencyError("p_signature: unramified prime " + P.str() + " has " + std::to_string(roots) +
                             " roots; impossible for a Galois cubic");
}

uint64_t upow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

struct ChunkResult {
    uint64_t split = 0, inert = 0, ramified = 0;
    long double sum = 0, comp = 0; // Kahan state

    void add_log(long double x) {
        long double y = x - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

SplitType p_signature(const ShanksField& field, const Poly& P) {
    if (!is_irreducible(P)) throw std::domain_error("p_signature: P must be irreducible");
    return classify(field.sf, P.monic());
}

LocalFactor local_factor(SplitType st, int nu, uint32_t q) {
    if (nu < 1) throw std::domain_error("local_factor: nu >= 1");
    uint64_t qn = upow(q, nu);
    switch (st.tag) {
        case SplitTag::Split: return {qn * qn, (qn - 1) * (qn - 1)};
        case SplitTag::Inert: return {qn * qn, qn * qn + qn + 1};
        default: return {1, 1};
    }
}

long double log_local_factor(SplitTag tag, int nu, uint32_t q) {
    long double lq = std::log(static_cast<long double>(q));
    long double qn = std::pow(static_cast<long double>(q), static_cast<long double>(nu));
    switch (tag) {
        case SplitTag::Split: return 2 * nu * lq - 2 * std::log(qn - 1.0L);
        case SplitTag::Inert: return 2 * nu * lq - std::log(qn * qn + qn + 1.0L);
        default: return 0.0L;
    }
}

Census classify_primes(const ShanksField& field, const IrreducibleTable& table, Truncation trunc, int threads) {
    if (threads < 1) threads = 1;
    Census out;
    const uint32_t q = field.q;
    uint64_t remaining = trunc.kind == Truncation::Kind::Count ? trunc.value : UINT64_MAX;
    int max_degree = trunc.kind == Truncation::Kind::Degree ? static_cast<int>(trunc.value) : 64;
    if (trunc.kind == Truncation::Kind::Count && trunc.value < 1)
        throw std::domain_error("classify_primes: truncation >= 1");

    constexpr uint64_t kChunk = 2048; // fixed: reduction order independent of thread count
    for (int d = 1; d <= max_degree && remaining > 0; ++d) {
        const std::vector<Poly>& primes = table.degree(d);
        uint64_t take = std::min<uint64_t>(primes.size(), remaining);
        uint64_t nchunks = (take + kChunk - 1) / kChunk;
        std::vector<ChunkResult> results(nchunks);

        auto work = [&](uint64_t chunk) {
            uint64_t lo = chunk * kChunk, hi = std::min(lo + kChunk, take);
            ChunkResult& r = results[chunk];
            for (uint64_t i = lo; i < hi; ++i) {
                SplitType st = classify(field.sf, primes[i]);
                switch (st.tag) {
                    case SplitTag::Split: ++r.split; break;
                    case SplitTag::Inert: ++r.inert; break;
                    case SplitTag::Ramified: ++r.ramified; break;
                }
                if (st.tag != SplitTag::Ramified) r.add_log(log_local_factor(st.tag, d, q));
            }
        };

        if (threads == 1 || nchunks <= 1) {
            for (uint64_t c = 0; c < nchunks; ++c) work(c);
        } else {
            std::atomic<uint64_t> next{0};
            std::vector<std::thread> pool;
            int n = std::min<int>(threads, static_cast<int>(nchunks));
            pool.reserve(static_cast<size_t>(n));
            for (int w = 0; w < n; ++w)
                pool.emplace_back([&] {
                    for (uint64_t c; (c = next.fetch_add(1)) < nchunks;) work(c);
                });
            for (auto& th : pool) th.join();
        }

        ChunkResult block;
        for (const auto& r : results) {
            block.split += r.split;
            block.inert += r.inert;
            block.ramified += r.ramified;
            block.add_log(r.sum);
        }
        out.split += block.split;
        out.inert += block.inert;
        out.ramified += block.ramified;
        out.log_sum += block.sum;
        out.by_degree.push_back({block.split, block.inert});
        out.used += take;
        if (take == primes.size()) out.lambda = d;
        remaining -= take;
        if (trunc.kind == Truncation::Kind::Count && take < primes.size()) break;
    }
    if (trunc.kind == Truncation::Kind::Count && remaining > 0)
        throw ResourceRefusal("classify_primes: truncation count exceeds enumerable primes");
    return out;
}

Census splitting_census(const ShanksField& field, const IrreducibleTable& table, Truncation trunc, int threads) {
    return classify_primes(field, table, trunc, threads);
}

} // namespace scff
