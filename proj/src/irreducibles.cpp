#include "scff/irreducibles.hpp"

#include "scff/errors.hpp"

#include <cmath>

namespace scff {

namespace {

int mobius(int m) {
    int r = 1;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            r = -r;
        }
    }
    if (m > 1) r = -r;
    return r;
}

uint64_t upow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// index of a monic polynomial of degree d: base-q digits c_0..c_{d-1}, with
// c_{d-1} most significant, matching Poly's (degree, lex) order.
uint64_t index_of(const Poly& f, int d, uint32_t q) {
    uint64_t idx = 0;
    for (int i = d - 1; i >= 0; --i) idx = idx * q + f.coeff(static_cast<size_t>(i));
    return idx;
}

Poly poly_from_index(uint64_t n, int d, uint32_t q) {
    std::vector<uint32_t> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i) {
        c[static_cast<size_t>(i)] = static_cast<uint32_t>(n % q);
        n /= q;
    }
    c[static_cast<size_t>(d)] = 1;
    return Poly(q, std::move(c));
}

} // namespace

uint64_t gauss_irreducible_count(uint32_t q, int n) {
    if (n < 1) throw std::domain_error("gauss_irreducible_count: n >= 1");
    int64_t total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(d);
        if (mu) total += mu * static_cast<int64_t>(upow(q, n / d));
    }
    return static_cast<uint64_t>(total / n);
}

bool is_irreducible(const Poly& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    uint32_t q = f.q();
    const Poly x = Poly::t(q);
    // Rabin: x^(q^n) == x mod f, and gcd(x^(q^(n/p)) - x, f) = 1 for primes p | n
    auto frob_power = [&](int k) {
        // x^(q^k) mod f by repeated q-powering
        Poly r = x % f;
        for (int i = 0; i < k; ++i) r = poly_powmod(r, q, f);
        return r;
    };
    for (int p = 2; p <= n; ++p) {
        if (n % p || !is_prime_u32(static_cast<uint32_t>(p))) continue;
        Poly g = poly_gcd(frob_power(n / p) - x, f);
        if (g.degree() != 0) return false;
    }
    return frob_power(n) == x % f;
}

IrreducibleTable::IrreducibleTable(uint32_t q) : q_(q) { Fq check(q); }

const std::vector<Poly>& IrreducibleTable::degree(int d) const {
    if (d < 1) throw std::domain_error("IrreducibleTable: degree >= 1");
    std::lock_guard lock(mu_);
    auto it = bydeg_.find(d);
    if (it == bydeg_.end()) {
        for (int e = 1; e <= d; ++e)
            if (!bydeg_.count(e)) build(e);
        it = bydeg_.find(d);
    }
    return it->second;
}

// Sieve the whole degree: a monic of degree d is reducible iff it has an
// irreducible factor of degree <= d/2.
void IrreducibleTable::build(int d) const {
    double bits = d * std::log2(static_cast<double>(q_));
    if (bits > 28)
        throw ResourceRefusal("IrreducibleTable: q^d too large to sieve (degree " + std::to_string(d) + ")");
    uint64_t size = upow(q_, d);
    std::vector<uint8_t> composite(size, 0);
    for (int e = 1; 2 * e <= d; ++e) {
        const auto& lower = bydeg_.at(e);
        uint64_t cof = upow(q_, d - e);
        for (const Poly& p : lower) {
            for (uint64_t m = 0; m < cof; ++m) {
                Poly prod = p * poly_from_index(m, d - e, q_);
                composite[index_of(prod, d, q_)] = 1;
            }
        }
    }
    std::vector<Poly> out;
    out.reserve(gauss_irreducible_count(q_, d));
    for (uint64_t n = 0; n < size; ++n)
        if (!composite[n]) out.push_back(poly_from_index(n, d, q_));
    bydeg_.emplace(d, std::move(out));
}

uint64_t IrreducibleTable::count_up_to_degree(int d) const {
    uint64_t tot = 0;
    for (int e = 1; e <= d; ++e) tot += gauss_irreducible_count(q_, e);
    return tot;
}

int IrreducibleTable::lambda_for_count(uint64_t count) const {
    int lam = 0;
    uint64_t tot = 0;
    for (int d = 1;; ++d) {
        uint64_t c = gauss_irreducible_count(q_, d);
        if (tot + c > count) break;
        tot += c;
        lam = d;
        if (tot == count) break;
    }
    return lam;
}

} // namespace scff
