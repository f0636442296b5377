// Cantor-Zassenhaus, following Cohen, A Course in Computational Algebraic
// Number Theory, ch. 3, adapted to odd characteristic p = q.
#include "scff/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace scff {

namespace {

// random nonzero polynomial of degree < n
Poly random_poly(uint32_t q, int n, std::mt19937_64& rng) {
    std::vector<uint32_t> c(static_cast<size_t>(n));
    for (auto& v : c) v = static_cast<uint32_t>(rng() % q);
    return Poly(q, std::move(c));
}

// split a squarefree product of irreducibles, all of degree d
void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const uint32_t q = f.q();
    uint64_t e = 1;
    for (int i = 0; i < d; ++i) e *= q;
    e = (e - 1) / 2;
    while (true) {
        Poly r = random_poly(q, f.degree(), rng);
        if (r.degree() < 0) continue;
        Poly g = poly_gcd(r, f);
        if (g.degree() == 0) {
            Poly w = poly_powmod(r, e, f) - Poly::constant(q, 1);
            if (w.is_zero()) continue;
            g = poly_gcd(w, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

// irreducible factors of a squarefree monic f
void factor_squarefree(const Poly& f, std::mt19937_64& rng, std::vector<Poly>& out) {
    const uint32_t q = f.q();
    Poly v = f;
    Poly x = Poly::t(q);
    Poly h = x % v;
    int d = 0;
    while (v.degree() >= 1) {
        ++d;
        if (2 * d > v.degree()) {
            out.push_back(v.monic());
            return;
        }
        h = poly_powmod(h, q, v);
        Poly g = poly_gcd(h - x, v);
        if (g.degree() >= 1) {
            equal_degree_split(g, d, rng, out);
            v = v / g;
            h = h % v;
        }
    }
}

} // namespace

Poly Factorization::expand(uint32_t q) const {
    Poly r = Poly::constant(q, unit);
    for (const auto& [p, m] : factors)
        for (int i = 0; i < m; ++i) r = r * p;
    return r;
}

Factorization factor(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    const uint32_t q = f.q();
    Factorization out;
    out.unit = f.sgn();
    std::map<Poly, int> mult;

    std::mt19937_64 rng(seed);
    // squarefree decomposition in characteristic p: peel gcd(f, f') layers,
    // recursing on perfect p-th powers
    auto decompose = [&](auto&& self, Poly g, int outer) -> void {
        g = g.monic();
        if (g.degree() <= 0) return;
        Poly d = g.derivative();
        if (d.is_zero()) {
            // g = h(t^p); in F_q[t] with prime q this means g = h^p
            std::vector<uint32_t> hc;
            for (size_t i = 0; i < g.coeffs().size(); i += q) hc.push_back(g.coeffs()[i]);
            self(self, Poly(q, std::move(hc)), outer * static_cast<int>(q));
            return;
        }
        Poly c = poly_gcd(g, d);
        Poly w = g / c; // product of the distinct factors with multiplicity not divisible by p
        int m = 1;
        while (w.degree() >= 1) {
            Poly y = poly_gcd(w, c);
            Poly z = w / y; // factors of exact multiplicity m
            if (z.degree() >= 1) {
                std::vector<Poly> irred;
                factor_squarefree(z, rng, irred);
                for (auto& p : irred) mult[p] += m * outer;
            }
            w = y;
            if (!w.is_zero() && w.degree() >= 0) c = c / w;
            ++m;
        }
        if (c.degree() >= 1) self(self, c, outer); // leftover p-th power part
    };
    decompose(decompose, f, 1);

    out.factors.assign(mult.begin(), mult.end()); // map is (degree, lex) ordered via Poly::operator<=>
    return out;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
    if (f.degree() <= 0) return true;
    Poly d = f.derivative();
    if (d.is_zero()) return false;
    return poly_gcd(f, d).degree() == 0;
}

bool is_cube_free(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("is_cube_free: zero polynomial");
    if (f.degree() <= 0) return true;
    if (is_squarefree(f)) return true;
    Factorization fac = factor(f, seed);
    return std::all_of(fac.factors.begin(), fac.factors.end(), [](const auto& pm) { return pm.second < 3; });
}

} // namespace scff
