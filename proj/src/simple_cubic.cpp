#include "scff/simple_cubic.hpp"

#include <algorithm>
#include <stdexcept>

namespace scff {

void SimpleCubicParams::validate() const {
    const uint32_t q = P.q();
    Fq check(q);
    if (P.degree() < 1) throw std::domain_error("SimpleCubicParams: deg(P) >= 1");
    if (c % q == 0 || n % q == 0 || k % q == 0)
        throw std::domain_error("SimpleCubicParams: c, n, k must be units");
}

Cubic build_simple_cubic(const SimpleCubicParams& params) {
    params.validate();
    const uint32_t q = params.P.q();
    Fq F(q);
    uint32_t w = F.reduce(static_cast<int64_t>(params.c) + params.n - static_cast<int64_t>(F.pow(params.k, 3)));
    return Cubic{params.P, params.P + Poly::constant(q, w), Poly::constant(q, params.c)};
}

Cubic simple_cubic_abc(const Poly& A, uint32_t b, uint32_t c) {
    const uint32_t q = A.q();
    return Cubic{-A, -(A + Poly::constant(q, b)), Poly::constant(q, Fq(q).neg(c % q))};
}

ShanksPoly::ShanksPoly(Poly a) : A(std::move(a)) {
    if (A.degree() < 1) throw std::domain_error("ShanksPoly: A must be non-constant");
}

Poly ShanksPoly::disc_base() const {
    const uint32_t q = A.q();
    return A * A + A.scaled(3) + Poly::constant(q, 9);
}

std::array<uint32_t, 5> discriminant_in_P(uint32_t c, uint32_t k, uint32_t n, uint32_t q) {
    Fq F(q);
    c %= q; k %= q; n %= q;
    int64_t k3 = F.pow(k, 3);
    int64_t m = F.reduce(k3 - c - n); // k^3 - c - n
    uint32_t c3 = F.reduce(2 * static_cast<int64_t>(n) - 2 * c - 2 * k3 - 4);
    uint32_t c2 = F.reduce(6 * static_cast<int64_t>(c) - 12 * static_cast<int64_t>(n) + 12 * k3 + m * m);
    uint32_t c1 = F.reduce(18 * static_cast<int64_t>(c) * F.reduce(static_cast<int64_t>(c) + n - k3) - 12 * m * m);
    uint32_t c0 = F.reduce(4 * m * m % q * m - 27 * static_cast<int64_t>(c) * c % q);
    return {c0, c1, c2, c3, 1};
}

bool quartic_is_square(const std::array<uint32_t, 5>& co, uint32_t q) {
    Fq F(q);
    if (co[4] != 1) throw std::domain_error("quartic_is_square: expects a monic quartic");
    uint32_t inv2 = F.inv(2);
    uint32_t a = F.mul(co[3], inv2);
    uint32_t b = F.mul(F.sub(co[2], F.mul(a, a)), inv2);
    return F.mul(2, F.mul(a, b)) == co[1] && F.mul(b, b) == co[0];
}

std::vector<std::array<uint32_t, 3>> classify_parameters(uint32_t q) {
    Fq check(q);
    std::vector<std::array<uint32_t, 3>> out;
    for (uint32_t c = 1; c < q; ++c)
        for (uint32_t k = 1; k < q; ++k)
            for (uint32_t n = 0; n < q; ++n)
                if (quartic_is_square(discriminant_in_P(c, k, n, q), q)) out.push_back({c, k, n});
    return out;
}

Poly StandardForm::discriminant() const {
    return (a * a * a).scaled(4) - (b * b).scaled(27);
}

StandardForm standard_form(const ShanksPoly& f) {
    const uint32_t q = f.q();
    Fq F(q);
    Poly base = f.disc_base();
    Poly a = base.scaled(F.inv(3));
    Poly b = ((f.A.scaled(2) + Poly::constant(q, 3)) * base).scaled(F.neg(F.inv(F.reduce(27))));
    return {a, b};
}

ReducedForm reduce_standard_form(const StandardForm& sf, uint64_t seed) {
    const uint32_t q = sf.q();
    Factorization fa = factor(sf.a, seed);
    Poly Q = Poly::constant(q, 1);
    for (const auto& [p, ma] : fa.factors) {
        if (ma < 2) continue;
        // v_p(b) without factoring b fully
        int mb = 0;
        Poly rem = sf.b;
        while (true) {
            auto [quo, r] = rem.divmod(p);
            if (!r.is_zero()) break;
            rem = quo;
            ++mb;
        }
        int e = std::min(ma / 2, mb / 3);
        for (int i = 0; i < e; ++i) Q = Q * p;
    }
    Poly Q2 = Q * Q;
    return {StandardForm{sf.a / Q2, sf.b / (Q2 * Q)}, Q};
}

std::array<int, 3> root_degrees_at_infinity(const Cubic& f) {
    if (f.c0.degree() != 0)
        throw std::domain_error("root_degrees_at_infinity: norm term must be a nonzero constant");
    // Newton polygon for v = -deg: lower convex hull of (i, -deg c_i),
    // missing coefficients at +infinity; segment of slope s spans len roots
    // of valuation -s, i.e. degree s... degrees are the negated slopes of the
    // hull read with v; equivalently slopes of the upper hull of (i, deg c_i).
    const std::array<const Poly*, 4> cs = {&f.c0, &f.c1, &f.c2, nullptr};
    std::vector<std::pair<int, int>> pts; // (i, v(c_i))
    for (int i = 0; i < 3; ++i)
        if (!cs[static_cast<size_t>(i)]->is_zero()) pts.push_back({i, -cs[static_cast<size_t>(i)]->degree()});
    pts.push_back({3, 0}); // monic
    // lower hull left to right
    std::vector<std::pair<int, int>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // pop b if it lies on or above segment a-p
            if (static_cast<int64_t>(b.second - a.second) * (p.first - a.first) >=
                static_cast<int64_t>(p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::array<int, 3> degs{};
    size_t idx = 0;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        int run = hull[s + 1].first - hull[s].first;
        int rise = hull[s + 1].second - hull[s].second;
        if (rise % run != 0)
            throw std::domain_error("root_degrees_at_infinity: fractional slope, not a simple cubic shape");
        int slope = rise / run; // v(root) = -slope, deg(root) = slope
        for (int r = 0; r < run; ++r) degs[idx++] = slope;
    }
    std::sort(degs.begin(), degs.end(), std::greater<>());
    return degs;
}

int64_t regulator_from_root_degrees(const std::array<int, 3>& degrees) {
    if (degrees[0] + degrees[1] + degrees[2] != 0)
        throw std::domain_error("regulator_from_root_degrees: degrees must sum to zero");
    int64_t n = *std::max_element(degrees.begin(), degrees.end());
    if (n < 1) throw std::domain_error("regulator_from_root_degrees: need a positive-degree root");
    return n * n;
}

bool is_frobenius_power(const Poly& A) {
    const uint32_t p = A.q();
    if (A.degree() < static_cast<int>(p)) return false;
    for (size_t i = 0; i < A.coeffs().size(); ++i)
        if (A.coeffs()[i] && i % p != 0) return false;
    return true;
}

Poly frobenius_canonical(const Poly& A) {
    Poly r = A;
    const uint32_t p = A.q();
    while (is_frobenius_power(r)) {
        std::vector<uint32_t> c;
        for (size_t i = 0; i < r.coeffs().size(); i += p) c.push_back(r.coeffs()[i]);
        r = Poly(p, std::move(c));
    }
    return r;
}

Poly sign_canonical(const Poly& A) {
    const uint32_t q = A.q();
    if (A.sgn() <= (q - 1) / 2) return A;
    return -(A + Poly::constant(q, 3));
}

} // namespace scff
