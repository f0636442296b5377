#include "scff/ext_field.hpp"

#include "scff/errors.hpp"
#include "scff/irreducibles.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace scff {

ExtField::ExtField(uint32_t q, Poly modulus) : q_(q), modulus_(std::move(modulus)) {
    Fq check(q);
    d_ = modulus_.degree();
    if (d_ < 1 || !modulus_.is_monic()) throw std::domain_error("ExtField: modulus must be monic of degree >= 1");
    if (!is_irreducible(modulus_)) throw std::domain_error("ExtField: modulus is reducible");
    if (d_ * std::log2(static_cast<double>(q_)) > 62) throw ResourceRefusal("ExtField: q^d exceeds 2^62");
    mod_.assign(modulus_.coeffs().begin(), modulus_.coeffs().end());
    card_ = 1;
    for (int i = 0; i < d_; ++i) card_ *= q_;
}

ExtField ExtField::canonical(uint32_t q, int d) {
    if (d == 1) return ExtField(q, Poly::t(q)); // t is the first degree-1 monic
    IrreducibleTable table(q);
    return ExtField(q, table.degree(d).front());
}

ExtField::Elem ExtField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

ExtField::Elem ExtField::from_poly(const Poly& f) const {
    Poly r = f % modulus_;
    Elem e = zero();
    for (size_t i = 0; i < r.coeffs().size(); ++i) e[i] = r.coeffs()[i];
    return e;
}

Poly ExtField::to_poly(const Elem& a) const { return Poly(q_, std::vector<uint32_t>(a.begin(), a.end())); }

bool ExtField::is_zero(const Elem& a) const {
    for (uint32_t v : a)
        if (v) return false;
    return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Fq F(q_);
    Elem c = zero();
    for (int i = 0; i < d_; ++i) c[i] = F.add(a[i], b[i]);
    return c;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Fq F(q_);
    Elem c = zero();
    for (int i = 0; i < d_; ++i) c[i] = F.sub(a[i], b[i]);
    return c;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
    Fq F(q_);
    Elem c = zero();
    for (int i = 0; i < d_; ++i) c[i] = F.neg(a[i]);
    return c;
}

void ExtField::mul_into(const uint32_t* a, const uint32_t* b, uint32_t* c, uint64_t* w) const {
    const size_t n = static_cast<size_t>(d_);
    const size_t wn = 2 * n - 1;
    std::memset(w, 0, wn * sizeof(uint64_t));
    for (size_t i = 0; i < n; ++i) {
        uint64_t ai = a[i];
        if (!ai) continue;
        for (size_t j = 0; j < n; ++j) w[i + j] += ai * b[j];
    }
    // reduce modulo the monic modulus, top down
    for (size_t k = wn; k-- > n;) {
        uint64_t ck = w[k] % q_;
        if (!ck) continue;
        uint64_t negc = q_ - ck;
        for (size_t i = 0; i < n; ++i) w[k - n + i] += negc * mod_[i];
    }
    for (size_t i = 0; i < n; ++i) c[i] = static_cast<uint32_t>(w[i] % q_);
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    Elem c = zero();
    std::vector<uint64_t> w(static_cast<size_t>(2 * d_ - 1));
    mul_into(a.data(), b.data(), c.data(), w.data());
    return c;
}

ExtField::Elem ExtField::pow(const Elem& a, uint64_t e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
    XGcd x = poly_xgcd(to_poly(a), modulus_);
    if (x.g.degree() != 0) throw std::logic_error("ExtField: modulus not irreducible after all");
    return from_poly(x.s); // g is normalized monic = 1 already
}

bool ExtField::is_square(const Elem& a) const {
    if (is_zero(a)) return true;
    Elem w = pow(a, (card_ - 1) / 2);
    return w == one();
}

// ---------------------------------------------------------------------------

CubicRootCounter::CubicRootCounter(const ExtField& R)
    : R_(R), d_(R.d()),
      f_(static_cast<size_t>(5 * d_)), g_(static_cast<size_t>(5 * d_)), h_(static_cast<size_t>(10 * d_)),
      scratch_(static_cast<size_t>(2 * d_ - 1)), negA_(static_cast<size_t>(d_)), B_(static_cast<size_t>(d_)) {}

// multiply y-polys u (degree du) and v (dv), coefficients in R, then reduce
// modulo y^3 + negA*y + B; out has room for degree 4
void CubicRootCounter::ymul(const uint32_t* u, int du, const uint32_t* v, int dv, uint32_t* out, int& dout) {
    const size_t n = static_cast<size_t>(d_);
    int dh = du + dv;
    std::memset(h_.data(), 0, static_cast<size_t>(dh + 1) * n * sizeof(uint32_t));
    std::vector<uint32_t> tmp(n);
    Fq F(R_.q());
    for (int i = 0; i <= du; ++i) {
        const uint32_t* ui = u + static_cast<size_t>(i) * n;
        bool zi = true;
        for (size_t t = 0; t < n; ++t)
            if (ui[t]) { zi = false; break; }
        if (zi) continue;
        for (int j = 0; j <= dv; ++j) {
            const uint32_t* vj = v + static_cast<size_t>(j) * n;
            R_.mul_into(ui, vj, tmp.data(), scratch_.data());
            uint32_t* hij = h_.data() + static_cast<size_t>(i + j) * n;
            for (size_t t = 0; t < n; ++t) hij[t] = F.add(hij[t], tmp[t]);
        }
    }
    yreduce(h_.data(), dh);
    std::memcpy(out, h_.data(), static_cast<size_t>(dh + 1) * n * sizeof(uint32_t));
    dout = dh;
}

void CubicRootCounter::yreduce(uint32_t* u, int& du) {
    const size_t n = static_cast<size_t>(d_);
    Fq F(R_.q());
    std::vector<uint32_t> tmp(n);
    while (du >= 3) {
        uint32_t* top = u + static_cast<size_t>(du) * n;
        bool z = true;
        for (size_t t = 0; t < n; ++t)
            if (top[t]) { z = false; break; }
        if (!z) {
            // y^du = -(negA*y + B) * y^(du-3)  since y^3 = -negA*y - B
            uint32_t* u1 = u + static_cast<size_t>(du - 2) * n;
            R_.mul_into(top, negA_.data(), tmp.data(), scratch_.data());
            for (size_t t = 0; t < n; ++t) u1[t] = F.sub(u1[t], tmp[t]);
            uint32_t* u0 = u + static_cast<size_t>(du - 3) * n;
            R_.mul_into(top, B_.data(), tmp.data(), scratch_.data());
            for (size_t t = 0; t < n; ++t) u0[t] = F.sub(u0[t], tmp[t]);
            std::memset(top, 0, n * sizeof(uint32_t));
        }
        --du;
    }
    while (du > 0) {
        const uint32_t* top = u + static_cast<size_t>(du) * n;
        bool z = true;
        for (size_t t = 0; t < n; ++t)
            if (top[t]) { z = false; break; }
        if (!z) break;
        --du;
    }
}

int CubicRootCounter::count(const ExtField::Elem& a, const ExtField::Elem& b) {
    const size_t n = static_cast<size_t>(d_);
    Fq F(R_.q());
    // cubic y^3 - a y + b: stored via negA = -(-a) ... y^3 + negA y + B with
    // negA = -a, B = b
    for (size_t t = 0; t < n; ++t) {
        negA_[t] = F.neg(t < a.size() ? a[t] : 0);
        B_[t] = t < b.size() ? b[t] : 0;
    }
    // fast path: residue field is F_q itself
    if (d_ == 1 && R_.q() <= 4096) {
        uint32_t A0 = F.neg(negA_[0]), B0 = B_[0];
        int roots = 0;
        for (uint32_t x = 0; x < R_.q(); ++x) {
            uint32_t v = F.add(F.sub(F.mul(F.mul(x, x), x), F.mul(A0, x)), B0);
            if (v == 0) ++roots;
        }
        return roots;
    }
    // r = y^(q^d) mod cubic, binary powering; base b = y
    std::memset(f_.data(), 0, 5 * n * sizeof(uint32_t));
    std::memset(g_.data(), 0, 5 * n * sizeof(uint32_t));
    f_[0] = 1;              // r = 1
    g_[n] = 1;              // b = y
    int dr = 0, db = 1;
    uint64_t e = R_.cardinality();
    std::vector<uint32_t> out(5 * n);
    int dout = 0;
    while (e) {
        if (e & 1) {
            ymul(f_.data(), dr, g_.data(), db, out.data(), dout);
            std::memcpy(f_.data(), out.data(), static_cast<size_t>(dout + 1) * n * sizeof(uint32_t));
            dr = dout;
        }
        e >>= 1;
        if (!e) break;
        ymul(g_.data(), db, g_.data(), db, out.data(), dout);
        std::memcpy(g_.data(), out.data(), static_cast<size_t>(dout + 1) * n * sizeof(uint32_t));
        db = dout;
    }
    // w = r - y
    std::vector<std::vector<uint32_t>> w(3, std::vector<uint32_t>(n, 0));
    for (int i = 0; i <= dr && i < 3; ++i)
        std::copy(f_.begin() + static_cast<ptrdiff_t>(i * static_cast<int>(n)),
                  f_.begin() + static_cast<ptrdiff_t>((i + 1) * static_cast<int>(n)), w[static_cast<size_t>(i)].begin());
    w[1] = R_.sub(w[1], R_.one());
    // gcd over R[y] of (y^3 - a y + b) and w
    auto degy = [&](const std::vector<std::vector<uint32_t>>& p) {
        for (int i = static_cast<int>(p.size()); i-- > 0;)
            if (!R_.is_zero(p[static_cast<size_t>(i)])) return i;
        return -1;
    };
    std::vector<std::vector<uint32_t>> u(4, std::vector<uint32_t>(n, 0));
    u[0] = B_;
    u[1] = negA_;
    u[3] = R_.one();
    std::vector<std::vector<uint32_t>> v = w;
    while (true) {
        int dv = degy(v);
        if (dv < 0) break;
        ExtField::Elem linv = R_.inv(v[static_cast<size_t>(dv)]);
        // u mod v
        while (true) {
            int du = degy(u);
            if (du < dv) break;
            ExtField::Elem c = R_.mul(u[static_cast<size_t>(du)], linv);
            for (int i = 0; i <= dv; ++i) {
                ExtField::Elem s = R_.mul(c, v[static_cast<size_t>(i)]);
                u[static_cast<size_t>(du - dv + i)] = R_.sub(u[static_cast<size_t>(du - dv + i)], s);
            }
        }
        std::swap(u, v);
    }
    int dg = degy(u);
    return dg < 0 ? 0 : dg; // gcd degree; dg==-1 cannot occur (cubic is monic)
}

int count_roots_in_residue_field(const std::array<Poly, 4>& cubic, const Poly& P) {
    const uint32_t q = P.q();
    ExtField R(q, P.monic());
    ExtField::Elem c3 = R.from_poly(cubic[3]);
    if (R.is_zero(c3)) throw std::domain_error("count_roots_in_residue_field: leading coefficient vanishes mod P");
    ExtField::Elem inv3 = R.inv(c3);
    ExtField::Elem c2 = R.mul(R.from_poly(cubic[2]), inv3);
    ExtField::Elem c1 = R.mul(R.from_poly(cubic[1]), inv3);
    ExtField::Elem c0 = R.mul(R.from_poly(cubic[0]), inv3);
    if (!R.is_zero(c2)) {
        // depress: y = x + c2/3
        Fq F(q);
        ExtField::Elem third = R.from_poly(Poly::constant(q, F.inv(3)));
        ExtField::Elem s = R.mul(c2, third); // c2/3, with x = y - s
        // (y-s)^3 + c2 (y-s)^2 + c1 (y-s) + c0 = y^3 + p y + r
        // p = c1 - c2^2/3, r = c0 - c1 c2/3 + 2 c2^3/27
        ExtField::Elem c2sq = R.mul(c2, c2);
        ExtField::Elem p = R.sub(c1, R.mul(c2sq, third));
        ExtField::Elem r = R.add(R.sub(c0, R.mul(R.mul(c1, c2), third)),
                                 R.mul(R.mul(R.from_poly(Poly::constant(q, 2)), R.mul(c2sq, c2)),
                                       R.mul(third, R.mul(third, third))));
        CubicRootCounter counter(R);
        return counter.count(R.neg(p), r); // y^3 + p y + r = y^3 - (-p) y + r
    }
    CubicRootCounter counter(R);
    return counter.count(R.neg(c1), c0);
}

} // namespace scff
