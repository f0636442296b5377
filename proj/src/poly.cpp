#include "scff/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace scff {

Poly Poly::constant(uint32_t q, int64_t v) {
    Fq F(q);
    Poly p(q);
    uint32_t r = F.reduce(v);
    if (r) p.c_ = {r};
    return p;
}

Poly Poly::term(uint32_t q, int64_t c, size_t k) {
    Fq F(q);
    Poly p(q);
    uint32_t r = F.reduce(c);
    if (r) {
        p.c_.assign(k + 1, 0);
        p.c_[k] = r;
    }
    return p;
}

uint32_t Poly::eval(uint32_t x) const {
    Fq F(q_);
    uint32_t v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = F.add(F.mul(v, x), c_[i]);
    return v;
}

Poly Poly::operator+(const Poly& o) const {
    Fq F(q_);
    Poly r(q_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Fq F(q_);
    Poly r(q_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.sub(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Fq F(q_);
    Poly r(q_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.neg(c_[i]);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(q_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    // accumulate rows in u64; q < 2^16 keeps sums far from overflow
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        uint64_t a = c_[i];
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = static_cast<uint32_t>((r.c_[i + j] + a * o.c_[j]) % q_);
    }
    r.trim();
    return r;
}

Poly Poly::scaled(uint32_t s) const {
    Fq F(q_);
    Poly r(q_);
    s %= q_;
    if (!s) return r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.mul(c_[i], s);
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    return scaled(Fq(q_).inv(c_.back()));
}

Poly Poly::derivative() const {
    Poly r(q_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    Fq F(q_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = F.mul(c_[i], static_cast<uint32_t>(i % q_));
    r.trim();
    return r;
}

Poly Poly::shifted(size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(q_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<ptrdiff_t>(k));
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    Fq F(q_);
    Poly quo(q_), rem = *this;
    int dd = d.degree();
    if (rem.degree() < dd) return {quo, rem};
    quo.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, 0);
    uint32_t linv = F.inv(d.c_.back());
    while (rem.degree() >= dd) {
        uint32_t f = F.mul(rem.c_.back(), linv);
        size_t k = static_cast<size_t>(rem.degree() - dd);
        quo.c_[k] = f;
        for (size_t i = 0; i < d.c_.size(); ++i)
            rem.c_[k + i] = F.sub(rem.c_[k + i], F.mul(f, d.c_[i]));
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0,0)");
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

XGcd poly_xgcd(const Poly& a, const Poly& b) {
    uint32_t q = a.q();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(q, 1), s1 = Poly::zero(q);
    Poly t0 = Poly::zero(q), t1 = Poly::constant(q, 1);
    while (!r1.is_zero()) {
        auto [quo, rem] = r0.divmod(r1);
        r0 = std::move(r1); r1 = std::move(rem);
        Poly s2 = s0 - quo * s1;
        s0 = std::move(s1); s1 = std::move(s2);
        Poly t2 = t0 - quo * t1;
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) throw std::domain_error("xgcd(0,0)");
    uint32_t linv = Fq(q).inv(r0.sgn());
    return {r0.scaled(linv), s0.scaled(linv), t0.scaled(linv)};
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(base.q(), 1) % mod;
    Poly b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        uint32_t c = c_[i];
        if (!c) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 't';
            if (i >= 2) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

Poly Poly::parse(std::string_view s, uint32_t q) {
    Fq F(q);
    std::vector<int64_t> acc;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto add_term = [&](int64_t coeff, size_t exp) {
        if (acc.size() <= exp) acc.resize(exp + 1, 0);
        acc[exp] += coeff;
    };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip_ws();
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-')) throw std::invalid_argument("Poly::parse: expected '+'");
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        bool have_coeff = false;
        int64_t coeff = 1;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
            coeff = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = coeff * 10 + (s[i] - '0');
                if (coeff > (int64_t(1) << 50)) coeff %= q; // keep bounded while reading
                ++i;
            }
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        size_t exp = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw std::invalid_argument("Poly::parse: bad exponent");
                size_t e = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    e = e * 10 + static_cast<size_t>(s[i] - '0');
                    if (e > 100000) throw std::invalid_argument("Poly::parse: exponent too large");
                    ++i;
                }
                exp = e;
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("Poly::parse: expected term");
        }
        add_term(sign * coeff, exp);
        skip_ws();
    }
    if (acc.empty()) throw std::invalid_argument("Poly::parse: empty input");
    Poly p(q);
    std::vector<uint32_t> c(acc.size());
    for (size_t k = 0; k < acc.size(); ++k) c[k] = F.reduce(acc[k]);
    return Poly(q, std::move(c));
}

} // namespace scff
