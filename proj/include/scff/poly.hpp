// Dense polynomials over F_q in t: the universal currency of the library.
//
// Invariants: coefficient vector has no trailing zeros (the zero polynomial
// has an empty vector); all coefficients lie in [0, q-1]. deg(0) is the
// sentinel -1, ordered below every true degree. sgn(0) = 0.
#pragma once

#include "scff/fq.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scff {

class Poly {
  public:
    Poly() : q_(0) {}
    explicit Poly(uint32_t q) : q_(q) {}
    Poly(uint32_t q, std::vector<uint32_t> coeffs) : q_(q), c_(std::move(coeffs)) { trim(); }

    static Poly zero(uint32_t q) { return Poly(q); }
    static Poly constant(uint32_t q, int64_t v);
    // c * t^k
    static Poly term(uint32_t q, int64_t c, size_t k);
    static Poly t(uint32_t q) { return term(q, 1, 1); }

    uint32_t q() const { return q_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    uint32_t sgn() const { return c_.empty() ? 0 : c_.back(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    uint32_t eval(uint32_t x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return q_ == o.q_ && c_ == o.c_; }

    Poly scaled(uint32_t s) const;
    Poly monic() const;
    Poly derivative() const;
    // t -> t substitution of a constant shift or scale is not needed; x^k shift:
    Poly shifted(size_t k) const; // * t^k

    // (quotient, remainder); divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    bool divides(const Poly& f) const { return (f % *this).is_zero(); }

    // Total order: (degree, coefficients from the top down) — the enumeration
    // order shared by irreducible streams and factorization output.
    std::strong_ordering operator<=>(const Poly& o) const {
        if (auto c = c_.size() <=> o.c_.size(); c != 0) return c;
        for (size_t i = c_.size(); i-- > 0;)
            if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    // Shared text grammar: descending terms joined by '+', coefficient
    // suppressed when 1 except on the constant term, `t^k`/`t`/decimal.
    std::string str() const;
    static Poly parse(std::string_view s, uint32_t q);

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    uint32_t q_;
    std::vector<uint32_t> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);

// Extended gcd: returns g = gcd(a,b) monic with g = s*a + t*b.
struct XGcd {
    Poly g, s, t;
};
XGcd poly_xgcd(const Poly& a, const Poly& b);

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod);

} // namespace scff
