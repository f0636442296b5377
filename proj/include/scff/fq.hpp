// Prime field F_q arithmetic context, q an odd prime >= 5.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace scff {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Context for F_q. Elements are plain uint32_t residues in [0, q-1];
// the context carries q and supplies the arithmetic.
class Fq {
  public:
    explicit Fq(uint32_t q) : q_(q) {
        if (q < 5 || !is_prime_u32(q))
            throw std::domain_error("Fq: q must be a prime >= 5");
    }

    uint32_t q() const { return q_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(q_);
        return static_cast<uint32_t>(r < 0 ? r + q_ : r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + q_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % q_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t r = 1, b = a % q_;
        while (e) {
            if (e & 1) r = r * b % q_;
            b = b * b % q_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }
    uint32_t inv(uint32_t a) const {
        if (a % q_ == 0) throw std::domain_error("Fq: inverse of zero");
        return pow(a, q_ - 2);
    }
    bool is_square(uint32_t a) const {
        if (a % q_ == 0) return true;
        return pow(a, (q_ - 1) / 2) == 1;
    }

    bool operator==(const Fq& o) const { return q_ == o.q_; }

  private:
    uint32_t q_;
};

// A field element tagged with its modulus; the convenient currency at API
// boundaries (classify_parameters triples and the like). Internally the
// polynomial layer works on raw residues.
struct FieldElem {
    uint32_t value = 0;
    uint32_t q = 0;

    bool operator==(const FieldElem&) const = default;
};

} // namespace scff
