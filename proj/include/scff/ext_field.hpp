// Extension fields F_{q^d} = F_q[t]/(P) as quotient-ring contexts, plus the
// distinct-root counter for cubics over the residue field.
#pragma once

#include "scff/poly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace scff {

// F_{q^d} with a fixed monic irreducible modulus. Elements are dense
// coefficient vectors of length d (residues of degree < d, untrimmed).
class ExtField {
  public:
    using Elem = std::vector<uint32_t>;

    // modulus checked irreducible
    ExtField(uint32_t q, Poly modulus);
    // over the lexicographically first monic irreducible of degree d
    static ExtField canonical(uint32_t q, int d);

    uint32_t q() const { return q_; }
    int d() const { return d_; }
    const Poly& modulus() const { return modulus_; }
    uint64_t cardinality() const { return card_; }

    Elem zero() const { return Elem(static_cast<size_t>(d_), 0); }
    Elem one() const;
    Elem from_poly(const Poly& f) const;
    Poly to_poly(const Elem& a) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, uint64_t e) const;
    Elem inv(const Elem& a) const;

    // Euler criterion by modular exponentiation; zero counts as square.
    bool is_square(const Elem& a) const;

  private:
    friend class CubicRootCounter;
    // c = a*b reduced; scratch must hold 2d-1 u64
    void mul_into(const uint32_t* a, const uint32_t* b, uint32_t* c, uint64_t* scratch) const;

    uint32_t q_;
    int d_;
    Poly modulus_;
    std::vector<uint32_t> mod_; // coefficients 0..d of the monic modulus
    uint64_t card_;
};

// Counts distinct roots of y^3 - A y + B over F_q[t]/(P), A and B residues
// mod P, via deg gcd(y^(q^d) - y, cubic). Reusable: holds its workspace.
class CubicRootCounter {
  public:
    explicit CubicRootCounter(const ExtField& R);

    // a, b already reduced mod P (length d, or shorter/Poly-backed)
    int count(const ExtField::Elem& a, const ExtField::Elem& b);

  private:
    const ExtField& R_;
    int d_;
    // y-polynomials of degree <= 4 as flat stride-d arrays
    std::vector<uint32_t> f_, g_, h_;
    std::vector<uint64_t> scratch_;
    std::vector<uint32_t> negA_, B_;

    void ymul(const uint32_t* u, int du, const uint32_t* v, int dv, uint32_t* out, int& dout);
    void yreduce(uint32_t* u, int& du);
};

// Distinct roots of a general cubic c3 y^3 + c2 y^2 + c1 y + c0 with Poly
// coefficients, in the residue field F_q[t]/(P). P must be irreducible and
// c3 a unit mod P.
int count_roots_in_residue_field(const std::array<Poly, 4>& cubic, const Poly& P);

} // namespace scff
