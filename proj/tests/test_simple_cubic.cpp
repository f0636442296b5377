#include "scff/simple_cubic.hpp"

#include <doctest.h>

#include <random>

using namespace scff;

namespace {
Poly P(const char* s, uint32_t q) { return Poly::parse(s, q); }

Poly quartic_to_poly(const std::array<uint32_t, 5>& c, uint32_t q) {
    return Poly(q, std::vector<uint32_t>(c.begin(), c.end()));
}
} // namespace

TEST_CASE("build_simple_cubic") {
    // q=5, P=t, c=4, k=1, n=4: x^3 + t x^2 + (t+2) x + 4
    Cubic H = build_simple_cubic({P("t", 5), 4, 4, 1});
    CHECK(H.c2 == P("t", 5));
    CHECK(H.c1 == P("t+2", 5));
    CHECK(H.c0 == Poly::constant(5, 4));
    // q=7, P=t, c=n=k=1: x^3 + t x^2 + (t+1) x + 1
    H = build_simple_cubic({P("t", 7), 1, 1, 1});
    CHECK(H.c1 == P("t+1", 7));
    CHECK(H.c0 == Poly::constant(7, 1));
    CHECK_THROWS_AS(build_simple_cubic({Poly::constant(5, 2), 1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(build_simple_cubic({P("t", 5), 0, 1, 1}), std::domain_error);
}

TEST_CASE("Shanks polynomial and the c=-1, k^3-n=2 specialization") {
    // the (A, b, c) form with b=3, c=1 is the Shanks minimal polynomial
    Poly A = P("t^2+1", 5);
    Cubic f = ShanksPoly(A).cubic();
    CHECK(f.c2 == -A);
    CHECK(f.c1 == -(A + Poly::constant(5, 3)));
    CHECK(f.c0 == Poly::constant(5, 4));
    // the proof's intermediate form: c=-1, n=k^3-2 collapses H to
    // x^3 + Px^2 + (P-3)x - 1 for every k
    for (uint32_t k = 1; k < 5; ++k) {
        uint32_t n = static_cast<uint32_t>((static_cast<uint64_t>(k) * k * k + 3) % 5);
        if (n == 0) continue; // k^3 = 2: the partner unit degenerates, same field
        Cubic H = build_simple_cubic({P("t^3", 5), 4, n, k});
        CHECK(H.c1 == P("t^3", 5) - Poly::constant(5, 3));
        CHECK(H.c0 == Poly::constant(5, 4));
    }
}

TEST_CASE("discriminant quartic") {
    // Shanks parameters give (P^2 - 3P + 9)^2
    for (uint32_t q : {5u, 7u, 13u}) {
        Fq F(q);
        for (uint32_t k = 1; k < q; ++k) {
            uint32_t n = F.reduce(static_cast<int64_t>(F.pow(k, 3)) - 2);
            auto quartic = discriminant_in_P(q - 1, k, n, q);
            Poly sq = P("t^2", q) - Poly::constant(q, 3).shifted(1) + Poly::constant(q, 9);
            CHECK(quartic_to_poly(quartic, q) == sq * sq);
            CHECK(quartic_is_square(quartic, q));
        }
    }
    // (c,k,n) = (1,1,1) over F_5 is not a square
    CHECK(!quartic_is_square(discriminant_in_P(1, 1, 1, 5), 5));
    // P^3 coefficient is 2(n - c - k^3 - 2)
    auto co = discriminant_in_P(2, 3, 4, 11);
    Fq F(11);
    CHECK(co[3] == F.reduce(2 * (4 - 2 - static_cast<int64_t>(F.pow(3, 3)) - 2)));
}

TEST_CASE("discriminant quartic equals the actual cubic discriminant") {
    // disc(x^3 + Px^2 + (P+w)x + c) as a polynomial identity in P, checked by
    // evaluating both sides at every P value in F_q
    for (uint32_t q : {5u, 7u}) {
        Fq F(q);
        std::mt19937_64 rng(q);
        for (int trial = 0; trial < 60; ++trial) {
            uint32_t c = 1 + static_cast<uint32_t>(rng() % (q - 1));
            uint32_t k = 1 + static_cast<uint32_t>(rng() % (q - 1));
            uint32_t n = static_cast<uint32_t>(rng() % q);
            auto quartic = discriminant_in_P(c, k, n, q);
            Poly qp = quartic_to_poly(quartic, q);
            uint32_t w = F.reduce(static_cast<int64_t>(c) + n - F.pow(k, 3));
            for (uint32_t p = 0; p < q; ++p) {
                // disc = 18 b c d - 4 b^3 d + b^2 c^2 - 4 c^3 - 27 d^2 for x^3+bx^2+cx+d
                int64_t b = p, cc = F.add(p, w), d = c;
                int64_t disc = F.reduce(18 * b % q * cc % q * d - 4 * b * b % q * b % q * d +
                                        b * b % q * cc % q * cc - 4 * cc * cc % q * cc - 27 * d * d);
                CHECK(qp.eval(p) == static_cast<uint32_t>(disc));
            }
        }
    }
}

TEST_CASE("classify_parameters") {
    for (uint32_t q : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        auto triples = classify_parameters(q);
        REQUIRE(triples.size() == q - 1);
        Fq F(q);
        for (const auto& [c, k, n] : triples) {
            CHECK(c == q - 1);
            CHECK(n == F.reduce(static_cast<int64_t>(F.pow(k, 3)) - 2));
        }
    }
}

TEST_CASE("standard form") {
    // q=5, A=t^2
    StandardForm sf = standard_form(ShanksPoly(P("t^2", 5)));
    CHECK(sf.a == P("2t^4+t^2+3", 5));
    CHECK(sf.b == (P("2t^2+3", 5) * P("t^4+3t^2+9", 5)).scaled(2));
    // q=7, A=t: curly-A = 5(t^2+3t+9)
    sf = standard_form(ShanksPoly(P("t", 7)));
    CHECK(sf.a == P("t^2+3t+9", 7).scaled(5));
    // degrees
    CHECK(sf.a.degree() == 2);
    CHECK(sf.b.degree() == 3);
}

TEST_CASE("4a^3 - 27b^2 = (A^2+3A+9)^2, random A") {
    std::mt19937_64 rng(41);
    for (uint32_t q : {5u, 7u}) {
        for (int trial = 0; trial < 200; ++trial) {
            int d = 1 + static_cast<int>(rng() % 5);
            std::vector<uint32_t> c(static_cast<size_t>(d) + 1);
            for (auto& v : c) v = static_cast<uint32_t>(rng() % q);
            c.back() = 1 + static_cast<uint32_t>(rng() % (q - 1));
            ShanksPoly f{Poly(q, std::move(c))};
            StandardForm sf = standard_form(f);
            Poly base = f.disc_base();
            CHECK(sf.discriminant() == base * base);
            // 2A+3 and A^2+3A+9 are relatively prime
            CHECK(poly_gcd(f.A.scaled(2) + Poly::constant(q, 3), base) == Poly::constant(q, 1));
        }
    }
}

TEST_CASE("reduce_standard_form") {
    // q=7, A=t^3+5: Q=t, reduced degrees 4 and 6
    ReducedForm rf = reduce_standard_form(standard_form(ShanksPoly(P("t^3+5", 7))));
    CHECK(rf.Q == P("t", 7));
    CHECK(rf.reduced.a.degree() == 4);
    CHECK(rf.reduced.b.degree() == 6);
    // no further reduction possible
    ReducedForm rf2 = reduce_standard_form(rf.reduced);
    CHECK(rf2.Q == Poly::constant(7, 1));
    // q=5, A=t^2 is already standard
    rf = reduce_standard_form(standard_form(ShanksPoly(P("t^2", 5))));
    CHECK(rf.Q == Poly::constant(5, 1));
}

TEST_CASE("root degrees at infinity") {
    CHECK(root_degrees_at_infinity(ShanksPoly(P("t^3+t", 5)).cubic()) == std::array<int, 3>{3, 0, -3});
    CHECK(root_degrees_at_infinity(ShanksPoly(P("t+2", 7)).cubic()) == std::array<int, 3>{1, 0, -1});
    CHECK(root_degrees_at_infinity(ShanksPoly(P("2t^2", 7)).cubic()) == std::array<int, 3>{2, 0, -2});
    // general simple cubic shape via the parameter constructor
    Cubic H = build_simple_cubic({P("t^4+2t", 5), 2, 3, 1});
    auto degs = root_degrees_at_infinity(H);
    CHECK(degs[0] + degs[1] + degs[2] == 0);
    CHECK(degs == std::array<int, 3>{4, 0, -4});
    // non-constant norm term rejected
    Cubic bad{P("t", 5), P("t", 5), P("t", 5)};
    CHECK_THROWS_AS(root_degrees_at_infinity(bad), std::domain_error);
}

TEST_CASE("regulator from root degrees") {
    CHECK(regulator_from_root_degrees({2, 0, -2}) == 4);
    CHECK(regulator_from_root_degrees({1, 0, -1}) == 1);
    CHECK(regulator_from_root_degrees({11, 0, -11}) == 121);
    CHECK_THROWS_AS(regulator_from_root_degrees({2, 0, -1}), std::domain_error);
}

TEST_CASE("Frobenius powers and canonical parameters") {
    CHECK(is_frobenius_power(P("t^5", 5)));
    CHECK(is_frobenius_power(P("t^10+2t^5+3", 5)));
    CHECK(!is_frobenius_power(P("t^5+t", 5)));
    CHECK(frobenius_canonical(P("t^10+2t^5+3", 5)) == P("t^2+2t+3", 5));
    CHECK(frobenius_canonical(P("t^25", 5)) == P("t", 5));
    // idempotent
    Poly c = frobenius_canonical(P("t^10+2t^5+3", 5));
    CHECK(frobenius_canonical(c) == c);
}

TEST_CASE("sign canonical representative") {
    CHECK(sign_canonical(P("t^2+6", 7)) == P("t^2+6", 7));
    CHECK(sign_canonical(P("6t^2+5", 7)) == P("t^2+6", 7)); // -A-3 partner
    CHECK(sign_canonical(P("4t^2+2", 5)) == P("t^2", 5));
    // involution pairing: sgn(-A-3) = q - sgn(A)
    Poly A = P("2t^3+t+1", 7);
    CHECK(sign_canonical(-(A + Poly::constant(7, 3))) == A);
}
