#include "scff/poly.hpp"

#include <doctest.h>

#include <random>

using namespace scff;

namespace {
Poly P(const char* s, uint32_t q) { return Poly::parse(s, q); }

Poly random_poly(uint32_t q, int maxdeg, std::mt19937_64& rng) {
    int d = static_cast<int>(rng() % static_cast<uint64_t>(maxdeg + 1));
    std::vector<uint32_t> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = static_cast<uint32_t>(rng() % q);
    return Poly(q, std::move(c));
}
} // namespace

TEST_CASE("arithmetic basics") {
    Poly a = P("t^2+3t+1", 5);
    Poly b = P("2t+4", 5);
    CHECK((a + b).str() == "t^2"); // 5t+5 vanishes
    CHECK((a * b).degree() == 3);
    CHECK((a - a).is_zero());
    CHECK(a.degree() == 2);
    CHECK(Poly::zero(5).degree() == -1);
    CHECK(Poly::zero(5).sgn() == 0);
    CHECK(P("3t^2", 7).sgn() == 3);
    auto [quo, rem] = (a * b + Poly::constant(5, 2)).divmod(b);
    CHECK(quo == a);
    CHECK(rem == Poly::constant(5, 2));
}

TEST_CASE("gcd examples") {
    // gcd(t^4+3t^2+9, 2t) = 1 over F_5: constant term 9 != 0
    CHECK(poly_gcd(P("t^4+3t^2+9", 5), P("2t", 5)) == Poly::constant(5, 1));
    // gcd(P, 0) = monic(P)
    CHECK(poly_gcd(P("3t^2+3", 7), Poly::zero(7)) == P("t^2+1", 7));
    // gcd(t^3(t+3), 3t^2) = t^2 over F_7
    CHECK(poly_gcd(P("t^4+3t^3", 7), P("3t^2", 7)) == P("t^2", 7));
    CHECK_THROWS_AS(poly_gcd(Poly::zero(5), Poly::zero(5)), std::domain_error);
}

TEST_CASE("gcd divides both and is monic (random)") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Poly a = random_poly(5, 7, rng), b = random_poly(5, 7, rng);
        if (a.is_zero() && b.is_zero()) continue;
        Poly g = poly_gcd(a, b);
        CHECK(g.is_monic());
        if (!a.is_zero()) CHECK((a % g).is_zero());
        if (!b.is_zero()) CHECK((b % g).is_zero());
        XGcd x = poly_xgcd(a, b);
        CHECK(x.s * a + x.t * b == g);
    }
}

TEST_CASE("text grammar") {
    CHECK(P("t^4+3t^2+9", 5).str() == "t^4+3t^2+4");
    CHECK(P("2t^3+6", 7).str() == "2t^3+6");
    CHECK(P("t", 5).str() == "t");
    CHECK(Poly::zero(5).str() == "0");
    CHECK(P("0", 5).is_zero());
    // '*' separators, whitespace, unnormalized coefficients
    CHECK(P("3 * t^2 + 12t + 7", 5) == P("3t^2+2t+2", 5));
    CHECK(P("17", 5) == Poly::constant(5, 2));
    CHECK(P("t^2-1", 7) == P("t^2+6", 7));
    CHECK_THROWS_AS(P("", 5), std::invalid_argument);
    CHECK_THROWS_AS(P("t^", 5), std::invalid_argument);
    CHECK_THROWS_AS(P("x+1", 5), std::invalid_argument);
}

TEST_CASE("print/parse round trip (random)") {
    std::mt19937_64 rng(11);
    for (uint32_t q : {5u, 7u, 13u}) {
        for (int i = 0; i < 400; ++i) {
            Poly f = random_poly(q, 9, rng);
            CHECK(Poly::parse(f.str(), q) == f);
        }
    }
}

TEST_CASE("order is (degree, coefficients from the top)") {
    CHECK(P("t^2+4", 5) < P("t^2+t", 5));
    CHECK(P("t^2+t", 5) < P("2t^2", 5));
    CHECK(P("4t^2+4t+4", 5) < P("t^3", 5));
}
