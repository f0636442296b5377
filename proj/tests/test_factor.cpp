#include "scff/factor.hpp"

#include "scff/irreducibles.hpp"

#include <doctest.h>

#include <random>

using namespace scff;

namespace {
Poly P(const char* s, uint32_t q) { return Poly::parse(s, q); }
} // namespace

TEST_CASE("A^2+3A+9 for A=t^3+5 over F_7") {
    Poly A = P("t^3+5", 7);
    Poly f = A * A + A.scaled(3) + Poly::constant(7, 9);
    Factorization fac = factor(f);
    REQUIRE(fac.factors.size() == 4);
    CHECK(fac.factors[0].first == P("t", 7));
    CHECK(fac.factors[0].second == 3);
    CHECK(fac.factors[1].first == P("t+3", 7));
    CHECK(fac.factors[2].first == P("t+5", 7));
    CHECK(fac.factors[3].first == P("t+6", 7));
    CHECK(fac.expand(7) == f);
    CHECK(!is_cube_free(f));
}

TEST_CASE("constants and irreducibles") {
    Factorization fac = factor(Poly::constant(5, 3));
    CHECK(fac.unit == 3);
    CHECK(fac.factors.empty());
    // t^2+1 irreducible over F_7: -1 is a non-residue
    fac = factor(P("t^2+1", 7));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].second == 1);
    CHECK(is_irreducible(P("t^2+1", 7)));
    CHECK_THROWS_AS(factor(Poly::zero(5)), std::domain_error);
}

TEST_CASE("cube-free examples") {
    // A = t^2, q=5: A^2+3A+9 squarefree
    Poly A = P("t^2", 5);
    CHECK(is_cube_free(A * A + A.scaled(3) + Poly::constant(5, 9)));
    CHECK(is_cube_free(P("t^2", 5)));  // multiplicity 2 < 3
    CHECK(!is_cube_free(P("t^3", 5)));
    CHECK_THROWS_AS(is_cube_free(Poly::zero(5)), std::domain_error);
}

TEST_CASE("factor round trip, 1000 random polynomials per degree <= 8") {
    std::mt19937_64 rng(123);
    for (uint32_t q : {5u, 7u}) {
        for (int d = 1; d <= 8; ++d) {
            for (int i = 0; i < 1000 / 8; ++i) {
                std::vector<uint32_t> c(static_cast<size_t>(d) + 1);
                for (auto& v : c) v = static_cast<uint32_t>(rng() % q);
                c.back() = 1 + static_cast<uint32_t>(rng() % (q - 1));
                Poly f(q, std::move(c));
                Factorization fac = factor(f);
                CHECK(fac.expand(q) == f);
                for (const auto& [p, m] : fac.factors) {
                    CHECK(p.is_monic());
                    CHECK(is_irreducible(p));
                    CHECK(m >= 1);
                }
                for (size_t j = 1; j < fac.factors.size(); ++j)
                    CHECK(fac.factors[j - 1].first < fac.factors[j].first);
            }
        }
    }
}

TEST_CASE("p-th power multiplicities") {
    // (t+1)^5 (t+2)^2 over F_5 exercises the derivative-zero path
    Poly f = Poly::constant(5, 1);
    for (int i = 0; i < 5; ++i) f = f * P("t+1", 5);
    f = f * P("t+2", 5) * P("t+2", 5);
    Factorization fac = factor(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0] == std::make_pair(P("t+1", 5), 5));
    CHECK(fac.factors[1] == std::make_pair(P("t+2", 5), 2));
}

TEST_CASE("factorization is seed independent") {
    Poly f = P("t^6+t^3+2t+4", 7) * P("t^2+1", 7);
    Factorization a = factor(f, 1);
    Factorization b = factor(f, 999331);
    CHECK(a.unit == b.unit);
    CHECK(a.factors == b.factors);
}
