#include "scff/splitting.hpp"

#include "scff/factor.hpp"

#include <doctest.h>

using namespace scff;

namespace {
Poly P(const char* s, uint32_t q) { return Poly::parse(s, q); }
} // namespace

TEST_CASE("p_signature examples for q=5, A=t^2") {
    ShanksField f = build_field(5, P("t^2", 5));
    CHECK(p_signature(f, P("t", 5)).tag == SplitTag::Inert);
    CHECK(p_signature(f, P("t+1", 5)).tag == SplitTag::Split); // v_P(b) > 0 branch, a square mod P
    CHECK(p_signature(f, P("t+4", 5)).tag == SplitTag::Split);
    // ramified exactly at the irreducible factors of A^2+3A+9
    Factorization fac = factor(f.disc_f_base);
    for (const auto& [p, m] : fac.factors) CHECK(p_signature(f, p).tag == SplitTag::Ramified);
    CHECK_THROWS_AS(p_signature(f, P("t^2+1", 5)), std::domain_error); // reducible P
}

TEST_CASE("local factors") {
    LocalFactor lf = local_factor({SplitTag::Split}, 1, 5);
    CHECK(lf.num == 25);
    CHECK(lf.den == 16);
    lf = local_factor({SplitTag::Inert}, 1, 5);
    CHECK(lf.num == 25);
    CHECK(lf.den == 31);
    lf = local_factor({SplitTag::Ramified}, 3, 5);
    CHECK(lf.num == 1);
    CHECK(lf.den == 1);
    for (int nu = 1; nu <= 4; ++nu) {
        for (uint32_t q : {5u, 7u}) {
            LocalFactor s = local_factor({SplitTag::Split}, nu, q);
            LocalFactor i = local_factor({SplitTag::Inert}, nu, q);
            CHECK(static_cast<double>(s.num) / s.den > 1.0);
            CHECK(static_cast<double>(i.num) / i.den < 1.0);
            CHECK(log_local_factor(SplitTag::Split, nu, q) > 0);
            CHECK(log_local_factor(SplitTag::Inert, nu, q) < 0);
        }
    }
}

TEST_CASE("census: smallest truncations") {
    IrreducibleTable table(5);
    ShanksField f = build_field(5, P("t^2", 5));
    Census c = splitting_census(f, table, Truncation::count(1));
    CHECK(c.split == 0);
    CHECK(c.inert == 1);
    CHECK(c.ramified == 0);
    CHECK(c.lambda == 0);
    c = splitting_census(f, table, Truncation::count(15));
    CHECK(c.split + c.inert + c.ramified == 15);
    CHECK(c.ramified == 2); // both quadratic factors of t^4+3t^2+9 lie in the first 15 primes
    CHECK(c.lambda == 2);
    c = splitting_census(f, table, Truncation::degree(3));
    CHECK(c.used == 55);
    CHECK(c.lambda == 3);
}

TEST_CASE("galois dichotomy and density over degree <= 4") {
    IrreducibleTable table(7);
    ShanksField f = build_field(7, P("t^2+2", 7));
    Census c = splitting_census(f, table, Truncation::degree(4));
    // every prime classified; split fraction loosely near 1/3
    CHECK(c.split + c.inert + c.ramified == 728);
    double frac = static_cast<double>(c.split) / 728.0;
    CHECK(frac > 0.25);
    CHECK(frac < 0.42);
}

TEST_CASE("census is deterministic across thread counts") {
    IrreducibleTable table(5);
    ShanksField f = build_field(5, P("t^3+t", 5));
    Census c1 = splitting_census(f, table, Truncation::count(3000), 1);
    Census c2 = splitting_census(f, table, Truncation::count(3000), 3);
    Census c8 = splitting_census(f, table, Truncation::count(3000), 8);
    CHECK(c1.split == c2.split);
    CHECK(c1.inert == c2.inert);
    CHECK(c1.log_sum == c2.log_sum); // bit identical
    CHECK(c1.log_sum == c8.log_sum);
}

TEST_CASE("reduced models classify the index primes correctly") {
    // q=7, A=t^3+5: reduced curly-A = 5t(t+3)(t+5)(t+6); t is unramified in
    // the reduced model (v(a)=1, v(b)=0 root-count path)
    ShanksField f = build_field(7, P("t^3+5", 7));
    SplitType st = p_signature(f, P("t", 7));
    CHECK((st.tag == SplitTag::Split || st.tag == SplitTag::Inert));
    CHECK(p_signature(f, P("t+3", 7)).tag == SplitTag::Ramified);
    CHECK(p_signature(f, P("t+5", 7)).tag == SplitTag::Ramified);
    CHECK(p_signature(f, P("t+6", 7)).tag == SplitTag::Ramified);
}
