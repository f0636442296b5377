#include "scff/irreducibles.hpp"

#include <doctest.h>

using namespace scff;

TEST_CASE("counts match the necklace formula") {
    // full sieve agreement where the tables stay small; the larger q spot-check
    // the low degrees (the sieve refuses q^d beyond its memory cap)
    for (uint32_t q : {5u, 7u}) {
        IrreducibleTable table(q);
        for (int d = 1; d <= 8; ++d) CHECK(table.degree(d).size() == gauss_irreducible_count(q, d));
    }
    for (uint32_t q : {11u, 13u}) {
        IrreducibleTable table(q);
        for (int d = 1; d <= 6; ++d) CHECK(table.degree(d).size() == gauss_irreducible_count(q, d));
    }
    CHECK(gauss_irreducible_count(5, 1) == 5);
    CHECK(gauss_irreducible_count(5, 2) == 10);
    CHECK(gauss_irreducible_count(7, 3) == 112);
}

TEST_CASE("members are irreducible, sorted, and complete at low degree") {
    IrreducibleTable table(5);
    const auto& d1 = table.degree(1);
    REQUIRE(d1.size() == 5);
    CHECK(d1.front() == Poly::parse("t", 5));
    CHECK(d1.back() == Poly::parse("t+4", 5));
    const auto& d3 = table.degree(3);
    for (size_t i = 0; i < d3.size(); ++i) {
        CHECK(d3[i].is_monic());
        CHECK(is_irreducible(d3[i]));
        if (i) CHECK(d3[i - 1] < d3[i]);
    }
}

TEST_CASE("lambda bookkeeping") {
    IrreducibleTable table(5);
    CHECK(table.count_up_to_degree(7) == 14569);
    CHECK(table.lambda_for_count(40000) == 7); // 40000 lands inside degree 8
    CHECK(table.lambda_for_count(14569) == 7);
    CHECK(table.lambda_for_count(4) == 0);
    CHECK(table.lambda_for_count(5) == 1);
}

TEST_CASE("is_irreducible basics") {
    CHECK(is_irreducible(Poly::parse("t^2+2", 5)));
    CHECK(!is_irreducible(Poly::parse("t^2+1", 5))); // (t+2)(t+3)
    CHECK(!is_irreducible(Poly::parse("3", 5)));
}
