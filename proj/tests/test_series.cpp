#include "coxq/bivar.hpp"
#include "coxq/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace coxq;

namespace {

Series S(std::vector<Int> cs, int order) { return Series::from_coeffs(std::move(cs), order); }

Series random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Int> cs;
    for (int d = 0; d <= order; ++d) cs.emplace_back(coeff(rng));
    return Series::from_coeffs(std::move(cs), order);
}

}  // namespace

TEST_CASE("arithmetic on small polynomials", "[series]") {
    Series one_pq = S({1, 1}, 3);
    Series one_mq = S({1, -1}, 3);
    CHECK(one_pq * one_mq == S({1, 0, -1}, 3));
    CHECK(one_pq * Series::zero(3) == Series::zero(3));
    CHECK(one_pq + one_mq == S({2}, 3));
    CHECK(one_pq - one_pq == Series::zero(3));
}

TEST_CASE("product truncates at the smaller order and is logged", "[series]") {
    long before = mixed_order_count();
    Series a = S({1, 1}, 10);
    Series b = S({1, 2, 1}, 4);
    Series p = a * b;
    CHECK(p.order() == 4);
    CHECK(p == S({1, 3, 3, 1}, 4));
    CHECK(mixed_order_count() > before);
}

TEST_CASE("inversion of unit-constant-term series", "[series]") {
    CHECK(invert(S({1, 1}, 4)) == S({1, -1, 1, -1, 1}, 4));
    CHECK(invert(Series::one(6)) == Series::one(6));
    CHECK(invert(S({1, 0, -1}, 5)) == S({1, 0, 1, 0, 1}, 5));
    CHECK_THROWS_AS(invert(S({2, 1}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(invert(S({0, 1}, 3)), std::invalid_argument);
}

TEST_CASE("inversion is a two-sided inverse on random unit series", "[series]") {
    std::mt19937 rng(314159u);
    for (int trial = 0; trial < 200; ++trial) {
        int order = 1 + trial % 12;
        Series a = random_series(rng, order);
        std::vector<Int> cs;
        for (int d = 0; d <= order; ++d) cs.push_back(a.coeff(d));
        cs[0] = trial % 2 == 0 ? 1 : -1;
        a = Series::from_coeffs(std::move(cs), order);
        Series b = invert(a);
        REQUIRE(a * b == Series::one(order));
        REQUIRE(b * a == Series::one(order));
    }
}

TEST_CASE("power substitution", "[series]") {
    CHECK(substitute_power(S({1, 1}, 4), 2) == S({1, 0, 1}, 4));
    CHECK(substitute_power(S({5}, 4), 7) == S({5}, 4));
    CHECK(substitute_power(q_int(3, 4), 2) == S({1, 0, 1, 0, 1}, 4));
    CHECK_THROWS_AS(substitute_power(S({1}, 3), 0), std::invalid_argument);
}

TEST_CASE("q-integers, factorials, binomials, Pochhammer symbols", "[series]") {
    CHECK(q_int(4, 6) == S({1, 1, 1, 1}, 6));
    CHECK(q_int(0, 3) == Series::zero(3));
    CHECK(q_factorial(3, 6) == S({1, 2, 2, 1}, 6));
    CHECK(q_binomial(4, 2, 6) == S({1, 1, 2, 1, 1}, 6));
    CHECK(q_pochhammer(-1, 1, 2, 6) == S({1, 1, 1, 1}, 6));  // (1+q)(1+q^2)
    CHECK(q_pochhammer(1, 1, 1, 6) == S({1, -1}, 6));
    CHECK_THROWS_AS(q_binomial(3, 4, 6), std::invalid_argument);
    CHECK_THROWS_AS(q_binomial(3, -1, 6), std::invalid_argument);
}

TEST_CASE("binomials agree with the factorial quotient and with q=1 counts", "[series]") {
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            int order = std::max(1, k * (n - k));
            Series viaRecurrence = q_binomial(n, k, order);
            Series viaFactorials = q_factorial(n, order) *
                                   invert(q_factorial(k, order) * q_factorial(n - k, order));
            REQUIRE(viaRecurrence == viaFactorials);
            Int ordinary = 1;
            for (int i = 0; i < k; ++i) ordinary = ordinary * (n - i) / (i + 1);
            REQUIRE(viaRecurrence.coeff_sum() == ordinary);
        }
    }
}

TEST_CASE("ring axioms hold on random truncated operands", "[series]") {
    std::mt19937 rng(271828u);
    for (int trial = 0; trial < 60; ++trial) {
        int order = 2 + trial % 9;
        Series a = random_series(rng, order);
        Series b = random_series(rng, order);
        Series c = random_series(rng, order);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + (b + c) == (a + b) + c);
        REQUIRE(a - a == Series::zero(order));
    }
}

TEST_CASE("canonical text and JSON forms", "[series]") {
    std::vector<Int> cs(25, 0);
    cs[0] = 1;
    cs[3] = 2;
    cs[5] = -1;
    Series s = Series::from_coeffs(std::move(cs), 24);
    CHECK(to_string(s) == "1 + 2*q^3 - q^5 (+ O(q^25))");
    CHECK(to_string(Series::zero(2)) == "0 (+ O(q^3))");
    CHECK(to_compact_string(S({1, 1, 1, 1}, 3)) == "1+q+q^2+q^3");
    CHECK(to_json(S({1, 0, -2}, 2)) == "{\"var\":\"q\",\"order\":2,\"coeffs\":[1,0,-2]}");
}

TEST_CASE("bivariate product of conjugates", "[series]") {
    // ((1+q) + qs)((1+q) - qs) = (1+q)^2 - q^2 s^2
    Series one_pq = S({1, 1}, 4);
    Series q = Series::monomial(1, 1, 4);
    BivarSeries left = BivarSeries::from_inner(one_pq, 2) + BivarSeries::outer_monomial(q, 1, 2);
    BivarSeries right = BivarSeries::from_inner(one_pq, 2) - BivarSeries::outer_monomial(q, 1, 2);
    BivarSeries expect = BivarSeries::from_inner(one_pq * one_pq, 2) -
                         BivarSeries::outer_monomial(q * q, 2, 2);
    CHECK(left * right == expect);
}

TEST_CASE("bivariate specialization and printing", "[series]") {
    BivarSeries t = BivarSeries::from_inner(S({1, 1, 1, 1}, 3), 1) +
                    BivarSeries::outer_monomial(S({0, 1, 1, 1}, 3), 1, 1);
    CHECK(to_string(t) == "(1+q+q^2+q^3) + (q+q^2+q^3)*s");
    CHECK(t.specialize_outer(-1) == Series::one(3));
    CHECK(t.specialize_outer(1) == S({1, 2, 2, 2}, 3));
    CHECK(t.coeff(1, 2) == 1);
    CHECK(t.coeff(5, 0) == 0);
    CHECK(to_string(BivarSeries::zero(1, 1)) == "0");
}
