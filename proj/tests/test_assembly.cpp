#include "coxq/assembly.hpp"
#include "coxq/universal.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace coxq;

namespace {

Series S(std::vector<Int> cs, int order) { return Series::from_coeffs(std::move(cs), order); }

}  // namespace

TEST_CASE("closed Poincare series", "[assembly]") {
    CHECK(poincare_closed(GroupDescriptor::symmetric(3), 6) == S({1, 2, 2, 1}, 6));
    CHECK(poincare_closed(GroupDescriptor::symmetric(1), 6) == Series::one(6));
    CHECK(poincare_closed(GroupDescriptor::affine_symmetric(2), 5) == S({1, 2, 2, 2, 2, 2}, 5));
    for (int n = 2; n <= 5; ++n) {
        Series p = poincare_closed(GroupDescriptor::affine_symmetric(n), 6);
        CHECK(p.coeff(0) == 1);
        CHECK(p.coeff(1) == n);
    }
    for (int n = 2; n <= 5; ++n) {
        CHECK(poincare_closed(GroupDescriptor::symmetric(n), 12) == q_factorial(n, 12));
    }
}

TEST_CASE("brute Poincare series matches the products", "[assembly]") {
    for (int n = 1; n <= 5; ++n) {
        GroupDescriptor g = GroupDescriptor::symmetric(n);
        REQUIRE(agree(poincare_brute(g, 12), poincare_closed(g, 12)));
    }
    for (int n = 2; n <= 4; ++n) {
        GroupDescriptor g = GroupDescriptor::affine_symmetric(n);
        REQUIRE(agree(poincare_brute(g, 10), poincare_closed(g, 10)));
    }
}

TEST_CASE("closed twisted series", "[assembly]") {
    // (1+q^2)(1+q^3)/(1+q)^2 agrees with the printed (1+q^2)(1-q+q^2)/(1+q)
    Series l3 = l_closed(GroupDescriptor::symmetric(3), 10);
    Series one_pq = Series::one(10) + Series::monomial(1, 1, 10);
    Series printed = (Series::one(10) + Series::monomial(1, 2, 10)) *
                     S({1, -1, 1}, 10) * invert(one_pq);
    CHECK(l3 == printed);
    CHECK(l_closed(GroupDescriptor::symmetric(1), 8) == Series::one(8));
    CHECK(l_closed(GroupDescriptor::affine_symmetric(2), 12) == uc_closed_L(2, 2, 12));
}

TEST_CASE("brute twisted series", "[assembly]") {
    GroupDescriptor s3 = GroupDescriptor::symmetric(3);
    CHECK(agree(l_brute(s3, Automorphism::identity, 6), l_closed(s3, 6)));
    CHECK(agree(f_brute(s3, Automorphism::identity, 6), poincare_brute(s3, 6)));
    GroupDescriptor a2 = GroupDescriptor::affine_symmetric(2);
    CHECK(agree(l_brute(a2, Automorphism::identity, 12), uc_closed_L(2, 2, 12)));
    // the product formula holds one rank past the acceptance sweep
    GroupDescriptor s6 = GroupDescriptor::symmetric(6);
    CHECK(agree(l_brute(s6, Automorphism::identity, 16), l_closed(s6, 16)));
}

TEST_CASE("the quotient identity on small groups", "[assembly]") {
    CHECK(lusztig_identity_check(GroupDescriptor::symmetric(1), Automorphism::identity, 8));
    CHECK(lusztig_identity_check(GroupDescriptor::symmetric(4), Automorphism::identity, 12));
    CHECK(lusztig_identity_check(GroupDescriptor::symmetric(4), Automorphism::flip, 12));
    CHECK(lusztig_identity_check(GroupDescriptor::affine_symmetric(3), Automorphism::identity, 12));
    CHECK(lusztig_identity_check(GroupDescriptor::affine_symmetric(3), Automorphism::flip, 12));
}

TEST_CASE("two-term parabolic expansion for the finite chain", "[assembly]") {
    for (int n = 2; n <= 6; ++n) {
        BivarSeries lj = lj_finite_example(n, 16);
        CHECK(lj.top_outer_degree() == 1);  // exactly two coset data
        REQUIRE(agree(lj.specialize_outer(-1), l_closed(GroupDescriptor::symmetric(n + 1), 16)));
    }
    CHECK(lj_finite_example(2, 8).coeff(1, 1) == 1);
}

TEST_CASE("double-coset series at rank two is exact at every order", "[assembly]") {
    for (int order : {5, 12, 30}) {
        BivarSeries t = t_brute(2, order);
        CHECK(t.coeff(0, 0) == 1);
        CHECK(t.coeff(0, 1) == 1);
        CHECK(t.coeff(1, 1) == 1);
        for (int d = 2; d <= order; ++d) {
            CHECK(t.coeff(0, d) == 0);
            CHECK(t.coeff(1, d) == 0);
        }
    }
    CHECK(agree(t_brute(1, 10), BivarSeries::one(0, 10)));
}

TEST_CASE("closed and brute double-coset series agree", "[assembly]") {
    for (int n = 2; n <= 4; ++n) {
        REQUIRE(agree(t_closed(n, 16), t_brute(n, 16)));
    }
}

TEST_CASE("the Poincare ratio collapses", "[assembly]") {
    for (int n = 2; n <= 6; ++n) {
        Series p = poincare_closed(GroupDescriptor::affine_symmetric(n), 20);
        Series ratio = p * invert(substitute_power(p, 2));
        Series expect = power(Series::one(20) + Series::monomial(1, 1, 20), n) *
                        invert(Series::one(20) + Series::monomial(1, n, 20));
        REQUIRE(ratio == expect);
    }
}

TEST_CASE("fixed-absolute-length partial sums", "[assembly]") {
    for (int n = 2; n <= 6; ++n) {
        // k = 0 leaves only the identity datum
        Series expect = substitute_power(q_factorial(n, 12), 2) * invert(q_factorial(n, 12));
        REQUIRE(agree(sigma_closed(n, 0, 12), expect));
        REQUIRE(agree(sigma_brute(n, 0, 12), expect));
    }
    CHECK(sigma_closed(3, 2, 10).is_zero());
    CHECK(sigma_brute(3, 2, 10).is_zero());
    REQUIRE(agree(sigma_closed(2, 1, 8), sigma_brute(2, 1, 8)));
}

TEST_CASE("fixed-mu sum-to-product identity", "[assembly]") {
    CHECK(mufixed_check(4, {}, 10));
    CHECK(mufixed_check(2, {1}, 10));
    CHECK(mufixed_check(5, {2}, 12));
    CHECK(mufixed_check(6, {1, 2}, 12));
    CHECK_THROWS_AS(mufixed_check(3, {2}, 10), std::invalid_argument);
}

TEST_CASE("composition product expansions", "[assembly]") {
    CHECK(pi_product({}, 6, 6) == BivarSeries::one(6, 6));
    for (int k = 0; k <= 3; ++k) CHECK(csum_check(k, 8));
    for (int k = 0; k <= 5; ++k) CHECK(tech_check(k));
}

TEST_CASE("limit series", "[assembly]") {
    BivarSeries prod = limit_product_form(12, 3);
    CHECK(prod.coeff(0, 0) == 1);
    CHECK(prod.coeff(0, 1) == 1);
    CHECK(prod.coeff(0, 2) == 1);
    CHECK(prod.coeff(0, 3) == 2);  // distinct-part partitions of 3
    CHECK(prod.coeff(1, 1) == 1);
    REQUIRE(agree(limit_sum_form(12, 3), prod));
}
