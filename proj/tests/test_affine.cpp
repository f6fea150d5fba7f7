#include "coxq/affine.hpp"
#include "coxq/assembly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <map>
#include <random>

using namespace coxq;

namespace {

AffinePermutation random_element(std::mt19937& rng, int n, int max_word) {
    std::uniform_int_distribution<int> gen(0, n - 1);
    std::uniform_int_distribution<int> len(0, max_word);
    AffinePermutation w = AffinePermutation::identity(n);
    int l = len(rng);
    for (int i = 0; i < l; ++i) w = compose(w, AffinePermutation::simple_gen(n, gen(rng)));
    return w;
}

}  // namespace

TEST_CASE("window validation", "[affine]") {
    CHECK(AffinePermutation::from_window(3, {1, 2, 3}) == AffinePermutation::identity(3));
    CHECK(AffinePermutation::from_window(3, {2, 1, 3}) == AffinePermutation::simple_gen(3, 1));
    CHECK_THROWS_AS(AffinePermutation::from_window(3, {1, 2, 4}), std::invalid_argument);   // sum 7
    CHECK_THROWS_AS(AffinePermutation::from_window(3, {1, 4, 1}), std::invalid_argument);   // repeated residue
    CHECK_THROWS_AS(AffinePermutation::from_window(3, {1, 2}), std::invalid_argument);      // wrong arity
    CHECK_THROWS_AS(AffinePermutation::identity(1), std::invalid_argument);                 // trivial rank
}

TEST_CASE("simple generator windows", "[affine]") {
    CHECK(AffinePermutation::simple_gen(3, 1).window() == std::vector<long long>{2, 1, 3});
    CHECK(AffinePermutation::simple_gen(3, 0).window() == std::vector<long long>{0, 2, 4});
    CHECK(AffinePermutation::simple_gen(2, 0).window() == std::vector<long long>{0, 3});
    CHECK(AffinePermutation::simple_gen(2, 1).window() == std::vector<long long>{2, 1});
    CHECK_THROWS_AS(AffinePermutation::simple_gen(3, 3), std::invalid_argument);
}

TEST_CASE("group arithmetic", "[affine]") {
    AffinePermutation s1 = AffinePermutation::simple_gen(3, 1);
    CHECK(compose(s1, s1) == AffinePermutation::identity(3));
    CHECK(AffinePermutation::simple_gen(3, 0).inverse() == AffinePermutation::simple_gen(3, 0));

    std::mt19937 rng(99173u);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 3;
        AffinePermutation w = random_element(rng, n, 12);
        CHECK(compose(w, w.inverse()) == AffinePermutation::identity(n));
        CHECK(compose(w.inverse(), w) == AffinePermutation::identity(n));
        long long i = std::uniform_int_distribution<long long>(-30, 30)(rng);
        CHECK(w.apply(i + n) == w.apply(i) + n);
    }
    CHECK_THROWS_AS(compose(AffinePermutation::identity(2), AffinePermutation::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("closed-form length is gated by the breadth-first oracle", "[affine]") {
    for (int n = 2; n <= 4; ++n) {
        auto layers = enumerate_upto(n, 10);
        for (size_t depth = 0; depth < layers.size(); ++depth) {
            for (const AffinePermutation& w : layers[depth]) {
                REQUIRE(length(w) == static_cast<long long>(depth));
            }
        }
    }
}

TEST_CASE("length values on named elements", "[affine]") {
    CHECK(length(AffinePermutation::identity(4)) == 0);
    for (int n = 2; n <= 5; ++n) {
        for (int i = 0; i < n; ++i) CHECK(length(AffinePermutation::simple_gen(n, i)) == 1);
    }
    // s1 s0 has increasing window (-1, 4); s1 s0 s1 is the involution (4, -1)
    CHECK(length(AffinePermutation::from_window(2, {-1, 4})) == 2);
    CHECK(length(AffinePermutation::from_window(2, {4, -1})) == 3);
    AffinePermutation s0 = AffinePermutation::simple_gen(2, 0);
    AffinePermutation s1 = AffinePermutation::simple_gen(2, 1);
    CHECK(compose(s1, s0) == AffinePermutation::from_window(2, {-1, 4}));
    CHECK(compose(compose(s1, s0), s1) == AffinePermutation::from_window(2, {4, -1}));
}

TEST_CASE("descents match length drops", "[affine]") {
    AffinePermutation id3 = AffinePermutation::identity(3);
    for (int i = 0; i < 3; ++i) CHECK_FALSE(has_right_descent(id3, i));
    CHECK(has_right_descent(AffinePermutation::simple_gen(3, 1), 1));

    std::mt19937 rng(55331u);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 3;
        AffinePermutation w = random_element(rng, n, 10);
        for (int i = 0; i < n; ++i) {
            long long after = length(compose(w, AffinePermutation::simple_gen(n, i)));
            REQUIRE(std::abs(after - length(w)) == 1);
            CHECK(has_right_descent(w, i) == (after == length(w) - 1));
        }
    }
}

TEST_CASE("diagram flip automorphism", "[affine]") {
    CHECK(AffinePermutation::identity(3).star() == AffinePermutation::identity(3));
    CHECK(AffinePermutation::simple_gen(3, 1).star() == AffinePermutation::simple_gen(3, 2));
    // conjugation by i -> n+1-i fixes s_0 and sends s_i to s_{n-i}
    for (int n = 2; n <= 5; ++n) {
        CHECK(AffinePermutation::simple_gen(n, 0).star() == AffinePermutation::simple_gen(n, 0));
        for (int i = 1; i < n; ++i) {
            CHECK(AffinePermutation::simple_gen(n, i).star() == AffinePermutation::simple_gen(n, n - i));
        }
    }
    std::mt19937 rng(77221u);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 4;
        AffinePermutation w = random_element(rng, n, 10);
        CHECK(w.star().star() == w);
        CHECK(length(w.star()) == length(w));
        CHECK(length(w.inverse()) == length(w));
    }
}

TEST_CASE("absolute length formulas", "[affine]") {
    CHECK(absolute_length_involution(AffinePermutation::identity(3)) == 0);
    CHECK(absolute_length_involution(AffinePermutation::simple_gen(3, 1)) == 1);
    CHECK_THROWS_AS(absolute_length_involution(AffinePermutation::from_window(2, {-1, 4})),
                    std::invalid_argument);

    CHECK(twisted_absolute_length(AffinePermutation::identity(2)) == 0);
    CHECK(twisted_absolute_length(AffinePermutation::simple_gen(2, 0)) == 1);
    CHECK(hultman_absolute_length(AffinePermutation::simple_gen(2, 0), Automorphism::flip) == 1);
    CHECK_THROWS_AS(twisted_absolute_length(AffinePermutation::simple_gen(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("the recursion reproduces the finite symmetric group values", "[affine]") {
    // involutions of the rank-3 symmetric subgroup: l = 0,1,1,3 and l' = 0,1,1,1
    AffinePermutation s1 = AffinePermutation::simple_gen(3, 1);
    AffinePermutation s2 = AffinePermutation::simple_gen(3, 2);
    AffinePermutation w0 = compose(s1, compose(s2, s1));
    CHECK(hultman_absolute_length(AffinePermutation::identity(3), Automorphism::identity) == 0);
    CHECK(hultman_absolute_length(s1, Automorphism::identity) == 1);
    CHECK(hultman_absolute_length(s2, Automorphism::identity) == 1);
    CHECK(length(w0) == 3);
    CHECK(hultman_absolute_length(w0, Automorphism::identity) == 1);
}

TEST_CASE("closed absolute-length formulas agree with the recursion", "[affine]") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& layer : enumerate_upto(n, 8)) {
            for (const AffinePermutation& w : layer) {
                if (is_involution(w)) {
                    REQUIRE(absolute_length_involution(w) ==
                            hultman_absolute_length(w, Automorphism::identity));
                }
                if (is_twisted_involution(w, Automorphism::flip)) {
                    REQUIRE(twisted_absolute_length(w) == hultman_absolute_length(w, Automorphism::flip));
                }
            }
        }
    }
}

TEST_CASE("ball enumeration counts", "[affine]") {
    auto ball0 = enumerate_upto(3, 0);
    REQUIRE(ball0.size() == 1);
    CHECK(ball0[0] == std::vector<AffinePermutation>{AffinePermutation::identity(3)});

    auto ball2 = enumerate_upto(2, 3);
    size_t total = 0;
    for (const auto& layer : ball2) total += layer.size();
    CHECK(total == 7);  // 1,2,2,2 in the infinite dihedral group

    // layer sizes match the closed Poincare series coefficients
    for (int n = 2; n <= 4; ++n) {
        Series p = poincare_closed(GroupDescriptor::affine_symmetric(n), 12);
        auto layers = enumerate_upto(n, 12);
        for (int d = 0; d <= 12; ++d) {
            REQUIRE(Int(layers[static_cast<size_t>(d)].size()) == p.coeff(d));
        }
    }
}

TEST_CASE("ball enumeration respects the resource cap", "[affine]") {
    setenv("COXQ_MAX_BALL", "10", 1);
    CHECK_THROWS_AS(enumerate_upto(3, 8), std::runtime_error);
    unsetenv("COXQ_MAX_BALL");
}

TEST_CASE("window text and JSON round trips", "[affine]") {
    AffinePermutation w = AffinePermutation::from_window(3, {0, 2, 4});
    CHECK(to_csv(w) == "0,2,4");
    CHECK(window_from_csv("0,2,4") == w);
    CHECK(to_json(w) == "{\"n\":3,\"window\":[0,2,4]}");
    CHECK_THROWS_AS(window_from_csv("1,2,4"), std::invalid_argument);
}
