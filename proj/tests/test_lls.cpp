#include <doctest.h>

#include "catent/errors.hpp"
#include "catent/lls.hpp"
#include "test_util.hpp"

using namespace catent;

TEST_CASE("cf_odd") {
    CHECK(cf_odd(2, 1) == ContinuedFraction{2});
    CHECK(cf_odd(3, 2) == ContinuedFraction{1, 1, 1});
    CHECK(cf_odd(7, 2) == ContinuedFraction{3, 1, 1});
    CHECK(cf_odd(1, 1) == ContinuedFraction{1});
    CHECK(cf_odd(6, 4) == ContinuedFraction{1, 1, 1});  // gcd reduced to 3/2

    CHECK_THROWS_AS(cf_odd(2, 3), DomainError);
    CHECK_THROWS_AS(cf_odd(0, 1), DomainError);
    CHECK_THROWS_AS(cf_odd(1, 0), DomainError);
    CHECK_THROWS_AS(cf_odd(-3, 2), DomainError);

    SUBCASE("odd length, positive entries, exact round trip") {
        testutil::Rng rng(31);
        std::uniform_int_distribution<long long> num(1, 100000);
        for (int trial = 0; trial < 500; ++trial) {
            Int p = num(rng), q = num(rng);
            if (p < q) std::swap(p, q);
            ContinuedFraction cf = cf_odd(p, q);
            CHECK(cf.size() % 2 == 1);
            for (const Int& a : cf) CHECK(a >= 1);
            CHECK(cf_eval(cf) == Rational(p, q));
        }
    }
}

TEST_CASE("cf_eval") {
    CHECK(cf_eval({2}) == Rational(2));
    CHECK(cf_eval({1, 1, 1}) == Rational(3, 2));
    CHECK(cf_eval({3, 1, 1}) == Rational(7, 2));
    CHECK_THROWS_AS(cf_eval({}), DomainError);
    CHECK_THROWS_AS(cf_eval({1, 0, 1}), DomainError);
}

TEST_CASE("lls_of_reduced") {
    CHECK(lls_of_reduced(Mat2Z(1, 1, 1, 2)).entries() == std::vector<Int>{1, 1});
    CHECK(lls_of_reduced(Mat2Z(1, 3, 2, 7)).entries() == std::vector<Int>{2, 3});
    CHECK(lls_of_reduced(Mat2Z(2, 3, 3, 5)).entries() == std::vector<Int>{1, 1, 1, 1});
    CHECK_THROWS_AS(lls_of_reduced(Mat2Z(0, -1, 1, 5)), DomainError);   // not reduced
    CHECK_THROWS_AS(lls_of_reduced(Mat2Z(-2, 3, -7, 10)), DomainError);

    SUBCASE("period length is always even") {
        testutil::Rng rng(32);
        for (int trial = 0; trial < 200; ++trial) {
            Mat2Z a = evaluate(type_m_word(testutil::random_type_m(rng, 4, 5)));
            CHECK(lls_of_reduced(a).size() % 2 == 0);
        }
    }
}

TEST_CASE("reduce_hyperbolic") {
    SUBCASE("already reduced") {
        Reduction r = reduce_hyperbolic(Mat2Z(1, 1, 1, 2));
        CHECK(r.reduced == Mat2Z(1, 1, 1, 2));
        CHECK(r.conjugator == Mat2Z::identity());
    }

    SUBCASE("a = 0 fast path follows the unipotent factorization") {
        Reduction r = reduce_hyperbolic(Mat2Z(0, -1, 1, 3));
        CHECK(r.reduced == Mat2Z(1, 1, 1, 2));
        CHECK(conjugate(Mat2Z(0, -1, 1, 3), r.conjugator) == r.reduced);
        // the factorization direction printed in the docs: A = U A' U^-1
        Mat2Z u(1, -1, 0, 1);
        CHECK(conjugate(r.reduced, u) == Mat2Z(0, -1, 1, 3));
    }

    SUBCASE("scrambled matrix recovers the period") {
        Mat2Z scrambled = conjugate(Mat2Z(1, 3, 2, 7), Mat2Z(1, 0, 1, 1));
        CHECK(scrambled == Mat2Z(-2, 3, -7, 10));
        Reduction r = reduce_hyperbolic(scrambled);
        CHECK(is_reduced(r.reduced));
        CHECK(conjugate(scrambled, r.conjugator) == r.reduced);
        CHECK(cyclic_equal(lls_of_reduced(r.reduced), lls_of_reduced(Mat2Z(1, 3, 2, 7))));
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(reduce_hyperbolic(Mat2Z(1, 0, 1, 1)), DomainError);    // trace 2
        CHECK_THROWS_AS(reduce_hyperbolic(Mat2Z(-1, -1, -1, -2)), DomainError);  // trace -3
        CHECK_THROWS_AS(reduce_hyperbolic(Mat2Z(-2, 3, -7, 10), 0), DomainError);  // bound too small
    }

    SUBCASE("random conjugates reduce and verify") {
        testutil::Rng rng(33);
        for (int trial = 0; trial < 60; ++trial) {
            Mat2Z a = testutil::random_hyperbolic(rng, 2000, 8);
            Reduction r = reduce_hyperbolic(a);
            CHECK(is_reduced(r.reduced));
            CHECK(conjugate(a, r.conjugator) == r.reduced);
        }
    }
}

TEST_CASE("lls_period") {
    CHECK(lls_period(Mat2Z(1, 1, 1, 2)).entries() == std::vector<Int>{1, 1});
    CHECK(lls_period(Mat2Z(-1, -1, -1, -2)).entries() == std::vector<Int>{1, 1});
    CHECK_THROWS_AS(lls_period(Mat2Z(1, 0, 1, 1)), DomainError);
    CHECK_THROWS_AS(lls_period(Mat2Z::gen_s()), DomainError);

    SUBCASE("conjugation invariant") {
        testutil::Rng rng(34);
        for (int trial = 0; trial < 50; ++trial) {
            Mat2Z a = evaluate(type_m_word(testutil::random_type_m(rng, 3, 4)));
            Mat2Z m = testutil::random_generator_matrix(rng, 8);
            CHECK(cyclic_equal(lls_period(conjugate(a, m)), lls_period(a)));
        }
    }

    SUBCASE("type-m words give back their sequence as tuples") {
        testutil::Rng rng(35);
        for (int trial = 0; trial < 100; ++trial) {
            TypeMSequence m = testutil::random_type_m(rng, 4, 5);
            Mat2Z a = evaluate(type_m_word(m));
            CHECK(is_reduced(a));
            CHECK(lls_period(a).entries() == m);
        }
    }
}

TEST_CASE("cyclic_equal uses even offsets") {
    CHECK(cyclic_equal(LLSPeriod({1, 2}), LLSPeriod({1, 2})));
    CHECK(cyclic_equal(LLSPeriod({1, 2, 3, 4}), LLSPeriod({3, 4, 1, 2})));
    CHECK(!cyclic_equal(LLSPeriod({1, 2}), LLSPeriod({2, 1})));
    CHECK(!cyclic_equal(LLSPeriod({1, 2, 3, 4}), LLSPeriod({2, 3, 4, 1})));
    CHECK(!cyclic_equal(LLSPeriod({1, 1}), LLSPeriod({1, 1, 1, 1})));

    SUBCASE("canonical rotation is the least even rotation") {
        LLSPeriod p({3, 4, 1, 2});
        CHECK(p.canonical() == std::vector<Int>{1, 2, 3, 4});
        CHECK(p.entries() == std::vector<Int>{3, 4, 1, 2});
        CHECK(p.str() == "1,2,3,4");
        CHECK(LLSPeriod({2, 1}).str() == "2,1");  // odd rotations are not taken
    }

    SUBCASE("validation") {
        CHECK_THROWS_AS(LLSPeriod({1, 2, 3}), DomainError);
        CHECK_THROWS_AS(LLSPeriod({}), DomainError);
        CHECK_THROWS_AS(LLSPeriod({1, 0}), DomainError);
    }
}

TEST_CASE("is_conjugate") {
    CHECK_THROWS_AS(is_conjugate(Mat2Z(1, 0, 1, 1), Mat2Z(1, 1, 1, 2)), DomainError);
    CHECK_THROWS_AS(is_conjugate(Mat2Z(1, 1, 1, 2), -Mat2Z(1, 1, 1, 2)), DomainError);
    CHECK(!is_conjugate(Mat2Z(1, 1, 1, 2), Mat2Z(1, 3, 2, 7)));
    CHECK(is_conjugate(Mat2Z(0, -1, 1, 5), Mat2Z(1, 3, 1, 4)));
    // the two trace-4 classes: periods (1,2) and (2,1)
    CHECK(!is_conjugate(Mat2Z(1, 2, 1, 3), Mat2Z(1, 1, 2, 3)));

    testutil::Rng rng(36);
    for (int trial = 0; trial < 50; ++trial) {
        Mat2Z a = testutil::random_hyperbolic(rng, 1000, 6);
        Mat2Z m = testutil::random_generator_matrix(rng, 6);
        CHECK(is_conjugate(a, conjugate(a, m)));
    }
}

TEST_CASE("brute_force_conjugate") {
    Mat2Z a(1, 1, 1, 2);
    CHECK(brute_force_conjugate(a, a, 3) == Mat2Z::identity());

    Mat2Z b = conjugate(a, Mat2Z(1, 0, 1, 1));
    auto witness = brute_force_conjugate(a, b, 4);
    REQUIRE(witness.has_value());
    CHECK(conjugate(a, *witness) == b);

    CHECK(!brute_force_conjugate(a, Mat2Z(1, 3, 2, 7), 10).has_value());

    SUBCASE("agrees with is_conjugate on small samples") {
        testutil::Rng rng(37);
        for (int trial = 0; trial < 15; ++trial) {
            Mat2Z x = evaluate(type_m_word(testutil::random_type_m(rng, 2, 3)));
            Mat2Z y = evaluate(type_m_word(testutil::random_type_m(rng, 2, 3)));
            CHECK(is_conjugate(x, y) == brute_force_conjugate(x, y, 12).has_value());
        }
    }

    SUBCASE("batch enumeration matches single queries") {
        auto reached = conjugates_within(a, 5);
        CHECK(reached.contains(a));
        CHECK(reached.contains(b));
        for (const auto& [value, conj] : reached) CHECK(conjugate(a, conj) == value);
    }
}
