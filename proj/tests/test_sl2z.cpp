#include <doctest.h>

#include <cmath>

#include "catent/errors.hpp"
#include "catent/sl2z.hpp"
#include "test_util.hpp"

using namespace catent;

TEST_CASE("compose multiplies exactly") {
    CHECK(Mat2Z(1, 0, 1, 1) * Mat2Z(0, 1, -1, 0) == Mat2Z(0, 1, -1, 1));
    Mat2Z a(2, 3, 3, 5);
    CHECK(Mat2Z::identity() * a == a);
    // (TS)^3 = -I
    Mat2Z ts(0, 1, -1, 1);
    CHECK(ts * ts * ts == -Mat2Z::identity());
}

TEST_CASE("construction rejects determinant != 1") {
    CHECK_THROWS_AS(Mat2Z(1, 0, 0, 2), DeterminantError);
    CHECK_THROWS_AS(Mat2Z(0, 0, 0, 0), DeterminantError);
    CHECK_THROWS_AS(Mat2Z(0, 1, 1, 0), DeterminantError);  // det -1 is not in scope
}

TEST_CASE("power") {
    CHECK(power(Mat2Z::gen_s(), 2) == -Mat2Z::identity());
    CHECK(power(Mat2Z(1, 3, 2, 7), 0) == Mat2Z::identity());
    CHECK(power(Mat2Z(1, 1, 1, 2), 2) == Mat2Z(2, 3, 3, 5));

    SUBCASE("agrees with repeated multiplication") {
        testutil::Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            Mat2Z a = testutil::random_generator_matrix(rng, 6);
            Mat2Z acc;
            for (int n = 0; n <= 12; ++n) {
                CHECK(power(a, n) == acc);
                CHECK(power(a, -n) == inverse(acc));
                acc = acc * a;
            }
        }
    }

    SUBCASE("exponent addition") {
        testutil::Rng rng(12);
        std::uniform_int_distribution<int> expo(-20, 20);
        for (int trial = 0; trial < 100; ++trial) {
            Mat2Z a = testutil::random_generator_matrix(rng, 8);
            int m = expo(rng), n = expo(rng);
            CHECK(power(a, m + n) == power(a, m) * power(a, n));
        }
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Mat2Z(1, 0, 1, 1)) == Mat2Z(1, 0, -1, 1));
    CHECK(inverse(Mat2Z::identity()) == Mat2Z::identity());
    CHECK(inverse(Mat2Z(1, 1, 1, 2)) == Mat2Z(2, -1, -1, 1));
    testutil::Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Mat2Z a = testutil::random_generator_matrix(rng, 10);
        CHECK(a * inverse(a) == Mat2Z::identity());
    }
}

TEST_CASE("conjugate") {
    Mat2Z a(1, 3, 2, 7);
    CHECK(conjugate(a, Mat2Z::identity()) == a);
    CHECK(conjugate(a, Mat2Z(1, 0, 1, 1)) == Mat2Z(-2, 3, -7, 10));
    testutil::Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        Mat2Z x = testutil::random_generator_matrix(rng, 8);
        Mat2Z m = testutil::random_generator_matrix(rng, 8);
        CHECK(conjugate(x, m).trace() == x.trace());
    }
}

TEST_CASE("trace commutation") {
    testutil::Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        Mat2Z a = testutil::random_generator_matrix(rng, 8);
        Mat2Z b = testutil::random_generator_matrix(rng, 8);
        CHECK((a * b).trace() == (b * a).trace());
    }
}

TEST_CASE("determinant stays 1 along random generator words") {
    testutil::Rng rng(16);
    for (int trial = 0; trial < 1000; ++trial) {
        Mat2Z a = testutil::random_generator_matrix(rng, 12);
        CHECK(a.a() * a.d() - a.b() * a.c() == 1);
    }
}

TEST_CASE("spectral radius") {
    CHECK(spectral_radius(Mat2Z(0, 1, -1, 0)).value() == 1.0);
    CHECK(spectral_radius(Mat2Z::identity()).value() == 1.0);

    SpectralRadius golden = spectral_radius(Mat2Z(1, 1, 1, 2));
    CHECK(!golden.is_one());
    CHECK(golden.discriminant() == 5);
    CHECK(golden.value() == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
    CHECK(golden.value() == doctest::Approx(2.618034).epsilon(1e-6));

    SUBCASE("value of inverse eigenvalue multiplies to 1") {
        // the conjugate root needs the cancellation-free form at larger t
        for (long long t : {3LL, 4LL, 10LL, 100LL}) {
            double rho = SpectralRadius(Int(t)).value();
            double rho_conj = (t - std::sqrt(static_cast<double>(t) * t - 4.0)) / 2.0;
            CHECK(rho * rho_conj == doctest::Approx(1.0).epsilon(1e-9));
        }
        // the inverse matrix carries the same trace, hence the same radius
        testutil::Rng rng(18);
        for (int trial = 0; trial < 20; ++trial) {
            Mat2Z a = testutil::random_generator_matrix(rng, 8);
            CHECK(spectral_radius(inverse(a)) == spectral_radius(a));
        }
    }

    SUBCASE("negative trace uses |t|") {
        CHECK(SpectralRadius(Int(-3)) == SpectralRadius(Int(3)));
        CHECK(SpectralRadius(Int(-3)).value() ==
              doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
    }

    SUBCASE("powers match at the surd level via the trace recurrence") {
        testutil::Rng rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            Mat2Z a = testutil::random_hyperbolic(rng, 500, 4);
            Int t = a.trace();
            if (t < 0) continue;
            Int prev = 2, cur = t;  // traces of A^0, A^1
            for (int m = 2; m <= 8; ++m) {
                Int next = t * cur - prev;
                prev = cur;
                cur = next;
                CHECK(power(a, m).trace() == cur);
                CHECK(spectral_radius(power(a, m)).log_value() ==
                      doctest::Approx(m * spectral_radius(a).log_value()).epsilon(1e-12));
            }
        }
    }

    SUBCASE("huge traces stay finite in log view") {
        Mat2Z big = power(Mat2Z(1, 1, 1, 2), 2000);
        SpectralRadius r = spectral_radius(big);
        CHECK(r.log_value() == doctest::Approx(2000 * std::log((3.0 + std::sqrt(5.0)) / 2.0))
                                    .epsilon(1e-12));
    }
}

TEST_CASE("is_reduced") {
    CHECK(is_reduced(Mat2Z(1, 1, 1, 2)));
    CHECK(!is_reduced(Mat2Z(1, 0, 1, 1)));   // c = d
    CHECK(!is_reduced(Mat2Z(0, -1, 1, 5)));  // a = 0
    CHECK(!is_reduced(Mat2Z(-2, 3, -7, 10)));
    CHECK(is_reduced(Mat2Z(1, 3, 2, 7)));
}

TEST_CASE("entry growth without overflow") {
    Mat2Z a(1, 1, 1, 2);
    Mat2Z big = power(a, 500);
    CHECK(big.d().str().size() > 200);  // hundreds of decimal digits
    CHECK(big.a() * big.d() - big.b() * big.c() == 1);
}

TEST_CASE("matrix text round trip") {
    CHECK(Mat2Z::parse("1,3,2,7") == Mat2Z(1, 3, 2, 7));
    CHECK(Mat2Z::parse(" 0 , -1 , 1 , 5 ") == Mat2Z(0, -1, 1, 5));
    CHECK(Mat2Z::parse("+1,0,0,+1") == Mat2Z::identity());
    Mat2Z a(1, 3, 2, 7);
    CHECK(Mat2Z::parse(a.str()) == a);

    CHECK_THROWS_AS(Mat2Z::parse("1,2,3"), ParseError);
    CHECK_THROWS_AS(Mat2Z::parse("1,2,3,4,5"), ParseError);
    CHECK_THROWS_AS(Mat2Z::parse("1,x,3,4"), ParseError);
    CHECK_THROWS_AS(Mat2Z::parse(""), ParseError);
    CHECK_THROWS_AS(Mat2Z::parse("1,2,3,4"), DeterminantError);  // det -2
}
