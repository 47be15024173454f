#include <doctest.h>

#include "qeig/gauss.hpp"

using namespace qeig;

TEST_CASE("gaussian coefficients at positive base") {
    CHECK(gauss(4, 2, 2) == 35);
    CHECK(gauss(4, 2, 3) == 130);  // (80*26)/(8*2)
    CHECK(gauss(7, 0, 2) == 1);
    CHECK(gauss(0, 0, 5) == 1);
    CHECK(gauss(3, 5, 2) == 0);  // k > n
    CHECK(gauss(5, 2, 2) == 155);
    CHECK_THROWS_AS(gauss(4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gauss(-1, 0, 2), std::invalid_argument);
}

TEST_CASE("pascal recurrence and symmetry") {
    for (long q : {2, 3, 4, 5})
        for (long n = 1; n <= 30; ++n)
            for (long k = 1; k <= n; ++k) {
                CHECK(gauss(n, k, q) ==
                      gauss(n - 1, k - 1, q) + pow_int(q, k) * gauss(n - 1, k, q));
                CHECK(gauss(n, k, q) == gauss(n, n - k, q));
            }
}

TEST_CASE("signed-base coefficients") {
    CHECK(gauss_signed(2, 1, -2) == -1);
    CHECK(gauss_signed(3, 2, -2) == 3);
    CHECK(gauss_signed(9, 0, -3) == 1);
    CHECK(gauss_signed(2, 4, -2) == 0);
    CHECK_THROWS_AS(gauss_signed(2, 1, 2), std::invalid_argument);

    // |value| from the factor magnitudes, sign (-1)^{(m+1)l} when nonzero
    for (long q : {2, 3})
        for (long m = 0; m <= 20; ++m)
            for (long l = 0; l <= m; ++l) {
                ExactInt v = gauss_signed(m, l, -q);
                REQUIRE(v != 0);
                int expect = ((m + 1) * l) % 2 ? -1 : 1;
                CHECK(sign_of(v) == expect);
                Rat mag = 1;
                for (long t = 1; t <= l; ++t) {
                    Rat f(abs_int(pow_int(-q, m - t + 1) - 1), abs_int(pow_int(-q, t) - 1));
                    f.canonicalize();
                    mag *= f;
                }
                CHECK(Rat(abs_int(v)) == mag);
            }
}

TEST_CASE("coefficient estimate clauses") {
    GaussBoundsVerdict v = check_gauss_bounds(4, 2, 2);
    CHECK(v.value == 35);
    CHECK(v.power == 16);
    CHECK(v.part[0].applies);
    CHECK(v.part[0].holds);  // 35 >= 16
    CHECK(v.part[1].applies);
    CHECK(v.part[1].holds);  // 35 >= 24
    CHECK_FALSE(v.part[2].applies);

    v = check_gauss_bounds(4, 2, 3);
    CHECK(v.part[2].applies);
    CHECK(v.part[2].holds);  // 130 < 162

    v = check_gauss_bounds(6, 0, 2);
    CHECK(v.part[0].holds);  // 1 >= 1
    CHECK(v.part[3].applies);
    CHECK(v.part[3].holds);  // 1 < q/(q-1)

    for (long q : {2, 3, 4, 5})
        for (long n = 0; n <= 30; ++n)
            for (long k = 0; k <= n; ++k) CHECK(check_gauss_bounds(n, k, q).all_hold());
}

TEST_CASE("cached lookups agree with direct evaluation") {
    CHECK(gauss_cached(12, 5, 3) == gauss(12, 5, 3));
    CHECK(gauss_cached(12, 5, 3) == gauss(12, 5, 3));  // cache hit path
    CHECK(gauss_signed_cached(9, 4, -2) == gauss_signed(9, 4, -2));
}
