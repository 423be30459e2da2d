#include "bdk/matrix.hpp"

#include "bdk/errors.hpp"

#include <doctest.h>

using namespace bdk;

TEST_CASE("matrix arithmetic basics") {
    IntMatrix a(2, 2, {1, 2, 3, 4});
    CHECK(a.transpose() == IntMatrix(2, 2, {1, 3, 2, 4}));
    CHECK(a + a == IntMatrix(2, 2, {2, 4, 6, 8}));
    CHECK(a - a == IntMatrix(2, 2));
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a.pow(0) == IntMatrix::identity(2));
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS_AS(a * IntMatrix(3, 3), DimensionMismatch);
}

TEST_CASE("determinant examples") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix(2, 2, {2, 0, 0, 3})) == 6);
    // 1 - A_{C_2}^t is singular
    CHECK(determinant(IntMatrix(2, 2, {1, -1, -1, 1})) == 0);
    CHECK(determinant(IntMatrix(3, 3, {2, -3, 1, 4, 0, -2, 1, 5, 3})) == 82);
    CHECK(determinant(IntMatrix(1, 1, {-7})) == -7);
}

TEST_CASE("geometric power sums") {
    CHECK(geometric_sum_power(IntMatrix(1, 1, {1}), 1, 2) == IntMatrix(1, 1, {2}));
    IntMatrix a(3, 3, {0, 1, 1, 1, 0, 2, 1, 1, 0});
    CHECK(geometric_sum_power(a, 2, 1) == IntMatrix::identity(3));
    // C_2: 1 + A is the all-ones matrix
    IntMatrix c2(2, 2, {0, 1, 1, 0});
    CHECK(geometric_sum_power(c2, 1, 2) == IntMatrix(2, 2, {1, 1, 1, 1}));
    CHECK(geometric_sum_power(a, 2, 3) == IntMatrix::identity(3) + a.pow(2) + a.pow(4));
}

TEST_CASE("fraction-free rank") {
    CHECK(rank_fraction_free(IntMatrix(3, 3)) == 0);
    CHECK(rank_fraction_free(IntMatrix::identity(3)) == 3);
    CHECK(rank_fraction_free(IntMatrix(2, 2, {1, -1, -1, 1})) == 1);
    CHECK(rank_fraction_free(IntMatrix(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
}
