#include <doctest.h>

#include "hulldec/linalg.hpp"

using namespace hulldec;

TEST_CASE("rank: exact rational elimination") {
    Matrix<Rational> m(3, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 6;
    m(2, 0) = 0;
    m(2, 1) = 1;
    m(2, 2) = 1;
    CHECK(rank(m) == 2);
    CHECK(rank(Matrix<Rational>::identity(4)) == 4);
    CHECK(rank(Matrix<Rational>(2, 5)) == 0);
}

TEST_CASE("kernel_vector: finds an exact dependence") {
    // columns (3,1,1), (1,3,1), (2,2,1): kernel spanned by (1,1,-2)
    Matrix<Rational> m(3, 3);
    m(0, 0) = 3;
    m(0, 1) = 1;
    m(0, 2) = 2;
    m(1, 0) = 1;
    m(1, 1) = 3;
    m(1, 2) = 2;
    m(2, 0) = 1;
    m(2, 1) = 1;
    m(2, 2) = 1;
    auto lambda = kernel_vector(m);
    REQUIRE(lambda.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * (*lambda)[j];
        CHECK(acc == 0);
    }
    CHECK_FALSE(kernel_vector(Matrix<Rational>::identity(3)).has_value());
}

TEST_CASE("solve_unique: square, inconsistent, and dependent systems") {
    Matrix<Rational> m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 3;
    auto x = solve_unique(m, {Rational(5), Rational(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);

    Matrix<Rational> wide(2, 1);
    wide(0, 0) = 1;
    wide(1, 0) = 1;
    CHECK_FALSE(solve_unique(wide, {Rational(1), Rational(2)}).has_value());
    auto consistent = solve_unique(wide, {Rational(2), Rational(2)});
    REQUIRE(consistent.has_value());
    CHECK((*consistent)[0] == 2);

    Matrix<Rational> dependent(2, 2);
    dependent(0, 0) = 1;
    dependent(0, 1) = 1;
    dependent(1, 0) = 1;
    dependent(1, 1) = 1;
    CHECK_FALSE(solve_unique(dependent, {Rational(2), Rational(2)}).has_value());
}

TEST_CASE("float elimination uses the scaled zero tolerance") {
    Matrix<double> m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1 + 1e-15;
    CHECK(rank(m, 1e-12) == 1);
    auto lambda = kernel_vector(m, 1e-12);
    REQUIRE(lambda.has_value());
}
