#include <doctest.h>

#include "cubic/matrix.hpp"

using namespace cubic;

TEST_CASE("rational inverse and determinant")
{
    Matrix<Rational> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    Matrix<Rational> inv = inverse(m);
    CHECK(m * inv == Matrix<Rational>::identity(3));
    // cofactor expansion
    CHECK(determinant(m) == Rational(2 * (12 - 1) - 1 * (4 - 0)));
    Matrix<Rational> singular{{1, 2}, {2, 4}};
    CHECK_FALSE(try_inverse(singular).has_value());
    CHECK(determinant(singular) == 0);
}

TEST_CASE("integer determinant matches the rational one")
{
    Matrix<Integer> m{{3, -1, 2, 0}, {1, 4, -2, 5}, {0, 2, 7, -3}, {6, 1, 0, 2}};
    CHECK(Rational(determinant(m)) == determinant(to_rational(m)));
}

TEST_CASE("integer kernel")
{
    Matrix<Integer> m{{1, 2, 3}, {2, 4, 6}};
    auto k = integer_kernel(m);
    CHECK(k.size() == 2);
    for (const auto& v : k)
        CHECK(m * v == Vec<Integer>{0, 0});
}

TEST_CASE("Smith normal form diagonal")
{
    Matrix<Integer> m{{2, 4}, {6, 8}};
    auto d = smith_diagonal(m);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2);
    CHECK(d[1] == 4); // |det| = 8 = 2 * 4
}

TEST_CASE("inertia of symmetric matrices")
{
    Matrix<Rational> g{{-1, 0, 0}, {0, 1, 0}, {0, 0, 3}};
    Inertia s = inertia(g);
    CHECK(s.positive == 2);
    CHECK(s.negative == 1);
    Matrix<Rational> hyperbolic{{0, 1}, {1, 0}};
    s = inertia(hyperbolic);
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
}

TEST_CASE("solve_linear_map")
{
    std::vector<Vec<Rational>> src = {{1, 0}, {0, 1}};
    CHECK(solve_linear_map(src, src) == Matrix<Rational>::identity(2));
    std::vector<Vec<Rational>> dst = {{0, 1}, {1, 0}};
    Matrix<Rational> swap = solve_linear_map(src, dst);
    CHECK(swap * Vec<Rational>{3, 5} == Vec<Rational>{5, 3});
    CHECK_THROWS_AS(solve_linear_map(std::vector<Vec<Rational>>{{1, 0}}, std::vector<Vec<Rational>>{{1, 0}}),
                    PreconditionError);
    std::vector<Vec<Rational>> src3 = {{1, 0}, {0, 1}, {1, 1}};
    std::vector<Vec<Rational>> bad = {{1, 0}, {0, 1}, {1, 2}};
    CHECK_THROWS_AS(solve_linear_map(src3, bad), PreconditionError);
}
