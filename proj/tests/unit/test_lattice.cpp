#include <doctest.h>

#include "cubic/lattice.hpp"

using namespace cubic;

namespace {

ZVec z(std::initializer_list<long> xs)
{
    ZVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

// Reflection preserves Z^n: every basis vector has an integral image.
bool reflection_is_integral(const ZForm& f, const ZVec& r)
{
    Rational n = Rational(norm(f, r));
    for (std::size_t i = 0; i < r.size(); ++i) {
        ZVec e(r.size(), Integer(0));
        e[i] = 1;
        Rational c = Rational(2 * inner_product(f, e, r)) / n;
        if (!is_integer(c))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("the forms psi_j")
{
    for (int j = 0; j <= 4; ++j) {
        ZForm f = psi(j);
        CHECK(f.is_diagonal());
        Integer det = -1;
        for (int i = 0; i < j; ++i)
            det *= 3;
        CHECK(determinant(f) == det);
        Inertia s = signature(f);
        CHECK(s.positive == 4);
        CHECK(s.negative == 1);
        CHECK(form_by_name("psi" + std::to_string(j)) == f);
    }
    CHECK_THROWS_AS(form_by_name("psi9"), PreconditionError);
    CHECK_THROWS_AS(psi(5), PreconditionError);
}

TEST_CASE("is_root agrees with lattice-preserving reflections")
{
    for (int j = 0; j <= 4; ++j) {
        ZForm f = psi(j);
        int checked = 0;
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c)
                    for (long d = -1; d <= 1; ++d)
                        for (long e = -1; e <= 1; ++e) {
                            ZVec v = z({a, b, c, d, e});
                            Integer n = norm(f, v);
                            bool expect = n > 0 && is_primitive(v) && reflection_is_integral(f, v);
                            CHECK(is_root(f, v) == expect);
                            checked += expect;
                        }
        CHECK(checked > 0);
    }
}

TEST_CASE("roots of psi_j have norms 1, 2, 3, 6")
{
    for (int j = 0; j <= 4; ++j) {
        auto norms = candidate_root_norms(psi(j));
        for (const auto& n : norms)
            CHECK((n == 1 || n == 2 || n == 3 || n == 6));
    }
    // norm 3 needs 3-divisibility of the pairing
    ZForm f = psi(2);
    CHECK(is_root(f, z({0, 0, 0, 1, 0})));           // norm 3, in 3 dual
    CHECK_FALSE(is_root(f, z({1, 1, 1, 1, 0})));     // norm 4
    CHECK(is_root(f, z({3, -3, 0, -1, -1})));         // norm 6
    CHECK_FALSE(is_root(psi(0), z({0, 1, 1, 1, 1}))); // norm 4
}

TEST_CASE("reflections are isometries and involutions")
{
    ZForm f = psi(3);
    ZVec r = z({3, -1, -1, -1, -1});
    REQUIRE(is_root(f, r));
    Matrix<Integer> m = reflection_matrix(f, r);
    CHECK(m.transpose() * f.gram * m == f.gram);
    CHECK(m * m == Matrix<Integer>::identity(5));
    CHECK(reflect(f, r, r) == z({-3, 1, 1, 1, 1}));
}

TEST_CASE("the Lambda embedding")
{
    ZVec y = z({3, -3, 0, -1, -1});
    EVec x = to_lambda(2, y);
    Eisenstein t = Eisenstein::theta();
    CHECK(x[3] == -t);
    CHECK(x[4] == -t);
    CHECK(from_lambda(2, x) == y);
    // h restricted to the fixed lattice is psi_j
    for (int j = 0; j <= 4; ++j) {
        ZVec v = z({1, 2, -1, 1, 1});
        CHECK(hermitian_norm(to_lambda(j, v)) == norm(psi(j), v));
    }
    QVec s = to_real(1, z({0, 0, 0, 0, 1}));
    CHECK(s[4] == QuadScalar(Rational(0), Rational(-1)));
}

TEST_CASE("primitive Lambda roots")
{
    // norm-3 root theta e_4 of psi_1 becomes e_4 of norm 1
    EVec v = primitive_lambda_root(1, z({0, 0, 0, 0, 1}));
    CHECK(hermitian_norm(v) == 1);
    EVec w = primitive_lambda_root(2, z({3, -3, 0, -1, -1}));
    CHECK(hermitian_norm(w) == 2);
    CHECK(is_primitive(w));
}

TEST_CASE("lambda_lift of an isometry stays integral")
{
    ZForm f = psi(2);
    Matrix<Integer> m = reflection_matrix(f, z({0, 0, 0, 1, -1}));
    Matrix<Eisenstein> g = lambda_lift(2, m);
    Matrix<Eisenstein> h = hermitian_gram();
    CHECK(g.transpose() * h * conj(g) == h);
}
