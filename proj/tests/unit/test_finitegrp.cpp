#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubic/finitegrp.hpp"

using namespace cubic;

namespace {

F3Vec vec(std::initializer_list<long> xs)
{
    F3Vec v;
    for (long x : xs)
        v.push_back(F3(x));
    return v;
}

std::vector<std::size_t> sorted_sizes(const std::vector<std::vector<int>>& orbits)
{
    std::vector<std::size_t> s;
    for (const auto& o : orbits)
        s.push_back(o.size());
    std::sort(s.begin(), s.end());
    return s;
}

// All projective points <v> with q(v) != 0.
std::vector<F3Vec> nonisotropic_points()
{
    std::vector<F3Vec> out;
    F3QuadSpace v = F3QuadSpace::standard();
    for (int code = 1; code < 243; ++code) {
        F3Vec x(5);
        int c = code, lead = 0;
        for (int i = 0; i < 5; ++i, c /= 3) {
            x[i] = F3(c % 3);
            if (lead == 0 && c % 3 != 0)
                lead = c % 3;
        }
        if (lead == 1 && !v.product(x, x).is_zero())
            out.push_back(x);
    }
    return out;
}

} // namespace

TEST_CASE("packed matrices")
{
    F3Matrix a(5, 5), b(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            a(i, j) = F3(static_cast<long>(i * 7 + j * 3 + 1));
            b(i, j) = F3(static_cast<long>(i * j + 2 * i + 1));
        }
    CHECK(unpack(pack(a)) == a);
    CHECK(unpack(multiply(pack(a), pack(b))) == a * b);
    CHECK(projective(pack(a)) == projective(pack(-a)));
    CHECK(projective(projective(pack(b))) == projective(pack(b)));
    CHECK(f3_determinant(pack(F3Matrix::identity(5))) == 1);
    F3Matrix r = v_reflection(vec({0, 1, 0, 0, 0}));
    CHECK(f3_determinant(pack(r)) == -1);
}

TEST_CASE("reflections of V")
{
    F3QuadSpace v = F3QuadSpace::standard();
    for (const F3Vec& r : nonisotropic_points()) {
        F3Matrix s = v_reflection(r);
        CHECK(s * s == F3Matrix::identity(5));
        CHECK(v.preserves(s));
        F3Vec sr = s * r;
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(sr[i] == -r[i]);
    }
    CHECK_THROWS(v_reflection(vec({1, 1, 0, 0, 0})));
}

TEST_CASE("small groups")
{
    GroupHandle trivial = generate_group({});
    CHECK(trivial.order() == 1);
    CHECK(identify_group(trivial) == "trivial");

    GroupHandle klein = generate_group({v_reflection(vec({0, 1, 0, 0, 0})), v_reflection(vec({0, 0, 1, 0, 0}))});
    CHECK(klein.order() == 4);

    GroupHandle s3 = generate_group({v_reflection(vec({0, 1, -1, 0, 0})), v_reflection(vec({0, 0, 1, -1, 0}))});
    CHECK(s3.order() == 6);
    Fingerprint f = s3.fingerprint();
    CHECK(f.derived_series == std::vector<std::size_t>{6, 3, 1});
    CHECK(f.abelianization == std::vector<Integer>{2});
    CHECK(f.element_orders == std::map<int, std::size_t>{{1, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("reflections generate W(E6)")
{
    std::vector<F3Matrix> all, plus;
    for (const F3Vec& r : nonisotropic_points())
        all.push_back(v_reflection(r));
    for (const F3Vec& r : plus_points())
        plus.push_back(v_reflection(r));
    // |PO(5,3)| = |SO(5,3)| = 3^4 (3^2 - 1)(3^4 - 1)
    GroupHandle w = generate_group(all);
    CHECK(w.order() == 81 * 8 * 80);
    CHECK(identify_group(w) == "W(E6)");
    GroupHandle w_plus = generate_group(plus);
    CHECK(w_plus.order() == 25920);
    CHECK(w.derived_subgroup().order() == 25920);
}

TEST_CASE("monodromy groups of the real components")
{
    struct Expected {
        std::size_t order;
        std::string name;
        std::vector<std::size_t> derived;
        std::vector<Integer> ab;
    };
    const Expected expected[] = {
        {60, "A5", {60}, {}},
        {36, "S3xS3", {36, 9, 1}, {2, 2}},
        {16, "(Z/2)^3:Z/2", {16, 2, 1}, {2, 2, 2}},
        {24, "S4", {24, 12, 4, 1}, {2}},
        {24, "S4", {24, 12, 4, 1}, {2}},
    };
    for (int j = 0; j <= 4; ++j) {
        MonodromyReport m = monodromy_group(j);
        INFO("j=" << j);
        CHECK(m.group.order() == expected[j].order);
        CHECK(m.name == expected[j].name);
        Fingerprint f = m.group.fingerprint();
        CHECK(f.derived_series == expected[j].derived);
        CHECK(f.abelianization == expected[j].ab);
        for (const F3Matrix& g : m.even_generators)
            CHECK(f3_determinant(pack(g)) == 1);

        // the action on plus-points is faithful
        std::set<std::vector<int>> perms;
        for (PackedF3 x : m.group.elements())
            perms.insert(plus_point_permutation(unpack(x)));
        CHECK(perms.size() == m.group.order());
    }
    MonodromyReport m2 = monodromy_group(2);
    CHECK(sorted_sizes(m2.group.plus_point_orbits()) == std::vector<std::size_t>{1, 2, 2, 4, 4, 16, 16});
    CHECK(sorted_sizes(m2.group.base_orbits()) == std::vector<std::size_t>{1, 1, 1, 4, 4, 8, 8});
}

TEST_CASE("unrecognized groups report their order")
{
    GroupHandle klein = generate_group({v_reflection(vec({0, 1, 0, 0, 0})), v_reflection(vec({0, 0, 1, 0, 0}))});
    CHECK(identify_group(klein) == "unrecognized(order=4)");
}
