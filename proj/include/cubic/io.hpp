#pragma once

#include <json.hpp>

#include "cubic/coxeter.hpp"
#include "cubic/finitegrp.hpp"
#include "cubic/gluing.hpp"

namespace cubic {

using Json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit in 64 bits, strings otherwise;
// rationals are numbers when integral and "p/q" strings otherwise.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
// [a, b] pairs: a + b sqrt3 and a + b omega.
Json to_json(const QuadScalar& x);
Json to_json(const Eisenstein& x);
Json to_json(F3 x);

template <class T>
Json to_json(const Vec<T>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

template <class T>
Json to_json(const Matrix<T>& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const Inertia& s);
Json to_json(const CoxeterDiagram& d);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Eisenstein eisenstein_from_json(const Json& j);
// Square matrix of [a, b] pairs, bare or under a "matrix" key.
Matrix<Eisenstein> eisenstein_matrix_from_json(const Json& j);
// Symmetric integer matrix, bare or under a "gram" key.
ZForm form_from_json(const Json& j);

} // namespace cubic
