#include "cubic/io.hpp"

namespace cubic {

Json to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

Json to_json(const Rational& q)
{
    if (is_integer(q))
        return to_json(Integer(q.get_num()));
    return Json(q.get_str());
}

Json to_json(const QuadScalar& x) { return Json::array({to_json(x.a), to_json(x.b)}); }
Json to_json(const Eisenstein& x) { return Json::array({to_json(x.a), to_json(x.b)}); }
Json to_json(F3 x) { return Json(x.balanced()); }

Json to_json(const Inertia& s)
{
    return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json to_json(const CoxeterDiagram& d)
{
    Json nodes = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        nodes.push_back(Json{{"name", d.names[i]}, {"norm", to_json(d.norms[i])}});
    Json edges = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.bond(i, j) != Bond::Orthogonal)
                edges.push_back(Json{{"a", d.names[i]}, {"b", d.names[j]}, {"bond", to_string(d.bond(i, j))}});
    return Json{{"nodes", nodes}, {"edges", edges}};
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0)
            return z;
    }
    throw PreconditionError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(integer_from_json(j));
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) == 0 && q.get_den() != 0) {
            q.canonicalize();
            return q;
        }
    }
    throw PreconditionError("expected a rational, got " + j.dump());
}

Eisenstein eisenstein_from_json(const Json& j)
{
    if (j.is_number_integer() || j.is_string())
        return Eisenstein(integer_from_json(j), Integer(0));
    if (j.is_array() && j.size() == 2)
        return Eisenstein(integer_from_json(j[0]), integer_from_json(j[1]));
    throw PreconditionError("expected an Eisenstein integer [a, b], got " + j.dump());
}

namespace {

const Json& unwrap(const Json& j, const char* key)
{
    if (j.is_object()) {
        if (!j.contains(key))
            throw PreconditionError(std::string("missing \"") + key + "\"");
        return j.at(key);
    }
    return j;
}

} // namespace

Matrix<Eisenstein> eisenstein_matrix_from_json(const Json& j)
{
    const Json& m = unwrap(j, "matrix");
    if (!m.is_array() || m.empty())
        throw PreconditionError("matrix must be a nonempty array of rows");
    std::size_t n = m.size();
    Matrix<Eisenstein> out(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (!m[a].is_array() || m[a].size() != n)
            throw PreconditionError("matrix must be square");
        for (std::size_t b = 0; b < n; ++b)
            out(a, b) = eisenstein_from_json(m[a][b]);
    }
    return out;
}

ZForm form_from_json(const Json& j)
{
    const Json& m = unwrap(j, "gram");
    if (!m.is_array() || m.empty())
        throw PreconditionError("gram must be a nonempty array of rows");
    std::size_t n = m.size();
    Matrix<Integer> g(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (!m[a].is_array() || m[a].size() != n)
            throw PreconditionError("gram must be square");
        for (std::size_t b = 0; b < n; ++b)
            g(a, b) = integer_from_json(m[a][b]);
    }
    return ZForm(g);
}

} // namespace cubic
