#include "cubic/ring.hpp"

#include <cmath>
#include <sstream>

namespace cubic {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw PreconditionError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

EisensteinQ to_field(const Eisenstein& x) { return EisensteinQ(Rational(x.a), Rational(x.b)); }

bool is_integral(const EisensteinQ& x) { return is_integer(x.a) && is_integer(x.b); }

Eisenstein to_ring(const EisensteinQ& x)
{
    if (!is_integral(x))
        throw PreconditionError("Eisenstein value is not integral");
    return Eisenstein(x.a.get_num(), x.b.get_num());
}

EisensteinQ inverse(const EisensteinQ& x)
{
    Rational n = x.norm();
    if (n == 0)
        throw PreconditionError("division by zero in Q(omega)");
    EisensteinQ c = x.conj();
    return EisensteinQ(Rational(c.a / n), Rational(c.b / n));
}

F3 reduce_mod_theta(const Eisenstein& x)
{
    Integer s = x.a + x.b;
    Integer r = s % 3;
    return F3(r.get_si());
}

bool divisible_by_theta(const Eisenstein& x) { return reduce_mod_theta(x).is_zero(); }

Eisenstein theta_divide(const Eisenstein& x)
{
    // x / theta = x * conj(theta) / 3 = -x * theta / 3
    Eisenstein p = -(x * Eisenstein::theta());
    if (p.a % 3 != 0 || p.b % 3 != 0)
        throw PreconditionError("not divisible by theta: " + to_string(x));
    return Eisenstein(Integer(p.a / 3), Integer(p.b / 3));
}

bool is_unit(const Eisenstein& x) { return x.norm() == 1; }

std::string to_string(const Eisenstein& x)
{
    std::ostringstream os;
    if (x.b == 0) {
        os << x.a;
    } else if (x.a == 0) {
        if (x.b == -1)
            os << "-";
        else if (x.b != 1)
            os << x.b;
        os << "w";
    } else {
        os << x.a << (x.b > 0 ? "+" : "-");
        Integer ab = abs(x.b);
        if (ab != 1)
            os << ab;
        os << "w";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << to_string(x); }

QuadScalar galois_conjugate(const QuadScalar& x) { return x.galois(); }

QuadScalar inverse(const QuadScalar& x)
{
    Rational n = x.field_norm();
    if (n == 0)
        throw PreconditionError("division by zero in Q(sqrt3)");
    return QuadScalar(Rational(x.a / n), Rational(-x.b / n));
}

int sign(const QuadScalar& x)
{
    int sa = sgn(x.a);
    int sb = sgn(x.b);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // opposite signs: compare a^2 with 3 b^2
    Rational d = x.a * x.a - 3 * x.b * x.b;
    return sgn(d) > 0 ? sa : sb;
}

double to_double(const QuadScalar& x) { return x.a.get_d() + x.b.get_d() * std::sqrt(3.0); }

std::string to_string(const QuadScalar& x)
{
    auto fmt = [](const Rational& q) {
        return is_integer(q) ? q.get_num().get_str() : to_string(q);
    };
    std::ostringstream os;
    if (x.b == 0) {
        os << fmt(x.a);
    } else {
        if (x.a != 0)
            os << fmt(x.a) << (x.b > 0 ? "+" : "-");
        else if (x.b < 0)
            os << "-";
        Rational ab = abs(x.b);
        if (ab != 1)
            os << fmt(ab);
        os << "r3";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << to_string(x); }

} // namespace cubic
