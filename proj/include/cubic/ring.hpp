#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "cubic/error.hpp"

namespace cubic {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
bool is_integer(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline Rational inverse(const Rational& q)
{
    if (q == 0)
        throw PreconditionError("division by zero");
    return Rational(1) / q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// ---------------------------------------------------------------------------
// F_3

class F3 {
public:
    F3() = default;
    F3(long v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    std::uint8_t value() const { return v_; }

    friend F3 operator+(F3 x, F3 y) { return F3(x.v_ + y.v_); }
    friend F3 operator-(F3 x, F3 y) { return F3(x.v_ + 3 - y.v_); }
    friend F3 operator*(F3 x, F3 y) { return F3(x.v_ * y.v_); }
    F3 operator-() const { return F3(3 - v_); }
    F3& operator+=(F3 y) { return *this = *this + y; }
    F3& operator-=(F3 y) { return *this = *this - y; }
    F3& operator*=(F3 y) { return *this = *this * y; }
    friend bool operator==(F3 x, F3 y) { return x.v_ == y.v_; }

    bool is_zero() const { return v_ == 0; }
    // 1 and 2 are their own inverses.
    F3 inverse() const
    {
        if (v_ == 0)
            throw PreconditionError("division by zero in F_3");
        return *this;
    }
    // Signed representative in {-1, 0, 1}.
    int balanced() const { return v_ == 2 ? -1 : v_; }

private:
    std::uint8_t v_ = 0;
};

inline F3 inverse(F3 x) { return x.inverse(); }
inline std::ostream& operator<<(std::ostream& os, F3 x) { return os << int(x.value()); }

// ---------------------------------------------------------------------------
// a + b*omega with omega^2 + omega + 1 = 0.  T is Integer for Z[omega] and
// Rational for the field Q(omega).

template <class T>
struct EisensteinT {
    T a{0};
    T b{0};

    EisensteinT() = default;
    EisensteinT(long x) : a(x), b(0) {}
    EisensteinT(T x, T y) : a(std::move(x)), b(std::move(y)) {}

    static EisensteinT omega() { return EisensteinT(T(0), T(1)); }
    // theta = omega - conj(omega) = 1 + 2 omega, theta^2 = -3.
    static EisensteinT theta() { return EisensteinT(T(1), T(2)); }

    EisensteinT conj() const { return EisensteinT(T(a - b), T(-b)); }
    // |x|^2 = a^2 - ab + b^2
    T norm() const { return T(a * a - a * b + b * b); }
    bool is_zero() const { return a == 0 && b == 0; }

    friend EisensteinT operator+(const EisensteinT& x, const EisensteinT& y)
    {
        return EisensteinT(T(x.a + y.a), T(x.b + y.b));
    }
    friend EisensteinT operator-(const EisensteinT& x, const EisensteinT& y)
    {
        return EisensteinT(T(x.a - y.a), T(x.b - y.b));
    }
    friend EisensteinT operator*(const EisensteinT& x, const EisensteinT& y)
    {
        T bd = x.b * y.b;
        return EisensteinT(T(x.a * y.a - bd), T(x.a * y.b + x.b * y.a - bd));
    }
    EisensteinT operator-() const { return EisensteinT(T(-a), T(-b)); }
    EisensteinT& operator+=(const EisensteinT& y) { return *this = *this + y; }
    EisensteinT& operator-=(const EisensteinT& y) { return *this = *this - y; }
    EisensteinT& operator*=(const EisensteinT& y) { return *this = *this * y; }
    friend bool operator==(const EisensteinT& x, const EisensteinT& y) { return x.a == y.a && x.b == y.b; }
};

using Eisenstein = EisensteinT<Integer>;
using EisensteinQ = EisensteinT<Rational>;

EisensteinQ to_field(const Eisenstein& x);
bool is_integral(const EisensteinQ& x);
Eisenstein to_ring(const EisensteinQ& x); // throws if not integral
EisensteinQ inverse(const EisensteinQ& x);

// Ring map E -> F_3 with kernel theta*E; omega goes to 1.
F3 reduce_mod_theta(const Eisenstein& x);

// y with theta*y = x; throws if x is not in theta*E.
Eisenstein theta_divide(const Eisenstein& x);
bool divisible_by_theta(const Eisenstein& x);

// Units of E: +-1, +-omega, +-omega^2.
bool is_unit(const Eisenstein& x);

std::string to_string(const Eisenstein& x);
std::ostream& operator<<(std::ostream& os, const Eisenstein& x);

// ---------------------------------------------------------------------------
// a + b*sqrt(3), a and b rational.

struct QuadScalar {
    Rational a{0};
    Rational b{0};

    QuadScalar() = default;
    QuadScalar(long x) : a(x), b(0) {}
    QuadScalar(Rational x) : a(std::move(x)), b(0) {}
    QuadScalar(Rational x, Rational y) : a(std::move(x)), b(std::move(y)) {}

    static QuadScalar sqrt3() { return QuadScalar(Rational(0), Rational(1)); }

    QuadScalar galois() const { return QuadScalar(a, Rational(-b)); }
    // a^2 - 3 b^2
    Rational field_norm() const { return Rational(a * a - 3 * b * b); }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_integral() const { return is_integer(a) && is_integer(b); }
    bool is_rational() const { return b == 0; }

    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y)
    {
        return QuadScalar(Rational(x.a + y.a), Rational(x.b + y.b));
    }
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y)
    {
        return QuadScalar(Rational(x.a - y.a), Rational(x.b - y.b));
    }
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y)
    {
        return QuadScalar(Rational(x.a * y.a + 3 * x.b * y.b), Rational(x.a * y.b + x.b * y.a));
    }
    QuadScalar operator-() const { return QuadScalar(Rational(-a), Rational(-b)); }
    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
    friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return x.a == y.a && x.b == y.b; }
};

QuadScalar galois_conjugate(const QuadScalar& x);
QuadScalar inverse(const QuadScalar& x);
// Sign of the real number a + b sqrt(3).
int sign(const QuadScalar& x);
inline bool operator<(const QuadScalar& x, const QuadScalar& y) { return sign(y - x) > 0; }
inline bool operator>(const QuadScalar& x, const QuadScalar& y) { return y < x; }
double to_double(const QuadScalar& x);

std::string to_string(const QuadScalar& x);
std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

// Generic scalar helpers so templates can treat every coefficient type alike.
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(F3 x) { return x.is_zero(); }
template <class T>
bool is_zero(const EisensteinT<T>& x) { return x.is_zero(); }
inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }

inline const Rational& conj(const Rational& x) { return x; }
inline const Integer& conj(const Integer& x) { return x; }
inline const QuadScalar& conj(const QuadScalar& x) { return x; }
inline F3 conj(F3 x) { return x; }
template <class T>
EisensteinT<T> conj(const EisensteinT<T>& x) { return x.conj(); }

} // namespace cubic
