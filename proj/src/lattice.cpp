#include "cubic/lattice.hpp"

#include <sstream>

namespace cubic {

ZForm::ZForm(Matrix<Integer> g) : gram(std::move(g))
{
    if (!gram.square() || gram.rows() == 0)
        throw PreconditionError("Gram matrix must be square and nonempty");
    if (!(gram.transpose() == gram))
        throw PreconditionError("Gram matrix must be symmetric");
}

bool ZForm::is_diagonal() const
{
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (i != j && gram(i, j) != 0)
                return false;
    return true;
}

ZForm psi(int j)
{
    if (j < 0 || j > 4)
        throw PreconditionError("psi_j is defined for j = 0..4");
    Vec<Integer> d{-1, 1, 1, 1, 1};
    for (int i = 5 - j; i < 5; ++i)
        d[i] = 3;
    return ZForm(Matrix<Integer>::diagonal(d));
}

ZForm form_by_name(const std::string& name)
{
    if (name.size() == 4 && name.rfind("psi", 0) == 0 && name[3] >= '0' && name[3] <= '4')
        return psi(name[3] - '0');
    throw PreconditionError("unknown form '" + name + "' (expected psi0..psi4)");
}

Integer inner_product(const ZForm& form, const ZVec& x, const ZVec& y) { return pair(form.gram, x, y); }

Integer norm(const ZForm& form, const ZVec& x) { return pair(form.gram, x, x); }

Integer determinant(const ZForm& form) { return determinant(form.gram); }

Inertia signature(const ZForm& form) { return inertia(to_rational(form.gram)); }

bool in_three_dual(const ZForm& form, const ZVec& x)
{
    ZVec gx = form.gram * x;
    for (const auto& c : gx)
        if (c % 3 != 0)
            return false;
    return true;
}

bool is_root(const ZForm& form, const ZVec& x)
{
    if (x.size() != form.dimension() || !is_primitive(x))
        return false;
    Integer n = norm(form, x);
    if (n <= 0)
        return false;
    ZVec gx = form.gram * x;
    for (const auto& c : gx)
        if ((2 * c) % n != 0)
            return false;
    return true;
}

ZVec reflect(const ZForm& form, const ZVec& r, const ZVec& x)
{
    Integer n = norm(form, r);
    if (n <= 0)
        throw PreconditionError("reflection in a vector of non-positive norm");
    Integer num = 2 * inner_product(form, x, r);
    if (num % n != 0)
        throw PreconditionError("reflection does not preserve the lattice");
    Integer c = num / n;
    ZVec out = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] -= c * r[i];
    return out;
}

Matrix<Integer> reflection_matrix(const ZForm& form, const ZVec& r)
{
    std::size_t n = form.dimension();
    std::vector<ZVec> cols;
    for (std::size_t i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = 1;
        cols.push_back(reflect(form, r, e));
    }
    return Matrix<Integer>::from_columns(cols);
}

std::vector<Integer> candidate_root_norms(const ZForm& form)
{
    if (!form.is_diagonal())
        throw PreconditionError("root norm bound requires a diagonal form");
    Integer l = 1;
    for (std::size_t i = 0; i < form.dimension(); ++i)
        l = lcm(l, abs(form.gram(i, i)));
    Integer bound = 2 * l;
    std::vector<Integer> out;
    for (Integer d = 1; d <= bound; ++d)
        if (bound % d == 0)
            out.push_back(d);
    return out;
}

Matrix<Eisenstein> hermitian_gram()
{
    return Matrix<Eisenstein>::diagonal({Eisenstein(-1), Eisenstein(1), Eisenstein(1), Eisenstein(1), Eisenstein(1)});
}

Eisenstein hermitian_product(const EVec& x, const EVec& y)
{
    if (x.size() != 5 || y.size() != 5)
        throw PreconditionError("Hermitian vectors must have 5 coordinates");
    Eisenstein s = -(x[0] * y[0].conj());
    for (std::size_t i = 1; i < 5; ++i)
        s += x[i] * y[i].conj();
    return s;
}

Integer hermitian_norm(const EVec& x) { return hermitian_product(x, x).a; }

namespace {

Integer round_div(const Integer& num, const Integer& den)
{
    // nearest integer to num/den, den > 0
    Integer q;
    Integer t = 2 * num + den;
    Integer d2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
    return q;
}

} // namespace

Eisenstein eisenstein_gcd(Eisenstein x, Eisenstein y)
{
    while (!y.is_zero()) {
        Eisenstein num = x * y.conj();
        Integer n = y.norm();
        Eisenstein q(round_div(num.a, n), round_div(num.b, n));
        Eisenstein r = x - q * y;
        x = y;
        y = r;
    }
    return x;
}

bool is_primitive(const EVec& v)
{
    Eisenstein g(0);
    for (const auto& x : v)
        g = eisenstein_gcd(g, x);
    return is_unit(g);
}

EVec to_lambda(int j, const ZVec& y)
{
    if (y.size() != 5 || j < 0 || j > 4)
        throw PreconditionError("to_lambda expects a 5-vector and j in 0..4");
    EVec x;
    for (std::size_t i = 0; i < 5; ++i) {
        Eisenstein e(y[i], Integer(0));
        if (static_cast<int>(i) >= 5 - j)
            e = e * Eisenstein::theta();
        x.push_back(e);
    }
    return x;
}

ZVec from_lambda(int j, const EVec& x)
{
    if (x.size() != 5 || j < 0 || j > 4)
        throw PreconditionError("from_lambda expects a 5-vector and j in 0..4");
    ZVec y;
    for (std::size_t i = 0; i < 5; ++i) {
        Eisenstein e = x[i];
        if (static_cast<int>(i) >= 5 - j)
            e = theta_divide(e);
        if (e.b != 0)
            throw PreconditionError("vector is not in the fixed lattice");
        y.push_back(e.a);
    }
    return y;
}

QVec to_real(int j, const ZVec& y)
{
    if (y.size() != 5 || j < 0 || j > 4)
        throw PreconditionError("to_real expects a 5-vector and j in 0..4");
    QVec s;
    for (std::size_t i = 0; i < 5; ++i) {
        if (static_cast<int>(i) >= 5 - j)
            s.emplace_back(Rational(0), Rational(-y[i]));
        else
            s.emplace_back(Rational(y[i]));
    }
    return s;
}

Matrix<Eisenstein> lambda_lift(int j, const Matrix<Integer>& m)
{
    if (m.rows() != 5 || m.cols() != 5)
        throw PreconditionError("lambda_lift expects a 5x5 matrix");
    auto scaled = [j](std::size_t i) { return static_cast<int>(i) >= 5 - j; };
    Matrix<Eisenstein> out(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k) {
            Eisenstein e(m(i, k), Integer(0));
            if (scaled(i) && !scaled(k))
                e = e * Eisenstein::theta();
            else if (!scaled(i) && scaled(k))
                e = theta_divide(e);
            out(i, k) = e;
        }
    return out;
}

EVec primitive_lambda_root(int j, const ZVec& r)
{
    ZForm f = psi(j);
    if (!is_root(f, r))
        throw PreconditionError("not a root of psi_" + std::to_string(j) + ": " + to_string(r));
    EVec x = to_lambda(j, r);
    Integer n = norm(f, r);
    if (n == 3 || n == 6)
        for (auto& e : x)
            e = theta_divide(e);
    return x;
}

std::string to_string(const ZVec& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace cubic
