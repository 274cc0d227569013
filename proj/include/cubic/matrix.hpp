#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "cubic/ring.hpp"

namespace cubic {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw PreconditionError("ragged matrix literal");
            for (const auto& x : r)
                data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }
    static Matrix diagonal(const Vec<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }
    // Columns given as vectors.
    static Matrix from_columns(const std::vector<Vec<T>>& cols)
    {
        if (cols.empty())
            return Matrix();
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_)
                throw PreconditionError("column length mismatch");
            for (std::size_t i = 0; i < m.rows_; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<T>>& rows)
    {
        if (rows.empty())
            return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw PreconditionError("row length mismatch");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<T> row(std::size_t i) const { return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vec<T> col(std::size_t j) const
    {
        Vec<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))>
    {
        Matrix<decltype(f(std::declval<T>()))> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = f((*this)(i, j));
        return m;
    }

    T trace() const
    {
        T s(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            s += (*this)(i, i);
        return s;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y)
    {
        if (x.cols_ != y.rows_)
            throw PreconditionError("matrix product dimension mismatch");
        Matrix p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (is_zero(xik))
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    p(i, j) += xik * y(k, j);
            }
        return p;
    }
    friend Vec<T> operator*(const Matrix& x, const Vec<T>& v)
    {
        if (x.cols_ != v.size())
            throw PreconditionError("matrix-vector dimension mismatch");
        Vec<T> out(x.rows_, T(0));
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k)
                out[i] += x(i, k) * v[k];
        return out;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y)
    {
        Matrix s = x;
        for (std::size_t i = 0; i < s.data_.size(); ++i)
            s.data_[i] += y.data_[i];
        return s;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y)
    {
        Matrix s = x;
        for (std::size_t i = 0; i < s.data_.size(); ++i)
            s.data_[i] -= y.data_[i];
        return s;
    }
    Matrix operator-() const
    {
        Matrix m = *this;
        for (auto& x : m.data_)
            x = -x;
        return m;
    }
    friend Matrix operator*(const T& c, const Matrix& x)
    {
        Matrix m = x;
        for (auto& e : m.data_)
            e = c * e;
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> conj(const Matrix<T>& m)
{
    return m.map([](const T& x) { return T(conj(x)); });
}

template <class T>
Vec<T> conj(const Vec<T>& v)
{
    Vec<T> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(T(conj(x)));
    return out;
}

// Bilinear (or sesquilinear, through conj) pairing x^T G conj(y).
template <class T>
T pair(const Matrix<T>& gram, const Vec<T>& x, const Vec<T>& y)
{
    if (gram.rows() != x.size() || gram.cols() != y.size())
        throw PreconditionError("dimension mismatch in inner product");
    T s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!is_zero(gram(i, j)))
                s += x[i] * gram(i, j) * T(conj(y[j]));
    }
    return s;
}

template <class T>
Vec<T> scale(const T& c, const Vec<T>& v)
{
    Vec<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = c * v[i];
    return out;
}

template <class T>
Vec<T> add(const Vec<T>& x, const Vec<T>& y)
{
    Vec<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] + y[i];
    return out;
}

template <class T>
Vec<T> sub(const Vec<T>& x, const Vec<T>& y)
{
    Vec<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] - y[i];
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over a field F (Rational, QuadScalar, EisensteinQ, F3).

// Row-reduces in place; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        F inv = inverse(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            F f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m)
{
    return row_reduce(m).size();
}

template <class F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& m)
{
    if (!m.square())
        throw PreconditionError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto piv = row_reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1)
        return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m)
{
    auto inv = try_inverse(m);
    if (!inv)
        throw PreconditionError("singular matrix");
    return *inv;
}

template <class F>
F determinant(Matrix<F> m)
{
    if (!m.square())
        throw PreconditionError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c)))
            ++p;
        if (p == n)
            return F(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        F inv = inverse(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c)))
                continue;
            F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

// Basis of the right kernel {x : m x = 0}.
template <class F>
std::vector<Vec<F>> kernel(Matrix<F> m)
{
    auto piv = row_reduce(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv)
        is_piv[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        Vec<F> v(m.cols(), F(0));
        v[f] = F(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -m(r, f);
        basis.push_back(v);
    }
    return basis;
}

// Inertia (positive, negative, zero) of a symmetric form over an ordered field,
// by congruence diagonalization.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <class F>
Inertia inertia(Matrix<F> g)
{
    if (!g.square())
        throw PreconditionError("inertia of a non-square matrix");
    std::size_t n = g.rows();
    Inertia res;
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(g(k, k))) {
            // find a pivot; if some g(j,j) != 0 swap, else combine rows k, j
            std::size_t j = k + 1;
            while (j < n && is_zero(g(j, j)))
                ++j;
            if (j < n) {
                for (std::size_t t = 0; t < n; ++t)
                    std::swap(g(k, t), g(j, t));
                for (std::size_t t = 0; t < n; ++t)
                    std::swap(g(t, k), g(t, j));
            } else {
                j = k + 1;
                while (j < n && is_zero(g(k, j)))
                    ++j;
                if (j == n) {
                    ++res.zero;
                    continue;
                }
                // e_k <- e_k + e_j makes the diagonal 2 g(k,j) != 0
                for (std::size_t t = 0; t < n; ++t)
                    g(k, t) = g(k, t) + g(j, t);
                for (std::size_t t = 0; t < n; ++t)
                    g(t, k) = g(t, k) + g(t, j);
            }
        }
        F d = g(k, k);
        F inv = inverse(d);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(g(i, k)))
                continue;
            F f = g(i, k) * inv;
            for (std::size_t t = k; t < n; ++t)
                g(i, t) = g(i, t) - f * g(k, t);
            for (std::size_t t = k; t < n; ++t)
                g(t, i) = g(t, i) - f * g(t, k);
        }
        if (sign(d) > 0)
            ++res.positive;
        else
            ++res.negative;
    }
    return res;
}

// Unique linear map sending sources[i] to targets[i].  Any n linearly
// independent sources determine it; the remaining pairs must be consistent.
template <class F>
Matrix<F> solve_linear_map(const std::vector<Vec<F>>& sources, const std::vector<Vec<F>>& targets)
{
    if (sources.size() != targets.size() || sources.empty())
        throw PreconditionError("constraint lists must be nonempty and of equal length");
    std::size_t n = sources[0].size();
    std::vector<std::size_t> chosen;
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < sources.size() && chosen.size() < n; ++i) {
        rows.push_back(sources[i]);
        if (rank(Matrix<F>::from_rows(rows)) == rows.size())
            chosen.push_back(i);
        else
            rows.pop_back();
    }
    if (chosen.size() < n)
        throw PreconditionError("underdetermined constraint set");
    std::vector<Vec<F>> sc, tc;
    for (auto i : chosen) {
        sc.push_back(sources[i]);
        tc.push_back(targets[i]);
    }
    Matrix<F> m = Matrix<F>::from_columns(tc) * inverse(Matrix<F>::from_columns(sc));
    for (std::size_t i = 0; i < sources.size(); ++i)
        if (!(m * sources[i] == targets[i]))
            throw PreconditionError("inconsistent constraint set");
    return m;
}

// ---------------------------------------------------------------------------
// Integer matrices.

Integer determinant(const Matrix<Integer>& m);
// Z-basis of {x in Z^n : m x = 0}.
std::vector<Vec<Integer>> integer_kernel(const Matrix<Integer>& m);
// Diagonal of the Smith normal form (nonzero invariant factors, then zeros).
std::vector<Integer> smith_diagonal(Matrix<Integer> m);
Integer content(const Vec<Integer>& v);
bool is_primitive(const Vec<Integer>& v);

Matrix<Rational> to_rational(const Matrix<Integer>& m);
Vec<Rational> to_rational(const Vec<Integer>& v);

} // namespace cubic
