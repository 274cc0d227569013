#include "cubic/matrix.hpp"

#include <algorithm>

namespace cubic {

Integer determinant(const Matrix<Integer>& m0)
{
    if (!m0.square())
        throw PreconditionError("determinant of a non-square matrix");
    // Bareiss fraction-free elimination
    Matrix<Integer> m = m0;
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(k, j));
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return s * m(n - 1, n - 1);
}

namespace {

// Unimodular row operations bringing the first `ncols` columns of m to row
// echelon form.  Returns the number of pivot rows.
std::size_t integer_echelon(Matrix<Integer>& m, std::size_t ncols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
        // repeatedly reduce column c below row r by Euclid
        for (;;) {
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i)
                if (m(i, c) != 0 && (best == m.rows() || abs(m(i, c)) < abs(m(best, c))))
                    best = i;
            if (best == m.rows())
                break;
            if (best != r)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    std::swap(m(best, j), m(r, j));
            bool done = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(i, j) -= q * m(r, j);
                if (m(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (m(r, c) != 0)
            ++r;
    }
    return r;
}

} // namespace

std::vector<Vec<Integer>> integer_kernel(const Matrix<Integer>& a)
{
    // Row-reduce [a^T | I]; rows whose a^T part vanishes carry a kernel basis.
    std::size_t n = a.cols();
    std::size_t m = a.rows();
    Matrix<Integer> aug(n, m + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            aug(i, j) = a(j, i);
        aug(i, m + i) = 1;
    }
    std::size_t r = integer_echelon(aug, m);
    std::vector<Vec<Integer>> basis;
    for (std::size_t i = r; i < n; ++i) {
        Vec<Integer> v(n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = aug(i, m + j);
        basis.push_back(v);
    }
    return basis;
}

std::vector<Integer> smith_diagonal(Matrix<Integer> m)
{
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t t = 0;
    while (t < std::min(rows, cols)) {
        // pick smallest nonzero entry in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pi == rows || abs(m(i, j)) < abs(m(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(m(t, j), m(pi, j));
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(m(i, t), m(i, pj));
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m(i, t) == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
            for (std::size_t j = t; j < cols; ++j)
                m(i, j) -= q * m(t, j);
            if (m(i, t) != 0)
                clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m(t, j) == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
            for (std::size_t i = t; i < rows; ++i)
                m(i, j) -= q * m(i, t);
            if (m(t, j) != 0)
                clean = false;
        }
        if (!clean)
            continue;
        // divisibility: if some entry is not a multiple of the pivot, fold its row in
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m(i, j) % m(t, t) != 0) {
                    for (std::size_t k = t; k < cols; ++k)
                        m(t, k) += m(i, k);
                    divides = false;
                    break;
                }
        if (divides)
            ++t;
    }
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i)
        d.push_back(abs(m(i, i)));
    return d;
}

Integer content(const Vec<Integer>& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return g;
}

bool is_primitive(const Vec<Integer>& v) { return content(v) == 1; }

Matrix<Rational> to_rational(const Matrix<Integer>& m)
{
    return m.map([](const Integer& x) { return Rational(x); });
}

Vec<Rational> to_rational(const Vec<Integer>& v)
{
    Vec<Rational> out;
    for (const auto& x : v)
        out.emplace_back(x);
    return out;
}

} // namespace cubic
