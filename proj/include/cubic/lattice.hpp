#pragma once

#include <string>
#include <vector>

#include "cubic/matrix.hpp"

namespace cubic {

using ZVec = Vec<Integer>;
using EVec = Vec<Eisenstein>;
using QVec = Vec<QuadScalar>;

// Integral symmetric bilinear form on Z^n.
struct ZForm {
    Matrix<Integer> gram;

    ZForm() = default;
    explicit ZForm(Matrix<Integer> g);

    std::size_t dimension() const { return gram.rows(); }
    bool is_diagonal() const;
    friend bool operator==(const ZForm& x, const ZForm& y) { return x.gram == y.gram; }
};

// diag(-1, 1 x (4-j), 3 x j)
ZForm psi(int j);
// Recognizes psi0..psi4; throws PreconditionError otherwise.
ZForm form_by_name(const std::string& name);

Integer inner_product(const ZForm& form, const ZVec& x, const ZVec& y);
Integer norm(const ZForm& form, const ZVec& x);

Integer determinant(const ZForm& form);
Inertia signature(const ZForm& form);

// x.v = 0 mod 3 for every v in Z^n.
bool in_three_dual(const ZForm& form, const ZVec& x);

// Primitive, positive norm n, and 2(x.v)/n integral for all v: the reflection
// in x preserves the lattice.  For the forms psi_j this is the same as norm in
// {1,2}, or norm in {3,6} with x in 3 times the dual.
bool is_root(const ZForm& form, const ZVec& x);

ZVec reflect(const ZForm& form, const ZVec& r, const ZVec& x);
Matrix<Integer> reflection_matrix(const ZForm& form, const ZVec& r);

// Positive norms a root of a diagonal form can have: the divisors of
// 2 lcm |g_ii|.
std::vector<Integer> candidate_root_norms(const ZForm& form);

// ---------------------------------------------------------------------------
// The Hermitian lattice E^{4,1}, h(x,y) = -x0 conj(y0) + x1 conj(y1) + ... .

Matrix<Eisenstein> hermitian_gram();
Eisenstein hermitian_product(const EVec& x, const EVec& y);
Integer hermitian_norm(const EVec& x);

// Greatest common divisor in E, normalized up to units by a fixed rule.
Eisenstein eisenstein_gcd(Eisenstein x, Eisenstein y);
bool is_primitive(const EVec& v);

// Coordinates for the fixed lattice of chi_j inside E^5: the last j
// coordinates get multiplied by theta.
EVec to_lambda(int j, const ZVec& y);
ZVec from_lambda(int j, const EVec& x); // throws if x is not in the image
// The same embedding with theta replaced by -sqrt(3).
QVec to_real(int j, const ZVec& y);

// D M D^{-1} for D = diag(1, .., theta, ..): the E-linear extension of an
// isometry of the Z-lattice.  Throws if the result is not integral.
Matrix<Eisenstein> lambda_lift(int j, const Matrix<Integer>& m);

// Vector of h-norm 1 or 2 attached to a root of psi_j: the Lambda vector for
// norms 1, 2 and that vector divided by theta for norms 3, 6.
EVec primitive_lambda_root(int j, const ZVec& r);

std::string to_string(const ZVec& v);

} // namespace cubic
