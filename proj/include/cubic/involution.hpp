#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "cubic/lattice.hpp"

namespace cubic {

using F3Vec = Vec<F3>;
using F3Matrix = Matrix<F3>;

F3Matrix reduce_mod_theta(const Matrix<Eisenstein>& m);
F3Vec reduce_mod_theta(const EVec& v);

// x -> matrix * conj(x) on E^5.
struct AntiInvolution {
    Matrix<Eisenstein> matrix;

    EVec apply(const EVec& x) const;
    // matrix * conj(matrix): the linear map a o a
    Matrix<Eisenstein> square() const;
    AntiInvolution negated() const { return AntiInvolution{-matrix}; }
};

// chi_j: conjugate every coordinate and negate the last j.
AntiInvolution standard_chi(int j);

// g o a o g^-1 for g in the unitary group of h.
AntiInvolution conjugate(const AntiInvolution& a, const Matrix<Eisenstein>& g);

// Checks h-preservation (M^T J conj(M) = J) and M conj(M) = +-I.
void validate(const AntiInvolution& a);

struct InvolutionClass {
    int j = 0;
    int sign = 1; // +1 for chi_j, -1 for -chi_j

    std::string name() const;
    friend bool operator==(const InvolutionClass&, const InvolutionClass&) = default;
};

struct EigenInvariants {
    int fixed_dim = 0;
    int fixed_det = 1; // +-1
    int negated_dim = 0;
    int negated_det = 1;
};

// ---------------------------------------------------------------------------
// V = E^5 / theta E^5 with q = h mod theta.

struct F3QuadSpace {
    F3Matrix q;

    static F3QuadSpace standard();
    F3 product(const F3Vec& x, const F3Vec& y) const;
    bool preserves(const F3Matrix& g) const;
};

// Square class (+-1) of the Gram determinant of q on span(basis); 1 for the empty span.
int determinant_class(const F3QuadSpace& v, const std::vector<F3Vec>& basis);

EigenInvariants eigen_invariants(const F3Matrix& action, const F3QuadSpace& v = F3QuadSpace::standard());
InvolutionClass classify_anti_involution(const AntiInvolution& a);

// Projective points <v> of PV with q(v) = -1, first nonzero entry normalized to 1.
const std::vector<F3Vec>& plus_points();
// Sets of five mutually orthogonal plus-points, as sorted indices into plus_points().
const std::vector<std::array<int, 5>>& bases();

int plus_point_index(const F3Vec& v); // projective lookup, -1 if not a plus-point
// Image of each plus-point under g (g must preserve q).
std::vector<int> plus_point_permutation(const F3Matrix& g);
std::vector<int> base_permutation(const F3Matrix& g);

struct LinesTritangents {
    int lines = 0;
    int tritangents = 0;
};

LinesTritangents count_fixed_lines_tritangents(const F3Matrix& action);
// For class (j, +): the V(S)-action is the negative of chi_j mod theta.
LinesTritangents count_real_lines_tritangents(const InvolutionClass& cls);

// ---------------------------------------------------------------------------

struct FixedLattice {
    std::vector<EVec> basis;
    ZForm gram;
};

// Lattice {x : a(x) = x} with the restriction of h.  Diagonal Gram matrices are
// sorted so that the standard chi_j gives psi_j.
FixedLattice fixed_lattice(const AntiInvolution& a);

struct LatticeInvariants {
    Integer determinant;
    Inertia signature;
    int three_rank = 0; // elementary divisors equal to 3

    friend bool operator==(const LatticeInvariants&, const LatticeInvariants&) = default;
};

LatticeInvariants lattice_invariants(const ZForm& f);

struct DiscriminantComponents {
    std::vector<ZVec> norm13_roots;               // one per mirror
    std::vector<std::vector<ZVec>> g2_systems;    // 12 roots each, sorted
};

DiscriminantComponents discriminant_components(const ZForm& form, int bound = 3);

// ---------------------------------------------------------------------------
// Pseudorandom elements of the unitary group of E^{4,1}.

class UnitaryGenerator {
public:
    explicit UnitaryGenerator(std::uint32_t seed);
    Matrix<Eisenstein> next(int length = 8);
    static bool is_unitary(const Matrix<Eisenstein>& g);

private:
    std::mt19937 rng_;
    std::vector<EVec> norm1_, norm2_;
};

Matrix<Eisenstein> unitary_inverse(const Matrix<Eisenstein>& g);

} // namespace cubic
