#pragma once

#include <string>
#include <vector>

#include "cubic/chamber.hpp"
#include "cubic/coxeter.hpp"

namespace cubic {

// 5x5 matrices over Q(sqrt3) acting on the Minkowski space of diag(-1,1,1,1,1).
using RealQuadMatrix = Matrix<QuadScalar>;

bool preserves_minkowski(const RealQuadMatrix& m);
bool is_integral(const RealQuadMatrix& m);
bool is_rational(const RealQuadMatrix& m);
// x -> x - 2 (x.s)/(s.s) s
RealQuadMatrix minkowski_reflection(const QVec& s);

// One of the eight chambers P_0..P_4, P_0', P_3', P_4' in the common model of H^4.
struct PlacedChamber {
    std::string name; // "P0", "P3'", ...
    int j = 0;
    bool primed = false;
    std::vector<int> labels;
    std::vector<QVec> roots; // s_jk, or S s_jk for primed chambers
    CoxeterDiagram diagram;  // the diagram of C_j, nodes r1, r2, ...

    const QVec& root(int k) const;
    std::string wall_name(int k) const; // "P37", "P46'"
};

// A pair of chamber walls spanning one hyperplane, with the chambers on
// opposite sides.
struct WallCoincidence {
    std::string first;
    std::string second;
};

struct PlacedChambers {
    std::vector<PlacedChamber> chambers;
    RealQuadMatrix S; // diagram automorphism of P_1 (and P_2)
    std::vector<WallCoincidence> coincidences;

    const PlacedChamber& chamber(const std::string& name) const;
};

// s_jk = T_j(r_jk), the primed copies, and the verified gluing coincidences.
// Throws VerificationError if a coincidence fails.
PlacedChambers build_chambers();

// Walls along which the eight chambers are glued.
const std::vector<std::string>& interior_walls();

// Unique linear map with the given (source, target) pairs; checks that it
// preserves the Minkowski form and has entries in Z[sqrt3].
RealQuadMatrix solve_side_pairing(const std::vector<std::pair<QVec, QVec>>& constraints);

struct GluedWall {
    std::string name; // A, B, C, D, E, E', D', C', B', A'
    QVec root;
    std::vector<std::string> provenance; // chamber walls lying in this wall
};

struct GluedPolyhedron {
    std::vector<GluedWall> walls;
    CoxeterDiagram diagram;
    RealQuadMatrix S;
    RealQuadMatrix tau;
    RealQuadMatrix tau_prime;

    const GluedWall& wall(const std::string& name) const;
    const QVec& root(const std::string& name) const { return wall(name).root; }
    RealQuadMatrix reflection(const std::string& name) const { return minkowski_reflection(root(name)); }
};

// Normalized roots of norm 1 (discriminant walls) or 2 (Eckardt walls),
// deduplicated; with Q's diagram, S, tau and tau' = S tau S.
GluedPolyhedron assemble_q();
GluedPolyhedron assemble_q(const PlacedChambers& placed);

// The isometry of E^{4,1} carrying C_37 to C_46:
// theta r_37 -> r_46 and r_35, r_32, r_33, r_36 -> r_45, r_41, r_42, r_43.
Matrix<Eisenstein> discriminant_wall_pairing();

struct PoincareCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PoincareReport {
    std::vector<PoincareCheck> checks;
    std::string completeness; // not computed; see the README
    bool passed() const;
};

PoincareReport verify_poincare(const GluedPolyhedron& q);

// Generators C, C', D, D', E, E', tau, tau', S.  Without S and its relations
// when with_s is false (the index-2 subgroup).
Presentation presentation_pgamma_r(const GluedPolyhedron& q, bool with_s = true);

struct Certificate {
    std::vector<std::string> generators;
    RealQuadMatrix gamma;
    QuadScalar tr_gamma;
    QuadScalar tr_gamma_sq;
    QuadScalar tr_ad;
    std::string trace_field;
    Inertia galois_form_signature;
    std::string verdict;
};

// gamma = (product of gens[word])^2.  Every generator must preserve the
// Minkowski form and have entries in Z[sqrt3].
Certificate trace_certificate(const std::vector<std::string>& names, const std::vector<RealQuadMatrix>& gens,
                              const std::vector<std::size_t>& word);
// gamma = (R_C R_D' R_E')^2 on the generators of the index-2 subgroup.
Certificate nonarithmeticity_certificate(const GluedPolyhedron& q);
Certificate nonarithmeticity_certificate();

struct VolumeBookkeeping {
    Rational chi_glued;     // 2 chi(C0) + chi(C1) + chi(C2) + 2 chi(C3) + 2 chi(C4)
    Rational chi_quotients; // 2 * sum chi(C_j) / delta_j
    double volume = 0;      // hyperbolic volume of Q
};

VolumeBookkeeping q_volume_bookkeeping();

} // namespace cubic
