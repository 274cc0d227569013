#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic/lattice.hpp"

namespace cubic {

// Dihedral angle between two walls, read off from (r.s)^2 / (r^2 s^2).
enum class Bond { Orthogonal, Pi3, Pi4, Pi6, Parallel, Ultraparallel };

// Coxeter exponent m for angle pi/m; 0 for parallel and ultraparallel walls.
int coxeter_m(Bond b);
std::string to_string(Bond b);

Bond angle_label_from_cos2(const Rational& c);
Bond angle_label_from_cos2(const QuadScalar& c);
Bond angle_label(const ZForm& form, const ZVec& r, const ZVec& s);
// Minkowski form diag(-1,1,1,1,1) over Q(sqrt3).
QuadScalar minkowski_product(const QVec& x, const QVec& y);
Bond angle_label(const QVec& r, const QVec& s);

struct CoxeterDiagram {
    std::vector<std::string> names;
    std::vector<Rational> norms;
    std::vector<std::vector<Bond>> bonds;

    std::size_t size() const { return names.size(); }
    Bond bond(std::size_t i, std::size_t j) const { return bonds[i][j]; }
    std::size_t index_of(const std::string& name) const;
    // Induced subdiagram on the given nodes, in the given order.
    CoxeterDiagram induced(const std::vector<std::size_t>& nodes) const;
    void add_node(const std::string& name, const Rational& norm);
    void set_bond(std::size_t i, std::size_t j, Bond b);
};

CoxeterDiagram diagram_from_roots(const ZForm& form, const std::vector<ZVec>& roots,
                                  const std::vector<std::string>& names);
CoxeterDiagram diagram_from_roots(const std::vector<QVec>& roots, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Finite and affine types.

struct Component {
    char family = 'A'; // A B D E F G H I
    int rank = 0;      // number of nodes for finite types, nodes - 1 for affine
    int m = 0;         // dihedral order for family I
    bool affine = false;

    std::string name() const;
    friend auto operator<=>(const Component&, const Component&) = default;
};

using FiniteType = std::vector<Component>;

enum class SubdiagramKind { Elliptic, Parabolic, Other };

struct SubdiagramInfo {
    SubdiagramKind kind = SubdiagramKind::Other;
    std::vector<Component> components;
    int rank = 0;
};

// Type of a connected diagram, as a spherical or affine component.
std::optional<Component> classify_connected(const CoxeterDiagram& d);
SubdiagramInfo classify_subdiagram(const CoxeterDiagram& d, std::uint32_t mask);
// Indexed by node mask; diagrams with at most 20 nodes.
std::vector<SubdiagramInfo> classify_all_subdiagrams(const CoxeterDiagram& d);

std::optional<FiniteType> finite_type(const CoxeterDiagram& d);
std::string to_string(const FiniteType& t);
Integer weyl_order(const Component& c);
Integer weyl_order(const FiniteType& t);

struct EulerCharacteristic {
    Rational chi;
    // by_size[k] = sum over elliptic subdiagrams with k nodes of (-1)^k / |W|;
    // by_size[0] = 1.
    std::vector<Rational> by_size;
};

EulerCharacteristic euler_characteristic(const CoxeterDiagram& d);
// Volume of a hyperbolic n-orbifold (n even) with Euler characteristic chi.
double volume_from_chi(const Rational& chi, int n = 4);

// ---------------------------------------------------------------------------
// Walls and presentations.

enum class WallKind { Discriminant, Eckardt };

struct WallClassification {
    std::vector<WallKind> kinds;
    std::vector<std::pair<std::size_t, std::size_t>> triple_bonds;

    std::size_t discriminant_count() const;
};

// Discriminant iff the root norm is 1 or 3; triple bonds are flagged.
WallClassification classify_walls(const CoxeterDiagram& d);
WallClassification classify_walls(const ZForm& form, const std::vector<ZVec>& roots);

// A word is a product of generator powers.
using Word = std::vector<std::pair<std::size_t, int>>;

struct Relation {
    Word lhs;
    Word rhs; // empty means the identity
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    std::size_t add_generator(const std::string& name);
    std::string to_string(const Relation& r) const;
};

struct Abelianization {
    int free_rank = 0;
    std::vector<Integer> torsion; // invariant factors > 1
    std::string to_string() const;
};

Abelianization abelianization(const Presentation& p);

Presentation coxeter_presentation(const CoxeterDiagram& d);
// Coxeter presentation on the Eckardt walls, without relations coming from
// triple bonds, parallel or ultraparallel pairs.
Presentation pi1_presentation(const CoxeterDiagram& d, const WallClassification& walls);
// Adds an involution a with a s a^-1 = perm(s) for each generator s.  The
// permutation acts on diagram nodes; generators are matched by name.
Presentation extend_by_automorphism(const Presentation& p, const CoxeterDiagram& d,
                                    const std::vector<std::size_t>& perm, const std::string& name = "a");

// ---------------------------------------------------------------------------
// Symmetries.

using Permutation = std::vector<std::size_t>;

// Bijections f with color1[i] == color2[f(i)] and bond(i,j) == bond(f(i),f(j)).
std::vector<Permutation> diagram_isomorphisms(const CoxeterDiagram& a, const std::vector<int>& color_a,
                                              const CoxeterDiagram& b, const std::vector<int>& color_b);
std::vector<int> norm_colors(const CoxeterDiagram& d);
std::vector<int> wall_colors(const CoxeterDiagram& d);
// Node permutations preserving norms and bonds, identity first.
std::vector<Permutation> diagram_automorphisms(const CoxeterDiagram& d);
bool is_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b);

// Graphviz rendering: node shape encodes the norm, edge style the angle.
std::string to_dot(const CoxeterDiagram& d, const std::string& title);

} // namespace cubic
