#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubic/involution.hpp"

namespace cubic {

// 5x5 matrix over F_3 packed two bits per entry, row-major.
using PackedF3 = std::uint64_t;

PackedF3 pack(const F3Matrix& m);
F3Matrix unpack(PackedF3 p);
PackedF3 multiply(PackedF3 x, PackedF3 y);
// Representative of {m, -m} whose first nonzero entry is 1.
PackedF3 projective(PackedF3 p);
int f3_determinant(PackedF3 p); // +-1 (or 0)

struct Fingerprint {
    std::size_t order = 0;
    std::map<int, std::size_t> element_orders;
    std::vector<std::size_t> derived_series; // |G|, |G'|, |G''|, ... until stable
    std::vector<Integer> abelianization;     // invariant factors of G/G'
};

// Finite subgroup of PO(V), elements stored projectively.
class GroupHandle {
public:
    GroupHandle() = default;
    static GroupHandle generate(const std::vector<F3Matrix>& gens, const F3QuadSpace& v = F3QuadSpace::standard());

    std::size_t order() const { return elements_.size(); }
    const std::vector<PackedF3>& elements() const { return elements_; }
    const std::vector<PackedF3>& generators() const { return gens_; }
    bool contains(PackedF3 x) const { return index_.count(projective(x)) > 0; }

    int element_order(PackedF3 x) const;
    // Normal closure of the commutators of the generators.
    GroupHandle derived_subgroup() const;
    Fingerprint fingerprint() const;

    // Orbits of the action on plus-points and on bases.
    std::vector<std::vector<int>> plus_point_orbits() const;
    std::vector<std::vector<int>> base_orbits() const;

private:
    static GroupHandle closure(std::vector<PackedF3> gens);
    void adjoin(PackedF3 x);

    std::vector<PackedF3> gens_;
    std::vector<PackedF3> elements_;
    std::unordered_map<PackedF3, std::uint32_t> index_;
};

GroupHandle generate_group(const std::vector<F3Matrix>& gens);

// Reflection of V in a non-isotropic vector r.
F3Matrix v_reflection(const F3Vec& r, const F3QuadSpace& v = F3QuadSpace::standard());

// Matches the fingerprint against a fixed list of groups; otherwise
// "unrecognized(order=N)".
std::string identify_group(const GroupHandle& g);

struct MonodromyReport {
    int j = 0;
    std::vector<F3Matrix> chamber_generators; // reflections (and automorphism) mod theta
    std::vector<F3Matrix> even_generators;    // generators of the det = 1 part
    GroupHandle group;
    std::string name;
};

// Image of the orientation-preserving part of PGamma_j^R in PO(V).
MonodromyReport monodromy_group(int j);

} // namespace cubic
