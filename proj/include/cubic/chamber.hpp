#pragma once

#include <vector>

#include "cubic/vinberg.hpp"

namespace cubic {

// Simple roots of W_j with the standard wall numbering r_1, r_2, ...
struct Chamber {
    int j = 0;
    ZForm form;
    std::vector<int> labels;  // labels[i] = k for root r_k
    std::vector<ZVec> roots;  // Z-coordinates, sorted by label
    CoxeterDiagram diagram;   // nodes named r1, r2, ...
    std::vector<Permutation> automorphisms;
    std::vector<Matrix<Integer>> automorphism_matrices; // Z-coordinates, same order

    const ZVec& root(int k) const;
    EVec lambda_root(int k) const { return to_lambda(j, root(k)); }
};

// Standard numbering of the walls of W_j, in Z-coordinates.
const std::vector<ZVec>& standard_roots(int j);

// Runs Vinberg's algorithm on psi_j and attaches the standard labels.  Throws
// VerificationError if the computed chamber differs from the standard one.
Chamber build_chamber(int j);

// Isometry of the form permuting the simple roots as perm prescribes.
Matrix<Integer> automorphism_matrix(const ZForm& form, const std::vector<ZVec>& roots, const Permutation& perm);

} // namespace cubic
