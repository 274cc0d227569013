#pragma once

#include <map>
#include <vector>

#include "cubic/coxeter.hpp"

namespace cubic {

struct VinbergOptions {
    // Number of priority levels examined after the seed before giving up.
    std::size_t max_levels = 400;
    // Coordinate order used to pick the positive roots orthogonal to k: a root
    // is positive when its first nonzero coordinate, in this order, is
    // positive.  Empty means the default rule (see default_seed_order).
    std::vector<std::size_t> seed_order;
};

// Coordinates 1.. with the smallest diagonal entry in increasing index
// order, then the remaining coordinates in decreasing index order.
std::vector<std::size_t> default_seed_order(const ZForm& form);

struct VinbergState {
    ZForm form;
    ZVec k;
    std::vector<ZVec> accepted;
    std::vector<Rational> processed_priorities;
    // next untried value of k.r (as a positive multiple m) for each candidate norm
    std::map<Integer, Integer> cursor;
};

// The forms handled here are diagonal with a single negative entry in
// position 0, and k = (1, 0, ..., 0).
VinbergState make_state(const ZForm& form);

// Simple roots of the finite reflection group fixing k.
std::vector<ZVec> seed_batch(const ZForm& form, const ZVec& k, const VinbergOptions& opt = {});

// Processes the next priority level (k.r)^2 / r^2 and returns the accepted roots.
std::vector<ZVec> next_batch(VinbergState& state);

// Vinberg's criterion in hyperbolic dimension `dim`.
bool finite_volume_test(const CoxeterDiagram& d, int dim = 4);

struct VinbergResult {
    std::vector<ZVec> roots;
    CoxeterDiagram diagram;
    std::vector<Rational> priorities; // of the accepted roots, 0 for the seed
    std::size_t levels = 0;
};

VinbergResult run_vinberg(const ZForm& form, const VinbergOptions& opt = {});

// All roots of norm n with r0 = m (diagonal forms), sorted lexicographically.
std::vector<ZVec> roots_with(const ZForm& form, const Integer& m, const Integer& n);

} // namespace cubic
