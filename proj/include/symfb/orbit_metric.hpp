#pragma once

#include <vector>

#include "symfb/lattice.hpp"

namespace symfb {

struct OrbitDistanceQuery {
    const CosetGroup* group = nullptr;
    const LatticeCell* cell = nullptr;
    Vec3d x1{};
    Vec3d x2{};
    int shell = 2; // translation-search halfwidth; 2 covers conventional cells
};

/// Ground-truth orbit distance by exhaustion:
///   min over phi in the coset group and integer translations l with
///   ||l||_inf <= shell of ||B^T (phi(x1) + l - x2)||_2.
/// The two-sided minimum over both orbits collapses to this one-sided form
/// because the group elements act as Cartesian isometries on any cell
/// consistent with the Bravais class. Inputs are reduced mod 1 first.
/// Bravais inconsistencies and shell < 1 are reported through `warnings`
/// (when given), not raised as errors.
double orbit_distance(const OrbitDistanceQuery& q,
                      std::vector<std::string>* warnings = nullptr);

double orbit_distance(const CosetGroup& g, const LatticeCell& cell, const Vec3d& x1,
                      const Vec3d& x2, int shell = 2,
                      std::vector<std::string>* warnings = nullptr);

/// Deterministic canonicalization: the lexicographically smallest image of x
/// in [0,1)^dim over all group elements. Two points get equal representatives
/// (within float noise) iff they lie on the same orbit. `eps` is the
/// coordinate tolerance used for the lexicographic tie-breaks.
Vec3d canonical_representative(const CosetGroup& g, const Vec3d& x, double eps = 1e-9);

/// p6m only: maps x to the Cartesian coordinates of its orbit's unique point
/// inside the fundamental triangle with fractional vertices (0,0), (1/2,0),
/// (2/3,1/3). On a hexagonal cell this fold is an isometry of the orbit
/// space: ||fold(x1) - fold(x2)|| equals the orbit distance.
Vec3d fold_p6m(const CosetGroup& g, const LatticeCell& cell, const Vec3d& x);

} // namespace symfb
