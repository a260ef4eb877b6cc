#pragma once

#include <complex>
#include <span>
#include <vector>

#include "symfb/constraint_graph.hpp"
#include "symfb/lattice.hpp"

namespace symfb {

using Complex = std::complex<double>;

/// e^{i 2 pi q}, exact for quarter-turn multiples.
Complex unit_phase(const Rational& q);

/// Symmetry-adapted basis for one group at one frequency radius: the ordered
/// raw-mode index plus the consistent orbits. Removed modes are kept for
/// export and diagnostics.
struct BasisSet {
    GroupSpec spec;
    CosetGroup group;
    int radius = 0;
    std::vector<Freq> mode_index;                       // enumerate_lattice order
    std::vector<Orbit> orbits;                          // consistent only
    std::vector<std::pair<Freq, RemovalReason>> removed; // lexicographic

    int dim() const { return spec.dim; }
    std::size_t mode_count() const { return mode_index.size(); }
    std::size_t orbit_count() const { return orbits.size(); }
};

/// Runs the whole pipeline: build graph, prune, find orbits, drop
/// inconsistent ones (recording their nodes as removed).
BasisSet build_basis(const CosetGroup& g, int radius,
                     std::size_t node_budget = kDefaultNodeBudget);
BasisSet build_basis(const GroupSpec& spec, int radius,
                     std::size_t node_budget = kDefaultNodeBudget);

/// Sparse routing matrix M mapping the raw mode vector v(x) to the
/// symmetry-adapted basis: (M v(x))_k = e_{O_k}(x). One nonzero per column
/// that belongs to a consistent orbit; entries have unit magnitude unless
/// normalize is set (then rows are scaled by 1/sqrt(|O_k|)).
struct RoutingMatrix {
    struct Entry {
        int row = 0;
        int col = 0;
        Complex value;
    };
    int rows = 0;
    int cols = 0;
    std::vector<Entry> entries; // sorted row-major
};

RoutingMatrix routing_matrix(const BasisSet& basis, bool normalize = false);

/// Raw Fourier modes [v(x)]_k = e^{i 2 pi omega_k . x}.
std::vector<Complex> evaluate_modes(int dim, std::span<const Freq> modes, const Vec3d& x);

/// Invariant encoding e_G(x) by direct per-orbit summation (the reference
/// code path; multiplying the routing matrix into evaluate_modes must agree).
std::vector<Complex> evaluate_encoding(const BasisSet& basis, const Vec3d& x,
                                       bool normalize = false);

/// Dense mat-vec with the sparse routing matrix.
std::vector<Complex> apply_routing(const RoutingMatrix& m, std::span<const Complex> v);

/// Laplace eigenvalue of the orbit's basis function: 4 pi^2 ||xi||^2 with xi
/// in integer coordinates, or with the Cartesian frequency norm when a cell
/// is given.
double laplace_eigenvalue(const Orbit& orbit);
double laplace_eigenvalue(const Orbit& orbit, const LatticeCell& cell);

/// Fourier coefficients of the group-symmetrized Gaussian density centered on
/// the orbit of x:
///   rho[k] = (2 pi)^{d/2} sigma^d / |det B| * e^{-2 pi^2 sigma^2 ||k_c||^2}
///            * sum_{(A,t)} e^{-i 2 pi k . (A x + t)}
/// over all k in the radius-R box, with k_c the Cartesian frequency.
struct GaussianOrbitDensity {
    int dim = 0;
    Vec3d x{};
    double sigma = 0;
    std::vector<Freq> modes; // enumerate_lattice order
    std::vector<Complex> coefficients;

    /// Partial-sum reconstruction sum_k rho[k] e^{i 2 pi k . y} (real part;
    /// the imaginary part vanishes by conjugate symmetry).
    double evaluate(const Vec3d& y) const;
};

GaussianOrbitDensity gaussian_orbit_coefficients(const CosetGroup& g, const Vec3d& x,
                                                 double sigma, const LatticeCell& cell,
                                                 int radius);

} // namespace symfb
