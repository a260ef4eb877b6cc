#pragma once

#include <cstdint>
#include <vector>

#include "symfb/groups.hpp"

namespace symfb {

/// A concrete lattice: rows of B are the basis vectors in Cartesian length
/// units. Fractional positions map to Cartesian as y = B^T x; integer
/// frequencies map as k_c = B^{-1} k_f (so that k_c . y = k_f . x).
class LatticeCell {
public:
    LatticeCell(int dim, const std::array<std::array<double, 3>, 3>& rows);

    /// Row-major flat list: 4 numbers for 2D, 9 for 3D.
    static LatticeCell from_flat(int dim, const std::vector<double>& values);

    int dim() const { return dim_; }
    double row(int i, int j) const { return rows_[i][j]; }
    double determinant() const { return det_; }

    Vec3d to_cartesian(const Vec3d& frac) const;     // B^T x
    double cart_norm(const Vec3d& frac_delta) const; // ||B^T d||

    /// Gram matrix G = B B^T (G_ij = b_i . b_j).
    double gram(int i, int j) const { return gram_[i][j]; }

    /// Squared Cartesian norm of an integer frequency: k^T (B B^T)^{-1} k.
    double freq_norm2(const Freq& k) const;

private:
    int dim_;
    std::array<std::array<double, 3>, 3> rows_{};
    std::array<std::array<double, 3>, 3> gram_{};
    std::array<std::array<double, 3>, 3> gram_inv_{};
    double det_ = 0;
};

/// Canonical unit cell for a lattice system (unit lengths, conventional
/// angles; monoclinic/triclinic get mildly skewed representatives).
LatticeCell reference_cell(Bravais b);

/// Checks that every element's linear part preserves the cell's Gram matrix
/// (A^T G A = G within tol), i.e. that the cell is consistent with the
/// group's Bravais class. Returns human-readable warnings; empty means
/// consistent.
std::vector<std::string> check_bravais(const CosetGroup& g, const LatticeCell& cell,
                                       double tol = 1e-9);

/// Deterministic pseudo-random generator used wherever sampled values must be
/// reproducible across platforms (std::uniform_real_distribution is
/// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // xorshift64*
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

private:
    std::uint64_t state_;
};

/// Random cell satisfying the class constraints, edge lengths drawn from
/// [min_len, max_len] (defaults 2..8 length units).
LatticeCell random_cell(int dim, Bravais b, Rng& rng, double min_len = 2.0,
                        double max_len = 8.0);

} // namespace symfb
