#include "symfb/lattice.hpp"

#include <cmath>

namespace symfb {

namespace {

double det_of(int dim, const std::array<std::array<double, 3>, 3>& m) {
    if (dim == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<std::array<double, 3>, 3> invert(int dim,
                                            const std::array<std::array<double, 3>, 3>& m,
                                            double det) {
    std::array<std::array<double, 3>, 3> inv{};
    if (dim == 2) {
        inv[0][0] = m[1][1] / det;
        inv[0][1] = -m[0][1] / det;
        inv[1][0] = -m[1][0] / det;
        inv[1][1] = m[0][0] / det;
    } else {
        inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
        inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
        inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
        inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
        inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
        inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
        inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
        inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
        inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    }
    return inv;
}

} // namespace

LatticeCell::LatticeCell(int dim, const std::array<std::array<double, 3>, 3>& rows)
    : dim_(dim), rows_(rows) {
    if (dim != 2 && dim != 3) throw Error("LatticeCell: dimension must be 2 or 3");
    det_ = det_of(dim, rows_);
    if (std::abs(det_) < 1e-300) throw Error("LatticeCell: singular basis");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double s = 0;
            for (int k = 0; k < dim; ++k) s += rows_[i][k] * rows_[j][k];
            gram_[i][j] = s;
        }
    gram_inv_ = invert(dim, gram_, det_of(dim, gram_));
}

LatticeCell LatticeCell::from_flat(int dim, const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != dim * dim)
        throw Error("lattice: expected " + std::to_string(dim * dim) + " numbers");
    std::array<std::array<double, 3>, 3> rows{};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) rows[i][j] = values[i * dim + j];
    return LatticeCell(dim, rows);
}

Vec3d LatticeCell::to_cartesian(const Vec3d& frac) const {
    Vec3d y{};
    for (int j = 0; j < dim_; ++j) {
        double s = 0;
        for (int i = 0; i < dim_; ++i) s += rows_[i][j] * frac[i];
        y[j] = s;
    }
    return y;
}

double LatticeCell::cart_norm(const Vec3d& d) const {
    double s = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += d[i] * gram_[i][j] * d[j];
    return std::sqrt(s > 0 ? s : 0);
}

double LatticeCell::freq_norm2(const Freq& k) const {
    double s = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += k[i] * gram_inv_[i][j] * k[j];
    return s;
}

LatticeCell reference_cell(Bravais b) {
    const double h = std::sqrt(3.0) / 2.0;
    switch (b) {
    case Bravais::Oblique:
    case Bravais::Rectangular:
    case Bravais::Square:
        return LatticeCell(2, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}});
    case Bravais::Hexagonal2D:
        return LatticeCell(2, {{{1, 0, 0}, {-0.5, h, 0}, {0, 0, 0}}});
    case Bravais::Triclinic:
    case Bravais::Monoclinic:
    case Bravais::Orthorhombic:
    case Bravais::Tetragonal:
    case Bravais::Cubic:
        return LatticeCell(3, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
    case Bravais::Hexagonal:
        return LatticeCell(3, {{{1, 0, 0}, {-0.5, h, 0}, {0, 0, 1}}});
    }
    throw Error("reference_cell: unknown class");
}

std::vector<std::string> check_bravais(const CosetGroup& g, const LatticeCell& cell,
                                       double tol) {
    std::vector<std::string> warnings;
    if (cell.dim() != g.dim()) {
        warnings.push_back("cell dimension does not match group dimension");
        return warnings;
    }
    int dim = g.dim();
    double scale = 0;
    for (int i = 0; i < dim; ++i) scale = std::max(scale, std::abs(cell.gram(i, i)));
    for (const SymOp& op : g.elements) {
        // (A^T G A)_{ij} vs G_{ij}
        double worst = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                double s = 0;
                for (int k = 0; k < dim; ++k)
                    for (int l = 0; l < dim; ++l)
                        s += op.linear()[k][i] * cell.gram(k, l) * op.linear()[l][j];
                worst = std::max(worst, std::abs(s - cell.gram(i, j)));
            }
        if (worst > tol * scale) {
            warnings.push_back("cell is not invariant under '" + format_symop(op) +
                               "' (Gram deviation " + std::to_string(worst) + ")");
        }
    }
    return warnings;
}

LatticeCell random_cell(int dim, Bravais b, Rng& rng, double min_len, double max_len) {
    auto len = [&] { return rng.uniform(min_len, max_len); };
    std::array<std::array<double, 3>, 3> rows{};
    const double h = std::sqrt(3.0) / 2.0;
    switch (b) {
    case Bravais::Oblique: {
        double a = len(), c = len();
        double ang = rng.uniform(70.0, 110.0) * M_PI / 180.0;
        rows = {{{a, 0, 0}, {c * std::cos(ang), c * std::sin(ang), 0}, {0, 0, 0}}};
        break;
    }
    case Bravais::Rectangular:
        rows = {{{len(), 0, 0}, {0, len(), 0}, {0, 0, 0}}};
        break;
    case Bravais::Square: {
        double a = len();
        rows = {{{a, 0, 0}, {0, a, 0}, {0, 0, 0}}};
        break;
    }
    case Bravais::Hexagonal2D: {
        double a = len();
        rows = {{{a, 0, 0}, {-0.5 * a, h * a, 0}, {0, 0, 0}}};
        break;
    }
    case Bravais::Triclinic: {
        // three independent rows, re-drawn until comfortably non-singular
        for (;;) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) rows[i][j] = rng.uniform(-max_len, max_len);
            LatticeCell trial(3, rows);
            if (std::abs(trial.determinant()) > 0.2 * max_len * max_len * max_len) break;
        }
        break;
    }
    case Bravais::Monoclinic: {
        double a = len(), bb = len(), c = len();
        double beta = rng.uniform(95.0, 125.0) * M_PI / 180.0; // unique axis b
        rows = {{{a, 0, 0}, {0, bb, 0}, {c * std::cos(beta), 0, c * std::sin(beta)}}};
        break;
    }
    case Bravais::Orthorhombic:
        rows = {{{len(), 0, 0}, {0, len(), 0}, {0, 0, len()}}};
        break;
    case Bravais::Tetragonal: {
        double a = len();
        rows = {{{a, 0, 0}, {0, a, 0}, {0, 0, len()}}};
        break;
    }
    case Bravais::Hexagonal: {
        double a = len();
        rows = {{{a, 0, 0}, {-0.5 * a, h * a, 0}, {0, 0, len()}}};
        break;
    }
    case Bravais::Cubic: {
        double a = len();
        rows = {{{a, 0, 0}, {0, a, 0}, {0, 0, a}}};
        break;
    }
    }
    return LatticeCell(dim, rows);
}

} // namespace symfb
