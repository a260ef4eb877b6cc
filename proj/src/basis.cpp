#include "symfb/basis.hpp"

#include <algorithm>
#include <cmath>

namespace symfb {

Complex unit_phase(const Rational& q) {
    Rational r = q.mod1();
    if (r.den() == 1) return {1.0, 0.0};
    if (r.den() == 2) return {-1.0, 0.0};
    if (r.den() == 4) return r.num() == 1 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    double angle = 2.0 * M_PI * r.to_double();
    return {std::cos(angle), std::sin(angle)};
}

BasisSet build_basis(const CosetGroup& g, int radius, std::size_t node_budget) {
    ConstraintGraph graph = prune_inconsistent(build_graph(g, radius, node_budget));
    std::vector<Orbit> orbits = find_orbits(graph);

    BasisSet basis;
    basis.spec = g.spec;
    basis.group = g;
    basis.radius = radius;
    basis.mode_index = graph.nodes;
    for (Orbit& o : orbits) {
        if (o.consistent) {
            basis.orbits.push_back(std::move(o));
        } else {
            for (const OrbitMember& m : o.members)
                graph.removed[graph.index_of(m.omega)] = RemovalReason::InconsistentOrbit;
        }
    }
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        if (graph.removed[i])
            basis.removed.emplace_back(graph.nodes[i], *graph.removed[i]);
    return basis;
}

BasisSet build_basis(const GroupSpec& spec, int radius, std::size_t node_budget) {
    return build_basis(expand_group(spec), radius, node_budget);
}

RoutingMatrix routing_matrix(const BasisSet& basis, bool normalize) {
    RoutingMatrix m;
    m.rows = static_cast<int>(basis.orbits.size());
    m.cols = static_cast<int>(basis.mode_index.size());

    // column index of a frequency in the box enumeration
    int radius = basis.radius;
    int side = 2 * radius + 1;
    auto col_of = [&](const Freq& w) {
        int idx = 0;
        for (int i = 0; i < basis.dim(); ++i) idx = idx * side + (w[i] + radius);
        return idx;
    };

    for (int k = 0; k < m.rows; ++k) {
        const Orbit& orbit = basis.orbits[k];
        double scale = normalize ? 1.0 / std::sqrt(static_cast<double>(orbit.members.size()))
                                 : 1.0;
        for (const OrbitMember& member : orbit.members)
            m.entries.push_back({k, col_of(member.omega), scale * unit_phase(member.exponent)});
    }
    // members are stored lexicographically, which matches column order per row
    return m;
}

std::vector<Complex> evaluate_modes(int dim, std::span<const Freq> modes, const Vec3d& x) {
    // Per-axis power tables: e^{i 2 pi w.x} = prod_j table_j[w_j].
    int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (const Freq& w : modes)
        for (int j = 0; j < dim; ++j) {
            lo[j] = std::min(lo[j], w[j]);
            hi[j] = std::max(hi[j], w[j]);
        }
    std::vector<Complex> table[3];
    for (int j = 0; j < dim; ++j) {
        table[j].resize(hi[j] - lo[j] + 1);
        for (int w = lo[j]; w <= hi[j]; ++w) {
            double angle = 2.0 * M_PI * w * x[j];
            table[j][w - lo[j]] = {std::cos(angle), std::sin(angle)};
        }
    }
    std::vector<Complex> v;
    v.reserve(modes.size());
    for (const Freq& w : modes) {
        Complex z = table[0][w[0] - lo[0]];
        for (int j = 1; j < dim; ++j) z *= table[j][w[j] - lo[j]];
        v.push_back(z);
    }
    return v;
}

std::vector<Complex> evaluate_encoding(const BasisSet& basis, const Vec3d& x,
                                       bool normalize) {
    std::vector<Complex> out;
    out.reserve(basis.orbits.size());
    for (const Orbit& orbit : basis.orbits) {
        Complex sum{0.0, 0.0};
        for (const OrbitMember& m : orbit.members) {
            double angle = 0;
            for (int j = 0; j < basis.dim(); ++j) angle += m.omega[j] * x[j];
            angle *= 2.0 * M_PI;
            sum += unit_phase(m.exponent) * Complex{std::cos(angle), std::sin(angle)};
        }
        if (normalize) sum /= std::sqrt(static_cast<double>(orbit.members.size()));
        out.push_back(sum);
    }
    return out;
}

std::vector<Complex> apply_routing(const RoutingMatrix& m, std::span<const Complex> v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw Error("apply_routing: mode vector length mismatch");
    std::vector<Complex> out(m.rows, Complex{0.0, 0.0});
    for (const RoutingMatrix::Entry& e : m.entries) out[e.row] += e.value * v[e.col];
    return out;
}

double laplace_eigenvalue(const Orbit& orbit) {
    return 4.0 * M_PI * M_PI * static_cast<double>(orbit.norm2);
}

double laplace_eigenvalue(const Orbit& orbit, const LatticeCell& cell) {
    return 4.0 * M_PI * M_PI * cell.freq_norm2(orbit.reference);
}

double GaussianOrbitDensity::evaluate(const Vec3d& y) const {
    double sum = 0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        double angle = 0;
        for (int j = 0; j < dim; ++j) angle += modes[i][j] * y[j];
        angle *= 2.0 * M_PI;
        sum += coefficients[i].real() * std::cos(angle) -
               coefficients[i].imag() * std::sin(angle);
    }
    return sum;
}

GaussianOrbitDensity gaussian_orbit_coefficients(const CosetGroup& g, const Vec3d& x,
                                                 double sigma, const LatticeCell& cell,
                                                 int radius) {
    if (sigma <= 0) throw Error("gaussian_orbit_coefficients: sigma must be > 0");
    if (cell.dim() != g.dim())
        throw Error("gaussian_orbit_coefficients: cell/group dimension mismatch");
    int dim = g.dim();

    GaussianOrbitDensity density;
    density.dim = dim;
    density.x = x;
    density.sigma = sigma;
    density.modes = enumerate_lattice(dim, radius);
    density.coefficients.reserve(density.modes.size());

    std::vector<Vec3d> images;
    images.reserve(g.elements.size());
    for (const SymOp& op : g.elements) images.push_back(act_on_point(op, x));

    double prefactor = std::pow(2.0 * M_PI, dim / 2.0) * std::pow(sigma, dim) /
                       std::abs(cell.determinant());
    for (const Freq& k : density.modes) {
        Complex group_sum{0.0, 0.0};
        for (const Vec3d& img : images) {
            double angle = 0;
            for (int j = 0; j < dim; ++j) angle += k[j] * img[j];
            angle *= -2.0 * M_PI;
            group_sum += Complex{std::cos(angle), std::sin(angle)};
        }
        double decay = std::exp(-2.0 * M_PI * M_PI * sigma * sigma * cell.freq_norm2(k));
        density.coefficients.push_back(prefactor * decay * group_sum);
    }
    return density;
}

} // namespace symfb
