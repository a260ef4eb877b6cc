#include "symfb/orbit_metric.hpp"

#include <cmath>
#include <limits>

namespace symfb {

namespace {

double wrap01(double v) {
    double w = v - std::floor(v);
    return w < 1.0 ? w : 0.0; // floor can leave exactly 1.0 for tiny negatives
}

Vec3d wrap01(int dim, const Vec3d& x) {
    Vec3d y{};
    for (int i = 0; i < dim; ++i) y[i] = wrap01(x[i]);
    return y;
}

} // namespace

double orbit_distance(const OrbitDistanceQuery& q, std::vector<std::string>* warnings) {
    const CosetGroup& g = *q.group;
    const LatticeCell& cell = *q.cell;
    int dim = g.dim();
    if (cell.dim() != dim) throw Error("orbit_distance: cell/group dimension mismatch");
    if (warnings) {
        auto issues = check_bravais(g, cell, 1e-9);
        warnings->insert(warnings->end(), issues.begin(), issues.end());
        if (q.shell < 1)
            warnings->push_back("shell < 1 may miss the true minimum");
    }

    Vec3d x1 = wrap01(dim, q.x1);
    Vec3d x2 = wrap01(dim, q.x2);

    double best = std::numeric_limits<double>::infinity();
    Vec3d d{};
    for (const SymOp& op : g.elements) {
        Vec3d img = wrap01(dim, act_on_point(op, x1));
        int s = q.shell;
        for (int a = -s; a <= s; ++a) {
            d[0] = img[0] + a - x2[0];
            for (int b = -s; b <= s; ++b) {
                d[1] = img[1] + b - x2[1];
                if (dim == 2) {
                    best = std::min(best, cell.cart_norm(d));
                } else {
                    for (int c = -s; c <= s; ++c) {
                        d[2] = img[2] + c - x2[2];
                        best = std::min(best, cell.cart_norm(d));
                    }
                }
            }
        }
    }
    return best;
}

double orbit_distance(const CosetGroup& g, const LatticeCell& cell, const Vec3d& x1,
                      const Vec3d& x2, int shell, std::vector<std::string>* warnings) {
    OrbitDistanceQuery q;
    q.group = &g;
    q.cell = &cell;
    q.x1 = x1;
    q.x2 = x2;
    q.shell = shell;
    return orbit_distance(q, warnings);
}

Vec3d canonical_representative(const CosetGroup& g, const Vec3d& x, double eps) {
    int dim = g.dim();
    Vec3d best{};
    bool first = true;
    for (const SymOp& op : g.elements) {
        Vec3d img = wrap01(dim, act_on_point(op, x));
        if (first) {
            best = img;
            first = false;
            continue;
        }
        for (int i = 0; i < dim; ++i) {
            if (img[i] < best[i] - eps) {
                best = img;
                break;
            }
            if (img[i] > best[i] + eps) break;
        }
    }
    return best;
}

Vec3d fold_p6m(const CosetGroup& g, const LatticeCell& cell, const Vec3d& x) {
    if (g.dim() != 2 || g.order() != 12)
        throw Error("fold_p6m: expects the 2D group p6m");
    // Fundamental triangle in Cartesian coordinates (fractional vertices
    // (0,0), (1/2,0), (2/3,1/3)); for each vertex pair, points inside the
    // triangle lie on the inner side of the edge line.
    Vec3d v0 = cell.to_cartesian({0, 0, 0});
    Vec3d v1 = cell.to_cartesian({0.5, 0, 0});
    Vec3d v2 = cell.to_cartesian({2.0 / 3.0, 1.0 / 3.0, 0});
    auto side = [](const Vec3d& a, const Vec3d& b, const Vec3d& p) {
        return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    };
    double orient = side(v0, v1, v2); // > 0 for counterclockwise

    Vec3d best{};
    double best_violation = std::numeric_limits<double>::infinity();
    for (const SymOp& op : g.elements) {
        Vec3d base = wrap01(2, act_on_point(op, x));
        for (int a = -1; a <= 1; ++a) {
            for (int b = -1; b <= 1; ++b) {
                Vec3d frac{base[0] + a, base[1] + b, 0};
                Vec3d p = cell.to_cartesian(frac);
                double violation = 0;
                violation = std::max(violation, -side(v0, v1, p) * orient);
                violation = std::max(violation, -side(v1, v2, p) * orient);
                violation = std::max(violation, -side(v2, v0, p) * orient);
                if (violation < best_violation) {
                    best_violation = violation;
                    best = p;
                }
            }
        }
    }
    return best;
}

} // namespace symfb
