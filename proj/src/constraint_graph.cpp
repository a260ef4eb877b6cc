#include "symfb/constraint_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace symfb {

std::string_view removal_reason_name(RemovalReason r) {
    switch (r) {
    case RemovalReason::InconsistentSelfLoop: return "inconsistent_self_loop";
    case RemovalReason::IncompleteOrbit: return "incomplete_orbit";
    case RemovalReason::InconsistentOrbit: return "inconsistent_orbit";
    }
    return "?";
}

namespace {

// Union-find with path compression, used for orbit components.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[b] = a;
    }

private:
    std::vector<int> parent_;
};

} // namespace

int ConstraintGraph::index_of(const Freq& w) const {
    int d = dim();
    int side = 2 * radius + 1;
    int idx = 0;
    for (int i = 0; i < d; ++i) {
        if (w[i] < -radius || w[i] > radius) return -1;
        idx = idx * side + (w[i] + radius);
    }
    return idx;
}

std::vector<Freq> enumerate_lattice(int dim, int radius, std::size_t node_budget) {
    if (radius < 0) throw Error("enumerate_lattice: radius must be >= 0");
    double side = 2.0 * radius + 1.0;
    double count = dim == 2 ? side * side : side * side * side;
    if (count > static_cast<double>(node_budget))
        throw BudgetError("enumerate_lattice: (2*" + std::to_string(radius) + "+1)^" +
                          std::to_string(dim) + " nodes exceed budget of " +
                          std::to_string(node_budget));
    std::vector<Freq> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    if (dim == 2) {
        for (int a = -radius; a <= radius; ++a)
            for (int b = -radius; b <= radius; ++b) nodes.push_back({a, b, 0});
    } else {
        for (int a = -radius; a <= radius; ++a)
            for (int b = -radius; b <= radius; ++b)
                for (int c = -radius; c <= radius; ++c) nodes.push_back({a, b, c});
    }
    return nodes;
}

ConstraintGraph build_graph(const CosetGroup& g, int radius, std::size_t node_budget) {
    ConstraintGraph graph;
    graph.group = g;
    graph.radius = radius;
    graph.nodes = enumerate_lattice(g.dim(), radius, node_budget);
    graph.removed.assign(graph.nodes.size(), std::nullopt);
    graph.edges.resize(graph.nodes.size());
    for (std::size_t n = 0; n < graph.nodes.size(); ++n) {
        auto& out = graph.edges[n];
        out.reserve(g.elements.size());
        for (const SymOp& op : g.elements) {
            auto [target, exponent] = act_on_frequency(op, graph.nodes[n]);
            out.push_back(GraphEdge{graph.index_of(target), target, exponent});
        }
    }
    return graph;
}

ConstraintGraph prune_inconsistent(ConstraintGraph graph) {
    const std::size_t n = graph.nodes.size();
    UnionFind uf(n);
    std::vector<bool> bad_self_loop(n, false);
    std::vector<bool> escapes_box(n, false);
    for (std::size_t u = 0; u < n; ++u) {
        for (const GraphEdge& e : graph.edges[u]) {
            if (e.target < 0) {
                escapes_box[u] = true;
            } else if (e.target == static_cast<int>(u)) {
                if (!e.exponent.is_zero()) bad_self_loop[u] = true;
            } else {
                uf.unite(static_cast<int>(u), e.target);
            }
        }
    }
    std::vector<bool> comp_bad(n, false), comp_escapes(n, false);
    for (std::size_t u = 0; u < n; ++u) {
        int root = uf.find(static_cast<int>(u));
        if (bad_self_loop[u]) comp_bad[root] = true;
        if (escapes_box[u]) comp_escapes[root] = true;
    }
    for (std::size_t u = 0; u < n; ++u) {
        int root = uf.find(static_cast<int>(u));
        if (bad_self_loop[u])
            graph.removed[u] = RemovalReason::InconsistentSelfLoop;
        else if (comp_escapes[root])
            graph.removed[u] = RemovalReason::IncompleteOrbit;
        else if (comp_bad[root])
            graph.removed[u] = RemovalReason::InconsistentOrbit;
    }
    return graph;
}

std::vector<Orbit> find_orbits(const ConstraintGraph& graph) {
    const std::size_t n = graph.nodes.size();
    // group surviving nodes into components
    UnionFind uf(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (graph.removed[u]) continue;
        for (const GraphEdge& e : graph.edges[u])
            if (e.target >= 0 && !graph.removed[e.target])
                uf.unite(static_cast<int>(u), e.target);
    }
    std::vector<std::vector<int>> components;
    std::vector<int> comp_of(n, -1);
    for (std::size_t u = 0; u < n; ++u) { // ascending u = lexicographic node order
        if (graph.removed[u]) continue;
        int root = uf.find(static_cast<int>(u));
        if (comp_of[root] < 0) {
            comp_of[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[comp_of[root]].push_back(static_cast<int>(u));
    }

    std::vector<Orbit> orbits;
    orbits.reserve(components.size());
    std::vector<Rational> expo(n);
    std::vector<bool> assigned(n, false);
    for (const auto& comp : components) {
        // breadth-first coefficient-exponent assignment from the
        // lexicographically smallest node (= first, by construction):
        // crossing an edge of exponent r maps the coefficient exponent as
        // q_target = q_source - r (mod 1)
        int ref = comp[0];
        std::deque<int> queue{ref};
        expo[ref] = Rational(0);
        assigned[ref] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const GraphEdge& e : graph.edges[u]) {
                if (e.target < 0 || graph.removed[e.target]) continue;
                if (!assigned[e.target]) {
                    expo[e.target] = (expo[u] - e.exponent).mod1();
                    assigned[e.target] = true;
                    queue.push_back(e.target);
                }
            }
        }
        // full path-independence check on every edge of the component
        bool consistent = true;
        for (int u : comp) {
            for (const GraphEdge& e : graph.edges[u]) {
                if (e.target < 0 || graph.removed[e.target]) { consistent = false; break; }
                if (!((expo[u] - e.exponent).mod1() == expo[e.target])) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) break;
        }
        Orbit orbit;
        orbit.reference = graph.nodes[ref];
        orbit.norm2 = 0;
        for (int i = 0; i < graph.dim(); ++i)
            orbit.norm2 += static_cast<long long>(orbit.reference[i]) * orbit.reference[i];
        orbit.consistent = consistent;
        orbit.members.reserve(comp.size());
        for (int u : comp) orbit.members.push_back({graph.nodes[u], expo[u]});
        for (int u : comp) assigned[u] = false;
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
        return a.reference < b.reference;
    });
    return orbits;
}

} // namespace symfb
