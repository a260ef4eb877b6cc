#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symfb/groups.hpp"

namespace symfb {

enum class RemovalReason {
    InconsistentSelfLoop, // a stabilizer edge at this node has exponent != 0
    IncompleteOrbit,      // the node's orbit leaves the enumeration box
    InconsistentOrbit,    // orbit-mate of an inconsistent node, or a
                          // path-independence failure surfaced by find_orbits
};

std::string_view removal_reason_name(RemovalReason r);

struct GraphEdge {
    int target = -1;    // node index, or -1 if the target falls outside the box
    Freq target_freq{}; // always set, also for out-of-box targets
    Rational exponent;  // edge weight is e^{i 2 pi exponent}
};

/// Directed graph on the reciprocal-lattice box. For each node there is
/// exactly one out-edge per group element: omega -> A^{-T} omega with exact
/// exponent (omega . A^{-1} t) mod 1.
struct ConstraintGraph {
    CosetGroup group;
    int radius = 0;
    std::vector<Freq> nodes;                       // lexicographic order
    std::vector<std::vector<GraphEdge>> edges;     // edges[node][element]
    std::vector<std::optional<RemovalReason>> removed;

    int dim() const { return group.dim(); }
    /// Index of an in-box frequency; -1 if outside the box.
    int index_of(const Freq& w) const;
};

inline constexpr std::size_t kDefaultNodeBudget = 4'000'000;

/// All integer vectors with max-norm <= radius, lexicographically ordered;
/// (2R+1)^dim nodes. Throws BudgetError if that exceeds node_budget.
std::vector<Freq> enumerate_lattice(int dim, int radius,
                                    std::size_t node_budget = kDefaultNodeBudget);

ConstraintGraph build_graph(const CosetGroup& g, int radius,
                            std::size_t node_budget = kDefaultNodeBudget);

/// Removes every node carrying a self-loop of nonzero exponent, then wholly
/// removes every orbit (connected component) that contains a removed node or
/// an out-of-box edge target.
ConstraintGraph prune_inconsistent(ConstraintGraph graph);

struct OrbitMember {
    Freq omega{};
    /// Coefficient exponent: the member's basis coefficient is
    /// w = e^{i 2 pi exponent}; the reference member has exponent 0.
    Rational exponent;
};

struct Orbit {
    Freq reference{};                // lexicographically smallest member
    long long norm2 = 0;             // ||reference||^2 in integer coordinates
    std::vector<OrbitMember> members; // lexicographic order
    bool consistent = true;
};

/// Connected components of the surviving nodes with breadth-first exponent
/// assignment from the lexicographically smallest node. Every edge (not just
/// a spanning tree) is then checked for path independence; orbits failing the
/// check are returned with consistent = false. Sorted by (norm2, reference).
std::vector<Orbit> find_orbits(const ConstraintGraph& graph);

} // namespace symfb
