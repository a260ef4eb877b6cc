#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "symfb/constraint_graph.hpp"
#include "test_support.hpp"

using namespace symfb;

namespace {

ConstraintGraph pruned_graph(const char* key, int dim, int radius) {
    return prune_inconsistent(build_graph(expand_group(load_group(dim, key)), radius));
}

// Independent oracle for node survival: a node is part of the basis iff its
// whole orbit stays inside the box and every stabilizer element (A^{-T} w = w)
// carries exponent 0 at every orbit member.
std::set<Freq> brute_force_survivors(const CosetGroup& g, int radius) {
    std::vector<Freq> box = enumerate_lattice(g.dim(), radius);
    std::set<Freq> in_box(box.begin(), box.end());
    std::set<Freq> survivors;
    for (const Freq& w : box) {
        // collect the orbit of w under all elements
        std::set<Freq> orbit{w};
        bool grew = true;
        bool inside = true;
        while (grew && inside) {
            grew = false;
            for (const Freq& u : std::set<Freq>(orbit)) {
                for (const SymOp& op : g.elements) {
                    Freq v = act_on_frequency(op, u).first;
                    if (!in_box.count(v)) { inside = false; break; }
                    if (orbit.insert(v).second) grew = true;
                }
                if (!inside) break;
            }
        }
        if (!inside) continue;
        bool clean = true;
        for (const Freq& u : orbit) {
            for (const SymOp& op : g.elements) {
                auto [v, r] = act_on_frequency(op, u);
                if (v == u && !r.is_zero()) { clean = false; break; }
            }
            if (!clean) break;
        }
        if (clean) survivors.insert(w);
    }
    return survivors;
}

} // namespace

TEST_CASE("enumerate_lattice counts and ordering") {
    CHECK(enumerate_lattice(2, 1).size() == 9);
    CHECK(enumerate_lattice(3, 2).size() == 125);
    auto single = enumerate_lattice(2, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Freq{0, 0, 0});
    auto nodes = enumerate_lattice(2, 1);
    CHECK(std::is_sorted(nodes.begin(), nodes.end()));
    CHECK_THROWS_AS(enumerate_lattice(3, 2, 100), BudgetError);
    CHECK_THROWS_AS(enumerate_lattice(2, -1), Error);
}

TEST_CASE("build_graph records the pg edges from the worked example") {
    CosetGroup pg = expand_group(load_group(2, "pg"));
    ConstraintGraph graph = build_graph(pg, 1);
    REQUIRE(graph.nodes.size() == 9);
    int glide_index = -1;
    for (std::size_t e = 0; e < pg.elements.size(); ++e)
        if (!pg.elements[e].is_identity()) glide_index = static_cast<int>(e);
    REQUIRE(glide_index >= 0);

    int n11 = graph.index_of({1, 1, 0});
    const GraphEdge& edge11 = graph.edges[n11][glide_index];
    CHECK(edge11.target_freq == Freq{-1, 1, 0});
    CHECK(edge11.exponent == Rational(1, 2));

    int n10 = graph.index_of({1, 0, 0});
    const GraphEdge& edge10 = graph.edges[n10][glide_index];
    CHECK(edge10.target_freq == Freq{-1, 0, 0});
    CHECK(edge10.exponent == Rational(0));

    // p1: only identity self-loops with exponent 0
    ConstraintGraph trivial = build_graph(expand_group(load_group(2, "p1")), 2);
    for (std::size_t n = 0; n < trivial.nodes.size(); ++n) {
        REQUIRE(trivial.edges[n].size() == 1);
        CHECK(trivial.edges[n][0].target == static_cast<int>(n));
        CHECK(trivial.edges[n][0].exponent.is_zero());
    }
}

TEST_CASE("prune removes the pg extinction nodes (0, odd)") {
    ConstraintGraph graph = pruned_graph("pg", 2, 4);
    for (const Freq& w : graph.nodes) {
        bool removed = graph.removed[graph.index_of(w)].has_value();
        if (w[0] == 0) {
            CHECK(removed == (w[1] % 2 != 0));
            if (w[1] % 2 != 0)
                CHECK(*graph.removed[graph.index_of(w)] == RemovalReason::InconsistentSelfLoop);
        }
    }
    // nothing survives only partially: (1,4) has glide target (-1,4) inside
    CHECK_FALSE(graph.removed[graph.index_of({1, 4, 0})].has_value());
}

TEST_CASE("prune removes nothing for p1") {
    ConstraintGraph graph = pruned_graph("p1", 2, 3);
    for (const auto& r : graph.removed) CHECK_FALSE(r.has_value());
}

TEST_CASE("centering self-loops reproduce the extinction rule") {
    // cm: centering translation (1/2,1/2) kills every node with odd w1+w2
    ConstraintGraph graph = pruned_graph("cm", 2, 3);
    for (const Freq& w : graph.nodes) {
        bool parity_odd = (w[0] + w[1]) % 2 != 0;
        bool removed = graph.removed[graph.index_of(w)].has_value();
        if (parity_odd) CHECK(removed);
    }
}

TEST_CASE("find_orbits reproduces the pg basis structure") {
    ConstraintGraph graph = pruned_graph("pg", 2, 1);
    std::vector<Orbit> orbits = find_orbits(graph);
    REQUIRE(orbits.size() == 4); // {0}, {+-(1,0)}, {(-1,-1),(1,-1)}, {(-1,1),(1,1)}

    CHECK(orbits[0].reference == Freq{0, 0, 0});
    CHECK(orbits[0].members.size() == 1);
    CHECK(orbits[0].members[0].exponent.is_zero());

    CHECK(orbits[1].reference == Freq{-1, 0, 0});
    REQUIRE(orbits[1].members.size() == 2);
    CHECK(orbits[1].members[0].exponent == Rational(0));
    CHECK(orbits[1].members[1].omega == Freq{1, 0, 0});
    CHECK(orbits[1].members[1].exponent == Rational(0));

    CHECK(orbits[3].reference == Freq{-1, 1, 0});
    REQUIRE(orbits[3].members.size() == 2);
    CHECK(orbits[3].members[0].exponent == Rational(0));
    CHECK(orbits[3].members[1].omega == Freq{1, 1, 0});
    CHECK(orbits[3].members[1].exponent == Rational(1, 2));

    for (const Orbit& o : orbits) CHECK(o.consistent);
}

TEST_CASE("orbits partition the surviving nodes") {
    for (const char* key : {"pg", "p4g", "p6m", "cmm"}) {
        ConstraintGraph graph = pruned_graph(key, 2, 3);
        std::vector<Orbit> orbits = find_orbits(graph);
        std::set<Freq> seen;
        std::size_t surviving = 0;
        for (std::size_t n = 0; n < graph.nodes.size(); ++n)
            if (!graph.removed[n]) ++surviving;
        std::size_t total = 0;
        for (const Orbit& o : orbits) {
            total += o.members.size();
            for (const OrbitMember& m : o.members) CHECK(seen.insert(m.omega).second);
            CHECK(std::is_sorted(o.members.begin(), o.members.end(),
                                 [](const OrbitMember& a, const OrbitMember& b) {
                                     return a.omega < b.omega;
                                 }));
            CHECK(o.reference == o.members.front().omega);
        }
        CHECK(total == surviving);
    }
}

TEST_CASE("exponent differences are invariant under the BFS root choice") {
    // re-rooting shifts all exponents by a constant: re-derive the assignment
    // from every member and compare pairwise differences
    ConstraintGraph graph = pruned_graph("p4g", 2, 2);
    std::vector<Orbit> orbits = find_orbits(graph);
    for (const Orbit& orbit : orbits) {
        if (orbit.members.size() < 2) continue;
        std::map<Freq, Rational> base;
        for (const OrbitMember& m : orbit.members) base[m.omega] = m.exponent;
        for (std::size_t root = 0; root < orbit.members.size(); ++root) {
            // walk edges exhaustively from the chosen root
            std::map<Freq, Rational> alt{{orbit.members[root].omega, Rational(0)}};
            bool grew = true;
            while (grew) {
                grew = false;
                for (const auto& [w, q] : std::map<Freq, Rational>(alt)) {
                    int idx = graph.index_of(w);
                    for (const GraphEdge& e : graph.edges[idx]) {
                        Rational qt = (q - e.exponent).mod1();
                        if (!alt.count(e.target_freq)) {
                            alt[e.target_freq] = qt;
                            grew = true;
                        } else {
                            CHECK(alt[e.target_freq] == qt); // path independence
                        }
                    }
                }
            }
            Rational shift = (alt[orbit.reference] - base[orbit.reference]).mod1();
            for (const auto& [w, q] : alt)
                CHECK((q - base[w]).mod1() == shift);
        }
    }
}

TEST_CASE("pipeline agrees with the brute-force stabilizer oracle") {
    // all 17 wallpaper groups at R <= 3
    for (const GroupSpec& spec : GroupDatabase::bundled().all()) {
        if (spec.dim != 2) continue;
        CosetGroup g = expand_group(spec);
        for (int radius : {1, 3}) {
            std::set<Freq> expected = brute_force_survivors(g, radius);
            ConstraintGraph graph = prune_inconsistent(build_graph(g, radius));
            std::set<Freq> got;
            for (const Orbit& o : find_orbits(graph))
                if (o.consistent)
                    for (const OrbitMember& m : o.members) got.insert(m.omega);
            CHECK_MESSAGE(got == expected, spec.symbol << " radius " << radius);
        }
    }
}

TEST_CASE("orbit listings are deterministic") {
    ConstraintGraph g1 = pruned_graph("p6m", 2, 3);
    ConstraintGraph g2 = pruned_graph("p6m", 2, 3);
    std::vector<Orbit> o1 = find_orbits(g1), o2 = find_orbits(g2);
    REQUIRE(o1.size() == o2.size());
    for (std::size_t i = 0; i < o1.size(); ++i) {
        CHECK(o1[i].reference == o2[i].reference);
        REQUIRE(o1[i].members.size() == o2[i].members.size());
        for (std::size_t j = 0; j < o1[i].members.size(); ++j) {
            CHECK(o1[i].members[j].omega == o2[i].members[j].omega);
            CHECK(o1[i].members[j].exponent == o2[i].members[j].exponent);
        }
    }
}
