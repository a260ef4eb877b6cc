// symfb: symmetry-adapted Fourier bases for wallpaper and space groups.
//
// Subcommands: basis, routing, encode, orbit-dist, graph, sample, sweep.
// All data goes to stdout (or --output), diagnostics to stderr. Output is
// deterministic: identical flags produce byte-identical files.
//
// Exit codes: 0 success, 2 bad flags, 3 unknown group, 4 node budget
// exceeded, 1 other errors.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symfb/basis.hpp"
#include "symfb/export.hpp"
#include "symfb/orbit_metric.hpp"

using namespace symfb;

namespace {

struct RunConfig {
    std::string groups_file;
    int dim = 2;
    std::string group;
    int radius = -1; // -1: default per dimension (8 in 2D, 4 in 3D)
    std::string format;
    std::string output;
    std::size_t node_budget = kDefaultNodeBudget;
    bool normalize = false;
    std::string layout = "complex";
    std::vector<double> pos;
    std::vector<double> x1, x2;
    std::vector<double> lattice;
    int shell = 2;
    int basis_index = 0;
    int grid = 32;
    double tol = 1e-9;
    int samples = 100;
    std::uint64_t seed = 0;
    int radius_2d = 8;
    int radius_3d = 4;
};

int effective_radius(const RunConfig& cfg) {
    if (cfg.radius >= 0) return cfg.radius;
    return cfg.dim == 2 ? 8 : 4;
}

const GroupDatabase& database(const RunConfig& cfg) {
    static GroupDatabase from_file;
    static bool loaded = false;
    if (cfg.groups_file.empty()) return GroupDatabase::bundled();
    if (!loaded) {
        from_file = GroupDatabase::from_file(cfg.groups_file);
        loaded = true;
    }
    return from_file;
}

CosetGroup coset_group(const RunConfig& cfg) {
    return expand_group(database(cfg).find(cfg.dim, cfg.group));
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + cfg.output);
    out << text;
}

void require_format(const RunConfig& cfg, const char* expected) {
    if (!cfg.format.empty() && cfg.format != expected)
        throw CLI::ValidationError("--format", std::string("this subcommand emits ") +
                                                   expected + " only");
}

Vec3d to_vec(const std::vector<double>& values, int dim, const char* flag) {
    if (static_cast<int>(values.size()) != dim)
        throw CLI::ValidationError(flag, "expected " + std::to_string(dim) +
                                             " comma-separated numbers");
    Vec3d x{};
    for (int i = 0; i < dim; ++i) x[i] = values[i];
    return x;
}

std::string csv_complex_row(const std::vector<Complex>& values, const std::string& layout) {
    std::ostringstream head, row;
    std::size_t k = values.size();
    if (layout == "stacked") {
        for (std::size_t i = 0; i < k; ++i) head << (i ? "," : "") << "re" << i;
        for (std::size_t i = 0; i < k; ++i) head << ",im" << i;
        for (std::size_t i = 0; i < k; ++i)
            row << (i ? "," : "") << format_double(values[i].real());
        for (std::size_t i = 0; i < k; ++i) row << "," << format_double(values[i].imag());
    } else {
        for (std::size_t i = 0; i < k; ++i)
            head << (i ? "," : "") << "re" << i << ",im" << i;
        for (std::size_t i = 0; i < k; ++i)
            row << (i ? "," : "") << format_double(values[i].real()) << ","
                << format_double(values[i].imag());
    }
    return head.str() + "\n" + row.str() + "\n";
}

int cmd_basis(const RunConfig& cfg) {
    require_format(cfg, "json");
    BasisSet basis = build_basis(coset_group(cfg), effective_radius(cfg), cfg.node_budget);
    write_output(cfg, basis_to_json(basis));
    return 0;
}

int cmd_routing(const RunConfig& cfg) {
    require_format(cfg, "mtx");
    BasisSet basis = build_basis(coset_group(cfg), effective_radius(cfg), cfg.node_budget);
    RoutingMatrix m = routing_matrix(basis, cfg.normalize);
    std::ostringstream out;
    write_matrix_market(out, m);
    write_output(cfg, out.str());
    return 0;
}

int cmd_encode(const RunConfig& cfg) {
    require_format(cfg, "csv");
    CosetGroup g = coset_group(cfg);
    Vec3d x = to_vec(cfg.pos, cfg.dim, "--pos");
    BasisSet basis = build_basis(g, effective_radius(cfg), cfg.node_budget);
    auto enc = evaluate_encoding(basis, x, cfg.normalize);
    write_output(cfg, csv_complex_row(enc, cfg.layout));
    return 0;
}

int cmd_orbit_dist(const RunConfig& cfg) {
    CosetGroup g = coset_group(cfg);
    LatticeCell cell = LatticeCell::from_flat(cfg.dim, cfg.lattice);
    std::vector<std::string> warnings;
    double d = orbit_distance(g, cell, to_vec(cfg.x1, cfg.dim, "--x1"),
                              to_vec(cfg.x2, cfg.dim, "--x2"), cfg.shell, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    write_output(cfg, format_double(d) + "\n");
    return 0;
}

int cmd_graph(const RunConfig& cfg) {
    require_format(cfg, "dot");
    ConstraintGraph graph =
        prune_inconsistent(build_graph(coset_group(cfg), effective_radius(cfg), cfg.node_budget));
    write_output(cfg, graph_to_dot(graph));
    return 0;
}

int cmd_sample(const RunConfig& cfg) {
    require_format(cfg, "csv");
    if (cfg.dim != 2)
        throw CLI::ValidationError("--dim", "sample emits 2D grids only");
    if (cfg.grid < 1) throw CLI::ValidationError("--grid", "must be >= 1");
    BasisSet basis = build_basis(coset_group(cfg), effective_radius(cfg), cfg.node_budget);
    if (cfg.basis_index < 0 || cfg.basis_index >= static_cast<int>(basis.orbit_count()))
        throw CLI::ValidationError("--basis-index",
                                   "out of range (have " +
                                       std::to_string(basis.orbit_count()) + " orbits)");
    const Orbit& orbit = basis.orbits[cfg.basis_index];
    std::ostringstream out;
    out << "x1,x2,re,im\n";
    for (int i = 0; i < cfg.grid; ++i) {
        for (int j = 0; j < cfg.grid; ++j) {
            Vec3d x{static_cast<double>(i) / cfg.grid, static_cast<double>(j) / cfg.grid, 0};
            Complex value{0, 0};
            for (const OrbitMember& m : orbit.members) {
                double angle = 2.0 * M_PI * (m.omega[0] * x[0] + m.omega[1] * x[1]);
                value += unit_phase(m.exponent) * Complex{std::cos(angle), std::sin(angle)};
            }
            out << format_double(x[0]) << "," << format_double(x[1]) << ","
                << format_double(value.real()) << "," << format_double(value.imag()) << "\n";
        }
    }
    write_output(cfg, out.str());
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    const GroupDatabase& db = database(cfg);
    Rng rng(cfg.seed);
    std::ostringstream out;
    out << "dim number symbol order modes orbits removed max_err status\n";
    int failures = 0;
    auto start = std::chrono::steady_clock::now();
    for (const GroupSpec& spec : db.all()) {
        int radius = spec.dim == 2 ? cfg.radius_2d : cfg.radius_3d;
        CosetGroup g = expand_group(spec);
        BasisSet basis = build_basis(g, radius, cfg.node_budget);
        double max_err = 0;
        for (int s = 0; s < cfg.samples; ++s) {
            Vec3d x{};
            for (int i = 0; i < spec.dim; ++i) x[i] = rng.uniform();
            auto base = evaluate_encoding(basis, x);
            for (const SymOp& op : g.elements) {
                auto moved = evaluate_encoding(basis, act_on_point(op, x));
                for (std::size_t k = 0; k < base.size(); ++k)
                    max_err = std::max(max_err, std::abs(base[k] - moved[k]));
            }
        }
        bool ok = max_err < cfg.tol;
        if (!ok) ++failures;
        out << spec.dim << " " << spec.number << " " << spec.symbol << " " << g.order()
            << " " << basis.mode_count() << " " << basis.orbit_count() << " "
            << basis.removed.size() << " " << format_double(max_err) << " "
            << (ok ? "ok" : "FAIL") << "\n";
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    out << "# " << db.all().size() << " groups, " << failures << " failures, " << elapsed
        << " ms\n";
    write_output(cfg, out.str());
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry-adapted Fourier bases for crystallographic groups"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    app.add_option("--groups-file", cfg.groups_file,
                   "override the bundled group database");
    bool all_groups = false;
    app.add_flag("--all-groups", all_groups, "run the sweep over every bundled group");

    auto add_common = [&](CLI::App* sub, bool needs_group = true) {
        sub->add_option("--dim", cfg.dim, "dimension (2 or 3)")
            ->check(CLI::IsMember({2, 3}));
        if (needs_group)
            sub->add_option("--group", cfg.group, "group number or symbol")->required();
        sub->add_option("--radius", cfg.radius, "frequency box radius (default 8 in 2D, 4 in 3D)");
        sub->add_option("--format", cfg.format, "output format (fixed per subcommand)");
        sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
        sub->add_option("--node-budget", cfg.node_budget, "enumeration node budget");
    };

    CLI::App* basis = app.add_subcommand("basis", "orbit/basis listing as JSON");
    add_common(basis);

    CLI::App* routing = app.add_subcommand("routing", "routing matrix as Matrix Market");
    add_common(routing);
    routing->add_flag("--normalize", cfg.normalize, "scale rows by 1/sqrt(orbit size)");

    CLI::App* encode = app.add_subcommand("encode", "invariant encoding of a position as CSV");
    add_common(encode);
    encode->add_option("--pos", cfg.pos, "fractional position, comma-separated")
        ->required()
        ->delimiter(',');
    encode->add_option("--layout", cfg.layout, "complex (interleaved re,im) or stacked")
        ->check(CLI::IsMember({"complex", "stacked"}));
    encode->add_flag("--normalize", cfg.normalize, "scale by 1/sqrt(orbit size)");

    CLI::App* orbit_dist = app.add_subcommand("orbit-dist", "exact orbit distance");
    add_common(orbit_dist);
    orbit_dist->add_option("--x1", cfg.x1, "first fractional position")
        ->required()
        ->delimiter(',');
    orbit_dist->add_option("--x2", cfg.x2, "second fractional position")
        ->required()
        ->delimiter(',');
    orbit_dist
        ->add_option("--lattice", cfg.lattice,
                     "row-major lattice basis (4 numbers in 2D, 9 in 3D)")
        ->required()
        ->delimiter(',');
    orbit_dist->add_option("--shell", cfg.shell, "translation search halfwidth");

    CLI::App* graph = app.add_subcommand("graph", "pruned constraint graph as DOT");
    add_common(graph);

    CLI::App* sample = app.add_subcommand("sample", "basis function on a grid as CSV");
    add_common(sample);
    sample->add_option("--basis-index", cfg.basis_index, "orbit index (0-based)")->required();
    sample->add_option("--grid", cfg.grid, "grid resolution per axis");

    CLI::App* sweep =
        app.add_subcommand("sweep", "basis construction + invariance self-check, all groups");
    sweep->add_option("--tol", cfg.tol, "invariance tolerance");
    sweep->add_option("--samples", cfg.samples, "random positions per group");
    sweep->add_option("--seed", cfg.seed, "rng seed");
    sweep->add_option("--radius-2d", cfg.radius_2d, "frequency radius for 2D groups");
    sweep->add_option("--radius-3d", cfg.radius_3d, "frequency radius for 3D groups");
    sweep->add_option("-o,--output", cfg.output, "output file (default stdout)");
    sweep->add_option("--node-budget", cfg.node_budget, "enumeration node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (basis->parsed()) return cmd_basis(cfg);
        if (routing->parsed()) return cmd_routing(cfg);
        if (encode->parsed()) return cmd_encode(cfg);
        if (orbit_dist->parsed()) return cmd_orbit_dist(cfg);
        if (graph->parsed()) return cmd_graph(cfg);
        if (sample->parsed()) return cmd_sample(cfg);
        if (sweep->parsed() || all_groups) return cmd_sweep(cfg);
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownGroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
