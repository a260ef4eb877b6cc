#include "symfb/export.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace symfb {

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

namespace {

nlohmann::ordered_json freq_to_json(int dim, const Freq& w) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i = 0; i < dim; ++i) arr.push_back(w[i]);
    return arr;
}

} // namespace

std::string basis_to_json(const BasisSet& basis) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["generator"] = {{"name", "symfb"}, {"version", kVersion}};
    doc["group"] = {{"number", basis.spec.number},
                    {"symbol", basis.spec.symbol},
                    {"bravais", std::string(bravais_name(basis.spec.bravais))}};
    doc["dim"] = basis.spec.dim;
    doc["radius"] = basis.radius;
    doc["mode_count"] = basis.mode_count();
    json orbits = json::array();
    for (const Orbit& orbit : basis.orbits) {
        json members = json::array();
        for (const OrbitMember& m : orbit.members)
            members.push_back(json{{"omega", freq_to_json(basis.dim(), m.omega)},
                                   {"exponent", m.exponent.str()}});
        orbits.push_back(json{{"reference", freq_to_json(basis.dim(), orbit.reference)},
                              {"eigenvalue_factor", orbit.norm2},
                              {"members", std::move(members)}});
    }
    doc["orbits"] = std::move(orbits);
    json removed = json::array();
    for (const auto& [freq, reason] : basis.removed)
        removed.push_back(json{{"omega", freq_to_json(basis.dim(), freq)},
                               {"reason", std::string(removal_reason_name(reason))}});
    doc["removed"] = std::move(removed);
    return doc.dump(2) + "\n";
}

std::string graph_to_dot(const ConstraintGraph& graph) {
    std::ostringstream out;
    int dim = graph.dim();
    auto label = [&](const Freq& w) {
        std::string s = "(";
        for (int i = 0; i < dim; ++i) {
            if (i) s += ",";
            s += std::to_string(w[i]);
        }
        return s + ")";
    };
    out << "digraph constraint_graph {\n";
    out << "  // group " << graph.group.spec.symbol << ", radius " << graph.radius << "\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (std::size_t n = 0; n < graph.nodes.size(); ++n) {
        out << "  \"" << label(graph.nodes[n]) << "\"";
        if (graph.removed[n])
            out << " [style=filled fillcolor=gray80 color=gray50 removed=\""
                << removal_reason_name(*graph.removed[n]) << "\"]";
        out << ";\n";
    }
    for (std::size_t n = 0; n < graph.nodes.size(); ++n) {
        for (std::size_t e = 0; e < graph.edges[n].size(); ++e) {
            if (graph.group.elements[e].is_identity()) continue;
            const GraphEdge& edge = graph.edges[n][e];
            if (edge.target < 0) continue;
            const Rational& r = edge.exponent;
            const char* color = r.is_zero() ? "blue" : (r == Rational(1, 2) ? "red" : "black");
            out << "  \"" << label(graph.nodes[n]) << "\" -> \"" << label(edge.target_freq)
                << "\" [label=\"" << r.str() << "\" color=" << color << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

void write_matrix_market(std::ostream& out, const RoutingMatrix& m) {
    out << "%%MatrixMarket matrix coordinate complex general\n";
    out << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
    for (const RoutingMatrix::Entry& e : m.entries)
        out << (e.row + 1) << " " << (e.col + 1) << " " << format_double(e.value.real())
            << " " << format_double(e.value.imag()) << "\n";
}

RoutingMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("matrix market: empty input");
    if (line.rfind("%%MatrixMarket", 0) != 0)
        throw Error("matrix market: missing banner");
    {
        std::istringstream banner(line);
        std::string tag, object, fmt, field, symmetry;
        banner >> tag >> object >> fmt >> field >> symmetry;
        if (object != "matrix" || fmt != "coordinate" || field != "complex" ||
            symmetry != "general")
            throw Error("matrix market: expected 'matrix coordinate complex general'");
    }
    do {
        if (!std::getline(in, line)) throw Error("matrix market: missing size line");
    } while (!line.empty() && line[0] == '%');
    RoutingMatrix m;
    std::size_t nnz = 0;
    {
        std::istringstream sizes(line);
        if (!(sizes >> m.rows >> m.cols >> nnz))
            throw Error("matrix market: malformed size line");
    }
    m.entries.reserve(nnz);
    for (std::size_t i = 0; i < nnz; ++i) {
        if (!std::getline(in, line)) throw Error("matrix market: truncated entry list");
        std::istringstream entry(line);
        int row = 0, col = 0;
        double re = 0, im = 0;
        if (!(entry >> row >> col >> re >> im))
            throw Error("matrix market: malformed entry line " + std::to_string(i + 1));
        if (row < 1 || row > m.rows || col < 1 || col > m.cols)
            throw Error("matrix market: index out of range on entry " + std::to_string(i + 1));
        m.entries.push_back({row - 1, col - 1, Complex{re, im}});
    }
    return m;
}

} // namespace symfb
