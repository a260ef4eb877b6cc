#include "symfb/groups.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace symfb {

extern const char* const kBundledGroupsTxt; // generated from data/groups.txt

Bravais bravais_class(int dim, int number) {
    if (dim == 2) {
        if (number >= 1 && number <= 2) return Bravais::Oblique;
        if (number <= 9) return Bravais::Rectangular;
        if (number <= 12) return Bravais::Square;
        if (number <= 17) return Bravais::Hexagonal2D;
    } else if (dim == 3) {
        if (number >= 1 && number <= 2) return Bravais::Triclinic;
        if (number <= 15) return Bravais::Monoclinic;
        if (number <= 74) return Bravais::Orthorhombic;
        if (number <= 142) return Bravais::Tetragonal;
        if (number <= 194) return Bravais::Hexagonal;
        if (number <= 230) return Bravais::Cubic;
    }
    throw Error("bravais_class: no group " + std::to_string(number) + " in dimension " +
                std::to_string(dim));
}

std::string_view bravais_name(Bravais b) {
    switch (b) {
    case Bravais::Oblique: return "oblique";
    case Bravais::Rectangular: return "rectangular";
    case Bravais::Square: return "square";
    case Bravais::Hexagonal2D: return "hexagonal";
    case Bravais::Triclinic: return "triclinic";
    case Bravais::Monoclinic: return "monoclinic";
    case Bravais::Orthorhombic: return "orthorhombic";
    case Bravais::Tetragonal: return "tetragonal";
    case Bravais::Hexagonal: return "hexagonal";
    case Bravais::Cubic: return "cubic";
    }
    return "?";
}

CosetGroup expand_group(const GroupSpec& spec) {
    std::set<SymOp> seen;
    std::vector<SymOp> queue;
    auto push = [&](const SymOp& op) {
        for (int i = 0; i < spec.dim; ++i)
            if (op.translation()[i].den() > 1'000'000)
                throw Error("expand_group: translation denominator growth (invalid generator?)");
        if (seen.insert(op).second) {
            queue.push_back(op);
            if (seen.size() > kMaxCosetOrder)
                throw Error("expand_group: closure exceeds " + std::to_string(kMaxCosetOrder) +
                            " elements (bad generator set?)");
        }
    };
    push(SymOp::identity(spec.dim));
    for (const SymOp& g : spec.generators) push(g);
    while (!queue.empty()) {
        SymOp a = queue.back();
        queue.pop_back();
        // compose with the full current set in both orders
        std::vector<SymOp> snapshot(seen.begin(), seen.end());
        for (const SymOp& b : snapshot) {
            push(compose(a, b));
            push(compose(b, a));
        }
    }
    CosetGroup g;
    g.spec = spec;
    g.elements.assign(seen.begin(), seen.end()); // std::set iterates in order
    return g;
}

ValidationReport validate_group(const CosetGroup& g) {
    ValidationReport report;
    auto note = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    bool has_identity = false;
    for (const SymOp& op : g.elements)
        if (op.is_identity()) has_identity = true;
    if (!has_identity) note("identity element missing");

    std::set<SymOp> members(g.elements.begin(), g.elements.end());
    if (members.size() != g.elements.size()) note("duplicate elements");

    for (const SymOp& a : g.elements) {
        if (a.dim() != g.dim()) {
            note("element with mismatched dimension");
            continue;
        }
        // unimodularity: the stored integer inverse must undo the linear part
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                int s = 0;
                for (int k = 0; k < a.dim(); ++k)
                    s += a.linear()[i][k] * a.inverse_linear()[k][j];
                if (s != (i == j ? 1 : 0))
                    note("element '" + format_symop(a) + "' is not unimodular");
            }
        if (!members.count(inverse(a)))
            note("inverse of '" + format_symop(a) + "' missing");
        for (const SymOp& b : g.elements) {
            SymOp c = compose(a, b);
            if (!members.count(c)) {
                note("closure violation: '" + format_symop(a) + "' * '" + format_symop(b) +
                     "' = '" + format_symop(c) + "' not in element list");
            }
        }
    }
    return report;
}

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

GroupDatabase GroupDatabase::from_string(std::string_view text) {
    GroupDatabase db;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        GroupSpec spec;
        std::string gens;
        if (!(ls >> spec.dim >> spec.number >> spec.symbol >> gens))
            throw Error("groups database: malformed line " + std::to_string(lineno));
        spec.bravais = bravais_class(spec.dim, spec.number);
        std::size_t start = 0;
        while (start <= gens.size()) {
            std::size_t sep = gens.find(';', start);
            std::string triplet = gens.substr(start, sep == std::string::npos ? sep : sep - start);
            try {
                SymOp op = parse_symop(triplet, spec.dim);
                for (int i = 0; i < spec.dim; ++i)
                    if (op.translation()[i].den() > 12)
                        throw Error("translation denominator exceeds 12");
                spec.generators.push_back(op);
            } catch (const Error& e) {
                throw Error("groups database line " + std::to_string(lineno) + ", generator '" +
                            triplet + "': " + e.what());
            }
            if (sep == std::string::npos) break;
            start = sep + 1;
        }
        db.specs_.push_back(std::move(spec));
    }
    return db;
}

GroupDatabase GroupDatabase::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open groups file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

const GroupDatabase& GroupDatabase::bundled() {
    static const GroupDatabase db = from_string(kBundledGroupsTxt);
    return db;
}

const GroupSpec& GroupDatabase::find(int dim, const std::string& key) const {
    bool numeric = !key.empty() &&
                   std::all_of(key.begin(), key.end(),
                               [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
        int number = std::stoi(key);
        for (const GroupSpec& s : specs_)
            if (s.dim == dim && s.number == number) return s;
    } else {
        std::string k = lower(key);
        for (const GroupSpec& s : specs_)
            if (s.dim == dim && lower(s.symbol) == k) return s;
    }
    throw UnknownGroupError("unknown group '" + key + "' in dimension " + std::to_string(dim));
}

GroupSpec load_group(int dim, const std::string& key, const GroupDatabase& db) {
    return db.find(dim, key);
}

GroupSpec load_group(int dim, const std::string& key) {
    return load_group(dim, key, GroupDatabase::bundled());
}

} // namespace symfb
