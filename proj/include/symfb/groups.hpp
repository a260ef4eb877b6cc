#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symfb/symop.hpp"

namespace symfb {

/// Lattice system of the group's conventional cell. Rhombohedral groups are
/// carried on hexagonal axes with explicit centering translations, so they
/// fall under Hexagonal.
enum class Bravais {
    Oblique,     // 2D: 1-2
    Rectangular, // 2D: 3-9 (incl. centered)
    Square,      // 2D: 10-12
    Hexagonal2D, // 2D: 13-17
    Triclinic,   // 3D: 1-2
    Monoclinic,  // 3D: 3-15 (unique axis b)
    Orthorhombic,// 3D: 16-74
    Tetragonal,  // 3D: 75-142
    Hexagonal,   // 3D: 143-194 (trigonal + hexagonal, hexagonal axes)
    Cubic,       // 3D: 195-230
};

Bravais bravais_class(int dim, int number);
std::string_view bravais_name(Bravais b);

struct GroupSpec {
    int dim = 0;
    int number = 0;
    std::string symbol;
    std::vector<SymOp> generators;
    Bravais bravais = Bravais::Triclinic;
};

/// The finite coset group: all operations with translations reduced mod 1,
/// in canonical (lexicographic) order.
struct CosetGroup {
    GroupSpec spec;
    std::vector<SymOp> elements;

    int dim() const { return spec.dim; }
    std::size_t order() const { return elements.size(); }
};

/// Maximal conventional-cell coset order (48 point operations times 4
/// centering translations); expansion beyond this signals a bad generator set.
inline constexpr std::size_t kMaxCosetOrder = 192;

/// Fixed-point closure of {identity} plus the generators under composition
/// with mod-1 translation reduction. Throws Error if the closure exceeds
/// kMaxCosetOrder or translation denominators grow without bound.
CosetGroup expand_group(const GroupSpec& spec);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks identity membership, closure, inverses and unimodularity of every
/// element. Reporting only; never throws.
ValidationReport validate_group(const CosetGroup& g);

/// Parsed group database (one line per group:
/// "<dim> <number> <symbol> <gen1>;<gen2>;...").
class GroupDatabase {
public:
    static GroupDatabase from_string(std::string_view text);
    static GroupDatabase from_file(const std::string& path);
    /// The database bundled into the binary (17 wallpaper + 230 space groups).
    static const GroupDatabase& bundled();

    /// Looks up by number ("193") or symbol ("pg", "P6_3/mcm",
    /// case-insensitive). Throws UnknownGroupError.
    const GroupSpec& find(int dim, const std::string& key) const;

    const std::vector<GroupSpec>& all() const { return specs_; }

private:
    std::vector<GroupSpec> specs_;
};

/// Convenience: find + copy out of the bundled (or given) database.
GroupSpec load_group(int dim, const std::string& key);
GroupSpec load_group(int dim, const std::string& key, const GroupDatabase& db);

} // namespace symfb
