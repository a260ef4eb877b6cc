#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "symfb/rational.hpp"

namespace symfb {

// Fixed-capacity value types for dimension 2 or 3. Unused trailing components
// are always zero, so lexicographic comparison works uniformly.
using Mat3i = std::array<std::array<int, 3>, 3>;
using Tra3 = std::array<Rational, 3>;
using Freq = std::array<int, 3>;
using Vec3d = std::array<double, 3>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct UnknownGroupError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

/// Crystallographic symmetry operation x -> Ax + t in fractional coordinates.
/// A is integer unimodular, the translation components are exact rationals
/// reduced into [0, 1). Immutable after construction.
class SymOp {
public:
    SymOp(int dim, const Mat3i& linear, const Tra3& translation);

    static SymOp identity(int dim);

    int dim() const { return dim_; }
    const Mat3i& linear() const { return linear_; }
    const Tra3& translation() const { return translation_; }

    /// Integer inverse of the linear part (exists by unimodularity).
    const Mat3i& inverse_linear() const { return inverse_linear_; }

    bool is_identity() const;
    bool has_identity_linear() const;

    friend bool operator==(const SymOp& a, const SymOp& b) {
        return a.dim_ == b.dim_ && a.linear_ == b.linear_ &&
               a.translation_ == b.translation_;
    }

    /// Canonical ordering: lexicographic on the flattened linear matrix, then
    /// on the translation.
    friend bool operator<(const SymOp& a, const SymOp& b);

private:
    int dim_;
    Mat3i linear_{};
    Tra3 translation_{};
    Mat3i inverse_linear_{};
    Tra3 inv_translation_{}; // A^{-1} t, cached for act_on_frequency
    friend std::pair<Freq, Rational> act_on_frequency(const SymOp&, const Freq&);
};

/// Parses triplet notation such as "-x,y+1/2" or "y,-x-y,z+2/3".
/// Grammar: coordinate := term (('+'|'-') term)*;  term := axis | rational;
/// axis := 'x'|'y'|'z';  rational := int | int'/'int.  Whitespace is ignored.
/// Throws ParseError (with position) on syntax errors, and Error if the
/// resulting matrix is not unimodular or any axis coefficient exceeds 1 in
/// magnitude.
SymOp parse_symop(const std::string& text, int dim);

/// Formats in the canonical form emitted by the database: axes before
/// constants, constants as reduced fractions in [0, 1). Round-trips exactly
/// through parse_symop.
std::string format_symop(const SymOp& op);

/// Composition a after b: x -> A_a (A_b x + t_b) + t_a, translation reduced
/// mod 1.
SymOp compose(const SymOp& a, const SymOp& b);

/// Group inverse modulo lattice translations.
SymOp inverse(const SymOp& a);

/// Applies the operation to a fractional point. The result is not wrapped
/// into [0,1); callers choose the reduction.
Vec3d act_on_point(const SymOp& a, const Vec3d& x);

/// Frequency-space action: returns the target frequency A^{-T} omega together
/// with the exact phase exponent r = (omega . A^{-1} t) mod 1, i.e. the
/// constraint-graph edge omega -> A^{-T} omega of weight e^{i 2 pi r}.
std::pair<Freq, Rational> act_on_frequency(const SymOp& a, const Freq& omega);

} // namespace symfb
