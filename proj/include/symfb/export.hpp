#pragma once

#include <iosfwd>
#include <string>

#include "symfb/basis.hpp"

namespace symfb {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

/// Orbit/basis document. Member coefficients are e^{i 2 pi exponent} with
/// exponents serialized as exact "p/q" strings; eigenvalue_factor is
/// ||reference||^2 in integer coordinates.
std::string basis_to_json(const BasisSet& basis);

/// DOT rendering of the pruned graph: exponent-0 edges blue, exponent-1/2
/// edges red, anything else black; removed nodes gray. Identity self-loops
/// are omitted.
std::string graph_to_dot(const ConstraintGraph& graph);

/// Matrix Market coordinate complex format, 1-based indices, entries sorted
/// row-major. Deterministic: identical matrices serialize byte-identically.
void write_matrix_market(std::ostream& out, const RoutingMatrix& m);
RoutingMatrix read_matrix_market(std::istream& in);

/// Shortest round-trip decimal formatting used by all text emitters.
std::string format_double(double v);

} // namespace symfb
