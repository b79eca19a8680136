#pragma once

#include <optional>

#include "parse.hpp"

namespace hensel {

enum class Role { Square, Implicit, Variety };

/// A parsed system file: ring header, variable list, named polynomials,
/// optional base point, role annotation and optional avoid polynomial.
struct SystemSpec {
    RingPtr ring;
    VarsPtr vars;
    std::vector<std::string> poly_names;
    std::vector<MultiPoly> polys;
    std::vector<Scalar> point; // empty = unspecified (origin)
    Role role = Role::Square;
    int role_index = 0; // r for implicit, dim for variety
    std::optional<MultiPoly> avoid;

    PolyMap as_map() const { return PolyMap(ring, vars, polys); }
    std::vector<Elem> base_elems() const;
    friend bool operator==(const SystemSpec& a, const SystemSpec& b);
};

// Parse the plain-text system format. Diagnostics carry line/column.
SystemSpec parse_system(const std::string& text);

// Canonical re-rendering; parse_system(print_system(s)) == s.
std::string print_system(const SystemSpec& spec);

} // namespace hensel
