#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "weylcheb/laurent.hpp"
#include "weylcheb/rootsystem.hpp"

namespace weylcheb {

enum class Kind { First, Second };

std::string_view to_string(Kind k);
std::optional<Kind> parse_kind(std::string_view s);

/// Symmetric orbit sum over every group element (non-normalized, so a
/// weight with stabilizer S appears with multiplicity |S|).
LaurentPoly phi_sym(const RootSystem& rs, const Weight& n);

/// Determinant-signed orbit sum; vanishes for weights on a chamber wall.
LaurentPoly phi_asym(const RootSystem& rs, const Weight& k);

/// Generalized cosines: phi_sym(e_i) for the first kind, character
/// quotients phi_asym(e_i + rho) / phi_asym(rho) for the second.
std::vector<LaurentPoly> variable_laurents(const RootSystem& rs, Kind kind);

}  // namespace weylcheb
