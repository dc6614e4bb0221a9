#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylcheb/orbit.hpp"
#include "weylcheb/rootsystem.hpp"
#include "weylcheb/xypoly.hpp"

namespace weylcheb {

enum class OutputFormat { Json, Latex, Plain };

std::optional<OutputFormat> parse_format(std::string_view s);

struct PolynomialTable {
    AlgebraId algebra;
    Kind kind;
    std::int64_t max_m = 0;
    std::int64_t max_n = 0;
    std::map<Weight, XYPoly> polys;
};

/// Indices in print order: total degree, then larger first index first.
std::vector<Weight> print_order(const PolynomialTable& t);

/// JSON: {"schema": 1, "algebra", "kind", "max_m", "max_n", "polynomials": [{m, n, poly}]}.
std::string render_table(const PolynomialTable& t, OutputFormat fmt);

/// Reads the JSON rendering back.
PolynomialTable table_from_json(std::string_view text);

/// Reads the LaTeX rendering back (algebra/kind/bounds are supplied by the caller).
std::map<Weight, XYPoly> table_from_latex(std::string_view text, std::size_t rank);

}  // namespace weylcheb
