#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylcheb/laurent.hpp"
#include "weylcheb/polynomialize.hpp"
#include "weylcheb/rootsystem.hpp"
#include "weylcheb/xypoly.hpp"

namespace weylcheb {

/// Diagonal of M_k: the exponent w_j . lambda_k for every group element w_j,
/// in the order of RootSystem::elements.
struct DiagonalExpMatrix {
    std::vector<Weight> entries;
    std::vector<int> signs;  // det w_j
};

DiagonalExpMatrix diagonal_matrix(const RootSystem& rs, std::size_t k);

enum class SignClass { Plus, Minus, Difference, All };

/// Coefficient of p_1^{n_1} ... p_d^{n_d} in tr(R_1 ... R_d) restricted to a
/// sign class: sum over positions j of z^{sum_k n_k mu_{k,j}}.
LaurentPoly coefficient_trace(const RootSystem& rs, SignClass signs, const Weight& degrees);
LaurentPoly coefficient_trace(const RootSystem& rs, SignClass signs, std::int64_t m, std::int64_t n);

/// U_n as a polynomial in the second-kind variables.
XYPoly second_kind_poly(const VariableBasis& basis, const Weight& n);
XYPoly second_kind_poly(const VariableBasis& basis, std::int64_t m, std::int64_t n);

/// Non-normalized first-kind polynomial: the orbit sum Phi_n in the first-kind variables.
XYPoly first_kind_poly(const VariableBasis& basis, const Weight& n);

/// Polynomials of the basis kind for every index in [0,max_m] x [0,max_n]
/// (max_n ignored at rank 1), keyed by index.
std::map<Weight, XYPoly> polynomial_table(const VariableBasis& basis, std::int64_t max_m, std::int64_t max_n);

/// Closed form F = K / (P_1 ... P_d) of the generating function.
struct RationalGF {
    AlgebraId algebra;
    Kind kind;
    /// Coefficient lists of P_k in its formal parameter, constant term first.
    std::vector<std::vector<XYPoly>> denominators;
    /// Nonzero numerator coefficients K, keyed by the exponent tuple (i, j).
    std::map<Degrees, XYPoly> numerator;

    XYPoly numerator_at(const Degrees& ij) const;
};

RationalGF closed_form_gf(const VariableBasis& basis);

struct SeriesCheckResult {
    bool ok = true;
    std::optional<Weight> first_mismatch;
    std::string report;
};

/// Expands K / (P_1 P_2) as a power series to (max_m, max_n) by long
/// division and compares every coefficient with the direct polynomials.
SeriesCheckResult gf_series_check(const RationalGF& gf, const VariableBasis& basis, std::int64_t max_m,
                                  std::int64_t max_n);

/// Series coefficients of K / (P_1 ... P_d) up to the given degrees.
std::map<Weight, XYPoly> gf_series(const RationalGF& gf, std::int64_t max_m, std::int64_t max_n);

nlohmann::json to_json(const RationalGF& gf, PolyFormat fmt = PolyFormat::Plain);

}  // namespace weylcheb
