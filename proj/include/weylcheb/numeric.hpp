#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylcheb/polynomialize.hpp"
#include "weylcheb/xypoly.hpp"

namespace weylcheb {

/// Angles in the co-root basis, each in [0, 1). Rank-1 systems ignore psi.
struct AnglePoint {
    double phi = 0.0;
    double psi = 0.0;
};

struct VerificationReport {
    Weight index;
    std::size_t samples = 0;
    double max_abs_error = 0.0;
    AnglePoint worst_point;
    std::size_t skipped = 0;
    double tolerance = 0.0;

    bool passed() const noexcept { return max_abs_error < tolerance; }
};

inline constexpr double kSingularThreshold = 1e-6;
inline constexpr std::uint64_t kDefaultSeed = 20161017;

/// Variable values at z_k = exp(2 pi i angle_k).
std::vector<std::complex<double>> eval_vars(const VariableBasis& basis, const AnglePoint& pt);

/// Compares the polynomial U_n at eval_vars(pt) with the ratio
/// phi_asym(n + rho) / phi_asym(rho) over uniformly random points. Points with
/// |phi_asym(rho)| below kSingularThreshold are skipped and counted.
VerificationReport verify_ratio(const VariableBasis& basis, const Weight& n, const XYPoly& poly,
                                std::size_t num_samples, double tol, std::uint64_t seed = kDefaultSeed);
VerificationReport verify_ratio(const VariableBasis& basis, std::int64_t m, std::int64_t n, std::size_t num_samples,
                                double tol, std::uint64_t seed = kDefaultSeed);

/// First-kind analogue: polynomial value against the orbit sum phi_sym(n).
VerificationReport verify_orbit_sum(const VariableBasis& basis, const Weight& n, const XYPoly& poly,
                                    std::size_t num_samples, double tol, std::uint64_t seed = kDefaultSeed);

/// Exact value of the polynomial at the identity point paired with the Weyl
/// dimension formula prod_{alpha > 0} (n + rho, alpha) / (rho, alpha).
std::pair<Integer, Integer> dimension_check(const VariableBasis& basis, const Weight& n, const XYPoly& poly);
std::pair<Integer, Integer> dimension_check(const VariableBasis& basis, std::int64_t m, std::int64_t n);

Rational weyl_dimension(const RootSystem& rs, const Weight& n);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace weylcheb
