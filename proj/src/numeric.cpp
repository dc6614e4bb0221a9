#include "weylcheb/numeric.hpp"

#include <cmath>
#include <optional>
#include <random>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <nlohmann/json.hpp>

#include "weylcheb/genfunc.hpp"

namespace weylcheb {

namespace {

std::vector<double> angles_of(const AnglePoint& pt, std::size_t rank) {
    if (rank == 1) return {pt.phi};
    return {pt.phi, pt.psi};
}

// Per-index stream so reports do not depend on which other indices ran.
std::mt19937_64 make_rng(std::uint64_t seed, const Weight& n) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(n[0]), static_cast<std::uint64_t>(n.size() > 1 ? n[1] : 0)};
    return std::mt19937_64(seq);
}

// Sampling runs in quad precision. Near the identity the denominator can be
// as small as the skip threshold while U_n is in the tens of thousands, so a
// double-precision ratio cannot resolve an absolute error of 1e-8.
using Real = boost::multiprecision::cpp_bin_float_quad;

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

struct RealComplex {
    Real re, im;
};

RealComplex eval_precise(const LaurentPoly& a, const std::vector<double>& angles) {
    static const Real two_pi = 2 * boost::math::constants::pi<Real>();
    RealComplex sum{0, 0};
    for (const auto& [e, c] : a.terms()) {
        Real phase = 0;
        for (std::size_t i = 0; i < angles.size(); ++i) phase += Real(e[i]) * Real(angles[i]);
        phase -= floor(phase);
        const Real t = two_pi * phase, k = to_real(c);
        sum.re += k * cos(t);
        sum.im += k * sin(t);
    }
    return sum;
}

Real abs(const RealComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

RealComplex divide(const RealComplex& a, const RealComplex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

RealComplex operator*(const RealComplex& a, const RealComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RealComplex evaluate_poly(const XYPoly& poly, const std::vector<RealComplex>& vars) {
    RealComplex sum{0, 0};
    for (const auto& [deg, c] : poly.terms()) {
        RealComplex term{to_real(c), 0};
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::int64_t k = 0; k < deg[i]; ++k) term = term * vars[i];
        sum.re += term.re;
        sum.im += term.im;
    }
    return sum;
}

template <class Rhs>
VerificationReport sample(const VariableBasis& basis, const Weight& n, const XYPoly& poly, std::size_t num_samples,
                          double tol, std::uint64_t seed, Rhs&& rhs) {
    if (tol <= 0.0) throw std::invalid_argument("verify: tolerance must be positive");
    if (num_samples == 0) throw std::invalid_argument("verify: need at least one sample");
    VerificationReport report;
    report.index = n;
    report.tolerance = tol;
    auto rng = make_rng(seed, n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t s = 0; s < num_samples; ++s) {
        AnglePoint pt{unit(rng), unit(rng)};
        const auto angles = angles_of(pt, basis.rank());
        const std::optional<RealComplex> expected = rhs(angles);
        if (!expected) {
            ++report.skipped;
            continue;
        }
        std::vector<RealComplex> vars;
        for (const auto& v : basis.var_laurents()) vars.push_back(eval_precise(v, angles));
        const RealComplex lhs = evaluate_poly(poly, vars);
        const double err = abs(RealComplex{lhs.re - expected->re, lhs.im - expected->im}).convert_to<double>();
        ++report.samples;
        if (err >= report.max_abs_error) {
            report.max_abs_error = err;
            report.worst_point = pt;
        }
    }
    if (report.samples == 0) throw AllPointsSingular("verify: every sample was near-singular");
    return report;
}

}  // namespace

std::vector<std::complex<double>> eval_vars(const VariableBasis& basis, const AnglePoint& pt) {
    const auto angles = angles_of(pt, basis.rank());
    std::vector<std::complex<double>> out;
    for (const auto& v : basis.var_laurents()) out.push_back(evaluate_at_angles(v, angles));
    return out;
}

VerificationReport verify_ratio(const VariableBasis& basis, const Weight& n, const XYPoly& poly,
                                std::size_t num_samples, double tol, std::uint64_t seed) {
    const RootSystem& rs = basis.root_system();
    const LaurentPoly num = phi_asym(rs, n + rs.rho);
    const LaurentPoly den = phi_asym(rs, rs.rho);
    return sample(basis, n, poly, num_samples, tol, seed,
                  [&](const std::vector<double>& angles) -> std::optional<RealComplex> {
                      const RealComplex d = eval_precise(den, angles);
                      if (abs(d) < kSingularThreshold) return std::nullopt;
                      return divide(eval_precise(num, angles), d);
                  });
}

VerificationReport verify_ratio(const VariableBasis& basis, std::int64_t m, std::int64_t n, std::size_t num_samples,
                                double tol, std::uint64_t seed) {
    const Weight idx = basis.rank() == 1 ? Weight{m} : Weight{m, n};
    return verify_ratio(basis, idx, second_kind_poly(basis, idx), num_samples, tol, seed);
}

VerificationReport verify_orbit_sum(const VariableBasis& basis, const Weight& n, const XYPoly& poly,
                                    std::size_t num_samples, double tol, std::uint64_t seed) {
    const LaurentPoly orbit_sum = phi_sym(basis.root_system(), n);
    return sample(basis, n, poly, num_samples, tol, seed,
                  [&](const std::vector<double>& angles) -> std::optional<RealComplex> {
                      return eval_precise(orbit_sum, angles);
                  });
}

Rational weyl_dimension(const RootSystem& rs, const Weight& n) {
    const Weight shifted = n + rs.rho;
    Rational d(1);
    for (const auto& alpha : rs.positive_roots) d *= rs.inner(shifted, alpha) / rs.inner(rs.rho, alpha);
    return d;
}

std::pair<Integer, Integer> dimension_check(const VariableBasis& basis, const Weight& n, const XYPoly& poly) {
    std::vector<Rational> identity;
    for (std::size_t i = 0; i < basis.rank(); ++i) identity.push_back(basis.value_at_identity(i));
    const Rational left = evaluate_exact(poly, identity);
    const Rational right = weyl_dimension(basis.root_system(), n);
    if (left.get_den() != 1 || right.get_den() != 1) throw std::logic_error("dimension_check: non-integral value");
    return {left.get_num(), right.get_num()};
}

std::pair<Integer, Integer> dimension_check(const VariableBasis& basis, std::int64_t m, std::int64_t n) {
    const Weight idx = basis.rank() == 1 ? Weight{m} : Weight{m, n};
    return dimension_check(basis, idx, second_kind_poly(basis, idx));
}

nlohmann::json to_json(const VerificationReport& r) {
    return {{"index", std::vector<std::int64_t>(r.index.begin(), r.index.end())},
            {"samples", r.samples},
            {"skipped", r.skipped},
            {"max_abs_error", r.max_abs_error},
            {"worst_point", {r.worst_point.phi, r.worst_point.psi}},
            {"tolerance", r.tolerance},
            {"passed", r.passed()}};
}

}  // namespace weylcheb
