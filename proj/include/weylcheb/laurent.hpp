#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylcheb/rootsystem.hpp"
#include "weylcheb/types.hpp"

namespace weylcheb {

/// Sparse Laurent polynomial in z_1..z_d with rational coefficients; the
/// monomial z^mu stands for exp(2 pi i (mu, phi)). Terms are kept in
/// lexicographic exponent order with no zero coefficients stored.
class LaurentPoly {
public:
    using TermMap = std::map<Weight, Rational>;

    explicit LaurentPoly(std::size_t rank) : rank_(rank) {}
    LaurentPoly(std::size_t rank, TermMap terms);

    static LaurentPoly constant(std::size_t rank, const Rational& c);
    static LaurentPoly monomial(const Weight& exponent, const Rational& c = Rational(1));

    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient at an exponent (zero if absent).
    Rational coeff(const Weight& exponent) const;

    /// Adds c z^exponent in place.
    void add_term(const Weight& exponent, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& r);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& r) { return a *= r; }
    friend LaurentPoly operator*(const Rational& r, LaurentPoly a) { return a *= r; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    void check_rank(const LaurentPoly& o) const;

    std::size_t rank_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly negate(const LaurentPoly& a);
LaurentPoly scale(const LaurentPoly& a, const Rational& r);

/// Quotient q with q * den == num. Throws NonDivisible on a nonzero remainder.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

std::complex<double> evaluate(const LaurentPoly& a, std::span<const std::complex<double>> point);

/// Value at z = exp(2 pi i phi) for angle coordinates phi (one per rank).
std::complex<double> evaluate_at_angles(const LaurentPoly& a, std::span<const double> angles);

LaurentPoly apply_weyl(const LaurentPoly& a, const WeylElement& w);

std::string to_string(const LaurentPoly& a);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

/// [{"exponent": [..], "coeff": "p/q"}, ...] in term order.
nlohmann::json to_json(const LaurentPoly& a);
LaurentPoly laurent_from_json(const nlohmann::json& j, std::size_t rank);

}  // namespace weylcheb
