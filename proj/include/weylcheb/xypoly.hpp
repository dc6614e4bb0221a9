#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "weylcheb/types.hpp"

namespace weylcheb {

/// Graded lexicographic order, largest first: higher total degree wins,
/// ties broken by the first exponent.
struct GradedLexDescending {
    bool operator()(const Degrees& a, const Degrees& b) const noexcept {
        if (a.total() != b.total()) return a.total() > b.total();
        return b < a;
    }
};

/// Polynomial with rational coefficients in the generalized cosines
/// (x for rank 1; x, y for rank 2).
class XYPoly {
public:
    using TermMap = std::map<Degrees, Rational, GradedLexDescending>;

    explicit XYPoly(std::size_t rank) : rank_(rank) {}

    static XYPoly constant(std::size_t rank, const Rational& c);
    static XYPoly monomial(const Degrees& degrees, const Rational& c = Rational(1));
    static XYPoly variable(std::size_t rank, std::size_t i);

    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coeff(const Degrees& d) const;
    void add_term(const Degrees& d, const Rational& c);

    std::int64_t total_degree() const;
    bool has_integer_coefficients() const;

    XYPoly& operator+=(const XYPoly& o);
    XYPoly& operator-=(const XYPoly& o);
    XYPoly& operator*=(const Rational& r);

    friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
    friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }
    friend XYPoly operator-(XYPoly a) { return a *= Rational(-1); }
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
    friend XYPoly operator*(XYPoly a, const Rational& r) { return a *= r; }
    friend XYPoly operator*(const Rational& r, XYPoly a) { return a *= r; }

    friend bool operator==(const XYPoly& a, const XYPoly& b) { return a.rank_ == b.rank_ && a.terms_ == b.terms_; }

private:
    void check_rank(const XYPoly& o) const;

    std::size_t rank_;
    TermMap terms_;
};

enum class PolyFormat { Plain, Latex };

/// Terms in canonical (descending graded lex) order. Plain: "x^2*y - x - 1";
/// LaTeX: "x^{2}y-x-1".
std::string format_poly(const XYPoly& p, PolyFormat fmt = PolyFormat::Plain);
std::ostream& operator<<(std::ostream& os, const XYPoly& p);

/// Parses either output format and the juxtaposed "2x^2y" shorthand.
XYPoly parse_poly(std::string_view text, std::size_t rank);

std::complex<double> evaluate(const XYPoly& p, std::span<const std::complex<double>> point);
Rational evaluate_exact(const XYPoly& p, std::span<const Rational> point);

}  // namespace weylcheb
