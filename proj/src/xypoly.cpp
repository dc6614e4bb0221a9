#include "weylcheb/xypoly.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace weylcheb {

namespace {

constexpr std::string_view kVarNames = "xy";

// Plain repeated multiplication; exponents here are small.
template <class T>
T ipow(T base, std::int64_t e) {
    T r(1);
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

XYPoly XYPoly::constant(std::size_t rank, const Rational& c) {
    XYPoly p(rank);
    p.add_term(Degrees(rank), c);
    return p;
}

XYPoly XYPoly::monomial(const Degrees& degrees, const Rational& c) {
    XYPoly p(degrees.size());
    p.add_term(degrees, c);
    return p;
}

XYPoly XYPoly::variable(std::size_t rank, std::size_t i) { return monomial(Degrees::unit(rank, i)); }

Rational XYPoly::coeff(const Degrees& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
}

void XYPoly::add_term(const Degrees& d, const Rational& c) {
    if (d.size() != rank_) throw RankMismatch("XYPoly: degree rank mismatch");
    for (auto v : d)
        if (v < 0) throw std::invalid_argument("XYPoly: negative degree");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (inserted) {
        it->second.canonicalize();  // callers may pass an unreduced p/q
    } else {
        Rational reduced = c;
        reduced.canonicalize();
        it->second += reduced;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::int64_t XYPoly::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

bool XYPoly::has_integer_coefficients() const {
    for (const auto& [d, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

void XYPoly::check_rank(const XYPoly& o) const {
    if (o.rank_ != rank_) throw RankMismatch("XYPoly: rank mismatch");
}

XYPoly& XYPoly::operator+=(const XYPoly& o) {
    check_rank(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

XYPoly& XYPoly::operator-=(const XYPoly& o) {
    check_rank(o);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

XYPoly& XYPoly::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, c] : terms_) c *= r;
    return *this;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
    a.check_rank(b);
    XYPoly r(a.rank_);
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    return r;
}

std::string format_poly(const XYPoly& p, PolyFormat fmt) {
    if (p.is_zero()) return "0";
    const bool latex = fmt == PolyFormat::Latex;
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << '-';
        } else if (latex) {
            os << (negative ? '-' : '+');
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        const Rational mag = abs(c);
        const bool is_const = d.is_zero();
        if (mag != 1 || is_const) {
            if (latex && mag.get_den() != 1)
                os << "\\frac{" << mag.get_num() << "}{" << mag.get_den() << "}";
            else
                os << mag;
            if (!is_const && !latex) os << '*';
        }
        bool first_var = true;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0) continue;
            if (!first_var && !latex) os << '*';
            first_var = false;
            os << kVarNames[i];
            if (d[i] > 1) {
                if (latex)
                    os << "^{" << d[i] << '}';
                else
                    os << '^' << d[i];
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const XYPoly& p) { return os << format_poly(p); }

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t rank) : rank_(rank) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    XYPoly parse() {
        XYPoly p(rank_);
        if (s_.empty()) fail("empty input");
        while (pos_ < s_.size()) parse_term(p);
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    bool peek(char ch) const { return pos_ < s_.size() && s_[pos_] == ch; }
    bool accept(char ch) {
        if (!peek(ch)) return false;
        ++pos_;
        return true;
    }
    bool accept(std::string_view word) {
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }
    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }

    Integer parse_integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(s_.substr(start, pos_ - start));
    }

    std::int64_t parse_exponent() {
        const bool braced = accept('{');
        const Integer e = parse_integer();
        if (braced) expect('}');
        return e.get_si();
    }

    void parse_term(XYPoly& p) {
        Rational coeff(1);
        if (accept('-'))
            coeff = -1;
        else
            accept('+');

        bool have_factor = false;
        if (accept("\\frac{")) {
            const Integer num = parse_integer();
            expect('}');
            expect('{');
            const Integer den = parse_integer();
            expect('}');
            coeff *= Rational(num, den);
            have_factor = true;
        } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Integer num = parse_integer();
            Integer den(1);
            if (accept('/')) den = parse_integer();
            Rational r(num, den);
            r.canonicalize();
            coeff *= r;
            have_factor = true;
        }

        Degrees d(rank_);
        for (;;) {
            const std::size_t save = pos_;
            if (have_factor) accept('*');
            if (pos_ >= s_.size()) {
                pos_ = save;
                break;
            }
            const auto var = kVarNames.find(s_[pos_]);
            if (var == std::string_view::npos || var >= rank_) {
                pos_ = save;
                break;
            }
            ++pos_;
            std::int64_t e = 1;
            if (accept('^')) e = parse_exponent();
            d[var] += e;
            have_factor = true;
        }
        if (!have_factor) fail("expected a coefficient or variable");
        if (pos_ < s_.size() && !peek('+') && !peek('-')) fail("unexpected character");
        p.add_term(d, coeff);
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t rank_;
};

}  // namespace

XYPoly parse_poly(std::string_view text, std::size_t rank) { return PolyParser(text, rank).parse(); }

std::complex<double> evaluate(const XYPoly& p, std::span<const std::complex<double>> point) {
    if (point.size() != p.rank()) throw RankMismatch("evaluate: point rank mismatch");
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [d, c] : p.terms()) {
        std::complex<double> t(c.get_d(), 0.0);
        for (std::size_t i = 0; i < d.size(); ++i) t *= ipow(point[i], d[i]);
        sum += t;
    }
    return sum;
}

Rational evaluate_exact(const XYPoly& p, std::span<const Rational> point) {
    if (point.size() != p.rank()) throw RankMismatch("evaluate_exact: point rank mismatch");
    // Powers are shared across terms; the degree tables stay small.
    std::vector<std::vector<Rational>> powers(p.rank());
    for (const auto& [d, c] : p.terms())
        for (std::size_t i = 0; i < d.size(); ++i) {
            auto& pw = powers[i];
            if (pw.empty()) pw.emplace_back(1);
            while (static_cast<std::int64_t>(pw.size()) <= d[i]) pw.push_back(pw.back() * point[i]);
        }
    Rational sum(0);
    for (const auto& [d, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < d.size(); ++i) t *= powers[i][static_cast<std::size_t>(d[i])];
        sum += t;
    }
    return sum;
}

}  // namespace weylcheb
