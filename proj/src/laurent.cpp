#include "weylcheb/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace weylcheb {

LaurentPoly::LaurentPoly(std::size_t rank, TermMap terms) : rank_(rank), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != rank_) throw RankMismatch("LaurentPoly: exponent rank mismatch");
        it->second.canonicalize();
        it = (sgn(it->second) == 0) ? terms_.erase(it) : std::next(it);
    }
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Rational& c) {
    LaurentPoly p(rank);
    p.add_term(Weight(rank), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Weight& exponent, const Rational& c) {
    LaurentPoly p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

Rational LaurentPoly::coeff(const Weight& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Weight& exponent, const Rational& c) {
    if (exponent.size() != rank_) throw RankMismatch("LaurentPoly: exponent rank mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (inserted) {
        it->second.canonicalize();  // callers may pass an unreduced p/q
    } else {
        Rational reduced = c;
        reduced.canonicalize();
        it->second += reduced;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
    if (o.rank_ != rank_) throw RankMismatch("LaurentPoly: rank mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= r;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_rank(b);
    LaurentPoly r(a.rank_);
    Rational prod;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ea + eb, prod);
        }
    return r;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly negate(const LaurentPoly& a) { return -a; }
LaurentPoly scale(const LaurentPoly& a, const Rational& r) { return a * r; }

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.rank() != den.rank()) throw RankMismatch("exact_divide: rank mismatch");
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    LaurentPoly quotient(num.rank());
    if (num.is_zero()) return quotient;

    // Per-coordinate exponent ranges add under multiplication, so every
    // quotient exponent lies in a finite box; leaving it means a remainder.
    const auto& [den_lead, den_lead_coeff] = *den.terms().rbegin();
    const std::size_t rank = num.rank();
    auto bounds = [rank](const LaurentPoly& p) {
        Weight lo = p.terms().begin()->first, hi = lo;
        for (const auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < rank; ++i) {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        return std::pair{lo, hi};
    };
    const auto [num_lo, num_hi] = bounds(num);
    const auto [den_lo, den_hi] = bounds(den);
    const Weight box_lo = num_lo - den_lo;
    const Weight box_hi = num_hi - den_hi;

    LaurentPoly::TermMap rem = num.terms();
    while (!rem.empty()) {
        const auto& [lead, lead_coeff] = *rem.rbegin();
        const Weight q_exp = lead - den_lead;
        for (std::size_t i = 0; i < rank; ++i)
            if (q_exp[i] < box_lo[i] || q_exp[i] > box_hi[i]) throw NonDivisible("exact_divide: nonzero remainder");
        const Rational q_coeff = lead_coeff / den_lead_coeff;
        for (const auto& [e, c] : den.terms()) {
            const Weight target = q_exp + e;
            auto [it, inserted] = rem.try_emplace(target, -q_coeff * c);
            if (!inserted) {
                it->second -= q_coeff * c;
                if (sgn(it->second) == 0) rem.erase(it);
            }
        }
        quotient.add_term(q_exp, q_coeff);
    }
    return quotient;
}

std::complex<double> evaluate(const LaurentPoly& a, std::span<const std::complex<double>> point) {
    if (point.size() != a.rank()) throw RankMismatch("evaluate: point rank mismatch");
    for (const auto& z : point)
        if (z == std::complex<double>(0.0, 0.0)) throw std::invalid_argument("evaluate: zero component");
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : a.terms()) {
        std::complex<double> term(c.get_d(), 0.0);
        for (std::size_t i = 0; i < a.rank(); ++i) term *= std::pow(point[i], static_cast<int>(e[i]));
        sum += term;
    }
    return sum;
}

std::complex<double> evaluate_at_angles(const LaurentPoly& a, std::span<const double> angles) {
    if (angles.size() != a.rank()) throw RankMismatch("evaluate_at_angles: rank mismatch");
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : a.terms()) {
        // Reduce the phase mod 1 before scaling by 2 pi.
        long double phase = 0.0L;
        for (std::size_t i = 0; i < a.rank(); ++i) phase += static_cast<long double>(e[i]) * angles[i];
        phase -= std::floor(phase);
        const double t = 2.0 * std::numbers::pi * static_cast<double>(phase);
        sum += c.get_d() * std::complex<double>(std::cos(t), std::sin(t));
    }
    return sum;
}

LaurentPoly apply_weyl(const LaurentPoly& a, const WeylElement& w) {
    if (w.matrix.size() != a.rank()) throw RankMismatch("apply_weyl: rank mismatch");
    LaurentPoly::TermMap out;
    for (const auto& [e, c] : a.terms()) out.emplace(act(w.matrix, e), c);
    return LaurentPoly(a.rank(), std::move(out));
}

std::string to_string(const LaurentPoly& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) {
    if (a.is_zero()) return os << '0';
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        os << (first ? "" : " + ") << c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) os << "*z" << (i + 1) << "^" << e[i];
        first = false;
    }
    return os;
}

nlohmann::json to_json(const LaurentPoly& a) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : a.terms()) {
        arr.push_back({{"exponent", std::vector<std::int64_t>(e.begin(), e.end())}, {"coeff", c.get_str()}});
    }
    return arr;
}

LaurentPoly laurent_from_json(const nlohmann::json& j, std::size_t rank) {
    LaurentPoly p(rank);
    for (const auto& rec : j) {
        const auto exps = rec.at("exponent").get<std::vector<std::int64_t>>();
        if (exps.size() != rank) throw RankMismatch("laurent_from_json: exponent rank mismatch");
        Weight w(rank);
        for (std::size_t i = 0; i < rank; ++i) w[i] = exps[i];
        Rational c(rec.at("coeff").get<std::string>());
        c.canonicalize();
        p.add_term(w, c);
    }
    return p;
}

}  // namespace weylcheb
