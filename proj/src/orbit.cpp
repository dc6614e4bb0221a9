#include "weylcheb/orbit.hpp"

namespace weylcheb {

std::string_view to_string(Kind k) { return k == Kind::First ? "first" : "second"; }

std::optional<Kind> parse_kind(std::string_view s) {
    if (s == "first" || s == "1") return Kind::First;
    if (s == "second" || s == "2") return Kind::Second;
    return std::nullopt;
}

LaurentPoly phi_sym(const RootSystem& rs, const Weight& n) {
    if (n.size() != rs.rank()) throw RankMismatch("phi_sym: rank mismatch");
    LaurentPoly p(rs.rank());
    for (const auto& w : rs.elements) p.add_term(act(w.matrix, n), Rational(1));
    return p;
}

LaurentPoly phi_asym(const RootSystem& rs, const Weight& k) {
    if (k.size() != rs.rank()) throw RankMismatch("phi_asym: rank mismatch");
    LaurentPoly p(rs.rank());
    for (const auto& w : rs.elements) p.add_term(act(w.matrix, k), Rational(w.det));
    return p;
}

std::vector<LaurentPoly> variable_laurents(const RootSystem& rs, Kind kind) {
    std::vector<LaurentPoly> vars;
    if (kind == Kind::First) {
        for (std::size_t i = 0; i < rs.rank(); ++i) vars.push_back(phi_sym(rs, rs.fundamental_weight(i)));
        return vars;
    }
    const LaurentPoly denominator = phi_asym(rs, rs.rho);
    for (std::size_t i = 0; i < rs.rank(); ++i)
        vars.push_back(exact_divide(phi_asym(rs, rs.fundamental_weight(i) + rs.rho), denominator));
    return vars;
}

}  // namespace weylcheb
