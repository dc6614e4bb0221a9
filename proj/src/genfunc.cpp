#include "weylcheb/genfunc.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace weylcheb {

DiagonalExpMatrix diagonal_matrix(const RootSystem& rs, std::size_t k) {
    DiagonalExpMatrix m;
    const Weight lambda = rs.fundamental_weight(k);
    for (const auto& w : rs.elements) {
        m.entries.push_back(act(w.matrix, lambda));
        m.signs.push_back(w.det);
    }
    return m;
}

LaurentPoly coefficient_trace(const RootSystem& rs, SignClass signs, const Weight& degrees) {
    if (degrees.size() != rs.rank()) throw RankMismatch("coefficient_trace: rank mismatch");
    for (auto v : degrees)
        if (v < 0) throw std::invalid_argument("coefficient_trace: negative power");
    std::vector<DiagonalExpMatrix> mats;
    for (std::size_t k = 0; k < rs.rank(); ++k) mats.push_back(diagonal_matrix(rs, k));

    LaurentPoly out(rs.rank());
    for (std::size_t j = 0; j < rs.order(); ++j) {
        const int sign = mats[0].signs[j];
        Rational c;
        switch (signs) {
            case SignClass::Plus: c = sign > 0 ? 1 : 0; break;
            case SignClass::Minus: c = sign < 0 ? 1 : 0; break;
            case SignClass::Difference: c = sign; break;
            case SignClass::All: c = 1; break;
        }
        if (sgn(c) == 0) continue;
        Weight e(rs.rank());
        for (std::size_t k = 0; k < rs.rank(); ++k) e += degrees[k] * mats[k].entries[j];
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly coefficient_trace(const RootSystem& rs, SignClass signs, std::int64_t m, std::int64_t n) {
    return coefficient_trace(rs, signs, Weight{m, n});
}

XYPoly second_kind_poly(const VariableBasis& basis, const Weight& n) {
    if (basis.kind() != Kind::Second) throw std::invalid_argument("second_kind_poly: basis must be of the second kind");
    const RootSystem& rs = basis.root_system();
    const LaurentPoly num = coefficient_trace(rs, SignClass::Difference, n + rs.rho);
    const LaurentPoly den = coefficient_trace(rs, SignClass::Difference, rs.rho);
    return reduce(basis, exact_divide(num, den));
}

XYPoly second_kind_poly(const VariableBasis& basis, std::int64_t m, std::int64_t n) {
    return second_kind_poly(basis, Weight{m, n});
}

XYPoly first_kind_poly(const VariableBasis& basis, const Weight& n) {
    if (basis.kind() != Kind::First) throw std::invalid_argument("first_kind_poly: basis must be of the first kind");
    if (!is_dominant(basis.root_system(), n)) throw std::invalid_argument("first_kind_poly: negative index");
    return reduce(basis, phi_sym(basis.root_system(), n));
}

namespace {

XYPoly poly_of_kind(const VariableBasis& basis, const Weight& n) {
    return basis.kind() == Kind::Second ? second_kind_poly(basis, n) : first_kind_poly(basis, n);
}

std::vector<Weight> index_range(std::size_t rank, std::int64_t max_m, std::int64_t max_n) {
    std::vector<Weight> out;
    for (std::int64_t m = 0; m <= max_m; ++m) {
        if (rank == 1) {
            out.push_back(Weight{m});
            continue;
        }
        for (std::int64_t n = 0; n <= max_n; ++n) out.push_back(Weight{m, n});
    }
    return out;
}

}  // namespace

std::map<Weight, XYPoly> polynomial_table(const VariableBasis& basis, std::int64_t max_m, std::int64_t max_n) {
    std::map<Weight, XYPoly> table;
    for (const auto& n : index_range(basis.rank(), max_m, max_n)) table.emplace(n, poly_of_kind(basis, n));
    return table;
}

XYPoly RationalGF::numerator_at(const Degrees& ij) const {
    auto it = numerator.find(ij);
    return it == numerator.end() ? XYPoly(ij.size()) : it->second;
}

RationalGF closed_form_gf(const VariableBasis& basis) {
    const RootSystem& rs = basis.root_system();
    const std::size_t rank = rs.rank();
    RationalGF gf{rs.algebra, basis.kind(), {}, {}};

    // P_k(t) = prod over the orbit of lambda_k of (1 - t z^mu); its
    // coefficients are signed elementary symmetric functions of the orbit.
    for (std::size_t k = 0; k < rank; ++k) {
        std::vector<LaurentPoly> coeffs{LaurentPoly::constant(rank, Rational(1))};
        for (const auto& mu : rs.orbit(rs.fundamental_weight(k))) {
            const LaurentPoly factor = LaurentPoly::monomial(mu, Rational(-1));
            coeffs.push_back(LaurentPoly(rank));
            for (std::size_t i = coeffs.size() - 1; i > 0; --i) coeffs[i] += coeffs[i - 1] * factor;
        }
        std::vector<XYPoly> reduced;
        for (const auto& c : coeffs) reduced.push_back(reduce(basis, c));
        gf.denominators.push_back(std::move(reduced));
    }

    // K = F * P_1 * ... * P_d. The numerator degree is below deg P_k in each
    // parameter; one extra row/column is computed to confirm it vanishes.
    std::vector<std::int64_t> deg(rank);
    for (std::size_t k = 0; k < rank; ++k) deg[k] = static_cast<std::int64_t>(gf.denominators[k].size()) - 1;
    const std::int64_t max_m = deg[0];
    const std::int64_t max_n = rank > 1 ? deg[1] : 0;
    const auto series = polynomial_table(basis, max_m, max_n);

    for (const auto& [ij, unused] : series) {
        XYPoly k(rank);
        for (const auto& [ab, u] : series) {
            bool below = true;
            for (std::size_t t = 0; t < rank; ++t) below = below && ab[t] <= ij[t];
            if (!below) continue;
            XYPoly term = u;
            for (std::size_t t = 0; t < rank; ++t) term = term * gf.denominators[t][static_cast<std::size_t>(ij[t] - ab[t])];
            k += term;
        }
        if (k.is_zero()) continue;
        for (std::size_t t = 0; t < rank; ++t)
            if (ij[t] >= deg[t]) {
                std::ostringstream os;
                os << "closed_form_gf: numerator coefficient " << ij << " does not vanish";
                throw ConvolutionNotTerminating(os.str());
            }
        gf.numerator.emplace(to_degrees(ij), std::move(k));
    }
    return gf;
}

std::map<Weight, XYPoly> gf_series(const RationalGF& gf, std::int64_t max_m, std::int64_t max_n) {
    const std::size_t rank = gf.denominators.size();
    if (rank == 1) max_n = 0;

    // G = K / P_2 along the second parameter, then F = G / P_1 along the
    // first. Both denominators have constant term 1.
    std::map<Weight, XYPoly> g, f;
    auto at = [rank](const std::map<Weight, XYPoly>& s, std::int64_t i, std::int64_t j) -> XYPoly {
        if (i < 0 || j < 0) return XYPoly(rank);
        auto it = s.find(rank == 1 ? Weight{i} : Weight{i, j});
        return it == s.end() ? XYPoly(rank) : it->second;
    };
    auto key = [rank](std::int64_t i, std::int64_t j) { return rank == 1 ? Weight{i} : Weight{i, j}; };
    auto numerator = [&](std::int64_t i, std::int64_t j) {
        return gf.numerator_at(rank == 1 ? Degrees{i} : Degrees{i, j});
    };

    for (std::int64_t i = 0; i <= max_m; ++i)
        for (std::int64_t j = 0; j <= max_n; ++j) {
            XYPoly v = numerator(i, j);
            if (rank > 1) {
                const auto& p2 = gf.denominators[1];
                for (std::size_t t = 1; t < p2.size() && static_cast<std::int64_t>(t) <= j; ++t)
                    v -= p2[t] * at(g, i, j - static_cast<std::int64_t>(t));
            }
            g.emplace(key(i, j), std::move(v));
        }
    const auto& p1 = gf.denominators[0];
    for (std::int64_t i = 0; i <= max_m; ++i)
        for (std::int64_t j = 0; j <= max_n; ++j) {
            XYPoly v = at(g, i, j);
            for (std::size_t t = 1; t < p1.size() && static_cast<std::int64_t>(t) <= i; ++t)
                v -= p1[t] * at(f, i - static_cast<std::int64_t>(t), j);
            f.emplace(key(i, j), std::move(v));
        }
    return f;
}

SeriesCheckResult gf_series_check(const RationalGF& gf, const VariableBasis& basis, std::int64_t max_m,
                                  std::int64_t max_n) {
    SeriesCheckResult result;
    const auto series = gf_series(gf, max_m, max_n);
    const auto direct = polynomial_table(basis, max_m, max_n);
    std::size_t compared = 0;
    for (const auto& [idx, poly] : direct) {
        ++compared;
        if (series.at(idx) != poly) {
            result.ok = false;
            result.first_mismatch = idx;
            std::ostringstream os;
            os << "mismatch at " << idx << ": series gives " << series.at(idx) << ", direct gives " << poly;
            result.report = os.str();
            return result;
        }
    }
    result.report = std::to_string(compared) + " coefficients agree";
    return result;
}

nlohmann::json to_json(const RationalGF& gf, PolyFormat fmt) {
    nlohmann::json j;
    j["schema"] = 1;
    j["algebra"] = std::string(to_string(gf.algebra));
    j["kind"] = std::string(to_string(gf.kind));
    const char* names[] = {"P1", "P2"};
    for (std::size_t k = 0; k < gf.denominators.size(); ++k) {
        auto arr = nlohmann::json::array();
        for (const auto& c : gf.denominators[k]) arr.push_back(format_poly(c, fmt));
        j[names[k]] = std::move(arr);
    }
    auto ks = nlohmann::json::array();
    for (const auto& [ij, poly] : gf.numerator) {
        nlohmann::json rec;
        rec["i"] = ij[0];
        if (ij.size() > 1) rec["j"] = ij[1];
        rec["poly"] = format_poly(poly, fmt);
        ks.push_back(std::move(rec));
    }
    j["K"] = std::move(ks);
    return j;
}

}  // namespace weylcheb
