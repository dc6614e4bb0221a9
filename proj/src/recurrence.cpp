#include "weylcheb/recurrence.hpp"

namespace weylcheb {

NormalizedIndex normalize_index(const RootSystem& rs, const Weight& n) {
    if (n.size() != rs.rank()) throw RankMismatch("normalize_index: rank mismatch");
    const Weight shifted = n + rs.rho;
    const Weight dom = rs.to_dominant(shifted);
    if (!is_strictly_dominant(rs, dom)) return {};
    for (const auto& w : rs.elements) {
        const Weight image = act(w.matrix, shifted);
        if (is_strictly_dominant(rs, image)) return {w.det, image - rs.rho};
    }
    throw std::logic_error("normalize_index: no strictly dominant image");
}

NormalizedIndex normalize_index(const RootSystem& rs, std::int64_t m, std::int64_t n) {
    return normalize_index(rs, Weight{m, n});
}

RecurrenceSolver::RecurrenceSolver(VariableBasis basis) : basis_(std::move(basis)) {
    if (basis_.kind() != Kind::Second) throw std::invalid_argument("RecurrenceSolver: needs the second-kind basis");
    const RootSystem& rs = basis_.root_system();
    const std::size_t rank = rs.rank();
    for (std::size_t i = 0; i < rank; ++i) {
        shifts_.push_back(rs.orbit(rs.fundamental_weight(i)));
        LaurentPoly orbit_sum(rank);
        for (const auto& nu : shifts_.back()) orbit_sum.add_term(nu, Rational(1));
        multipliers_.push_back(reduce(basis_, orbit_sum));
    }
    memo_.emplace(Weight(rank), XYPoly::constant(rank, Rational(1)));
    for (std::size_t i = 0; i < rank; ++i) memo_.emplace(rs.fundamental_weight(i), XYPoly::variable(rank, i));
}

XYPoly RecurrenceSolver::value(const Weight& n) {
    const auto norm = normalize_index(basis_.root_system(), n);
    if (norm.sign == 0) return XYPoly(basis_.rank());
    XYPoly u = get(*norm.index);
    if (norm.sign < 0) u *= Rational(-1);
    return u;
}

const XYPoly& RecurrenceSolver::get(const Weight& n) {
    if (!is_dominant(basis_.root_system(), n)) throw std::invalid_argument("RecurrenceSolver::get: index not dominant");
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    XYPoly u = step(n);
    return memo_.emplace(n, std::move(u)).first->second;
}

XYPoly RecurrenceSolver::step(const Weight& target) {
    const RootSystem& rs = basis_.root_system();
    std::size_t i = 0;
    while (target[i] == 0) ++i;
    const Weight lambda = rs.fundamental_weight(i);
    const Weight base = target - lambda;

    // Every other term has strictly lower height than target, so the
    // recursion terminates.
    XYPoly u = multipliers_[i] * get(base);
    for (const auto& nu : shifts_[i]) {
        if (nu == lambda) continue;
        u -= value(base + nu);
    }
    return u;
}

XYPoly poly_via_recurrence(const VariableBasis& basis, std::int64_t m, std::int64_t n) {
    RecurrenceSolver solver(basis);
    return solver.get(basis.rank() == 1 ? Weight{m} : Weight{m, n});
}

std::map<Weight, XYPoly> recurrence_table(const VariableBasis& basis, std::int64_t max_m, std::int64_t max_n) {
    RecurrenceSolver solver(basis);
    std::map<Weight, XYPoly> table;
    for (std::int64_t m = 0; m <= max_m; ++m) {
        if (basis.rank() == 1) {
            table.emplace(Weight{m}, solver.get(Weight{m}));
            continue;
        }
        for (std::int64_t n = 0; n <= max_n; ++n) table.emplace(Weight{m, n}, solver.get(Weight{m, n}));
    }
    return table;
}

PolyMatrix::PolyMatrix(std::size_t n, std::size_t rank) : n_(n), rank_(rank), a_(n * n, XYPoly(rank)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t rank) {
    PolyMatrix m(n, rank);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = XYPoly::constant(rank, Rational(1));
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r(x.n_, x.rank_);
    for (std::size_t i = 0; i < x.n_; ++i)
        for (std::size_t k = 0; k < x.n_; ++k) {
            if (x(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < x.n_; ++j)
                if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

PolyMatrix operator+(PolyMatrix x, const PolyMatrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
}

PolyMatrix companion_matrix(const std::vector<XYPoly>& first_column) {
    const std::size_t n = first_column.size();
    const std::size_t rank = first_column.front().rank();
    PolyMatrix m(n, rank);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, 0) = first_column[i];
        if (i + 1 < n) m(i, i + 1) = XYPoly::constant(rank, Rational(1));
    }
    return m;
}

Companions build_companions(const VariableBasis& basis) {
    if (basis.root_system().algebra != AlgebraId::G2 || basis.kind() != Kind::Second)
        throw std::invalid_argument("build_companions: defined for G2 second kind only");
    auto p = [](std::string_view s) { return parse_poly(s, 2); };
    const XYPoly x2 = p("x^3 - x + 1 - 3*x*y - 2*y");
    const XYPoly y1 = p("-x + y - 1");
    std::vector<XYPoly> col_x{p("x - 1"), -p("y + 1"), p("x^2 - 1 - 2*y"), -p("y + 1"), p("x - 1"), p("-1")};
    std::vector<XYPoly> col_y{y1, -x2, p("-2*x^3 + x^2 + 2*x - 1 + 4*x*y + 4*y + y^2"), -x2, y1, p("-1")};
    return {companion_matrix(col_x), companion_matrix(col_y)};
}

PolyMatrix evaluate_matrix_polynomial(const std::vector<XYPoly>& coeffs, const PolyMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t rank = coeffs.empty() ? 2 : coeffs.front().rank();
    PolyMatrix acc(n, rank);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

bool minimal_poly_check(const RationalGF& gf, const Companions& companions) {
    if (gf.denominators.size() != 2) return false;
    return evaluate_matrix_polynomial(gf.denominators[0], companions.mx).is_zero() &&
           evaluate_matrix_polynomial(gf.denominators[1], companions.my).is_zero();
}

}  // namespace weylcheb
