#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weylcheb/genfunc.hpp"
#include "weylcheb/polynomialize.hpp"
#include "weylcheb/xypoly.hpp"

namespace weylcheb {

/// U_n for an arbitrary integer index n, written as sign * U_index with a
/// dominant index, or zero when n + rho lies on a chamber wall.
struct NormalizedIndex {
    int sign = 0;
    std::optional<Weight> index;
};

NormalizedIndex normalize_index(const RootSystem& rs, const Weight& n);
NormalizedIndex normalize_index(const RootSystem& rs, std::int64_t m, std::int64_t n);

/// Second-kind polynomials from the multiplication rule
///   O_i * U_n = sum over nu in W.lambda_i of U_{n + nu},
/// where O_i is the orbit sum of lambda_i written in the second-kind
/// variables (x - 1 and y - x - 1 for G2). Solving for the nu = lambda_i
/// term gives every U from ones of strictly lower height.
class RecurrenceSolver {
public:
    explicit RecurrenceSolver(VariableBasis basis);

    const VariableBasis& basis() const noexcept { return basis_; }

    /// O_i in the second-kind variables.
    const std::vector<XYPoly>& multipliers() const noexcept { return multipliers_; }
    /// Distinct weights of W.lambda_i.
    const std::vector<std::vector<Weight>>& shifts() const noexcept { return shifts_; }

    /// U_n for dominant n.
    const XYPoly& get(const Weight& n);
    /// U_n for any integer n, resolved through normalize_index.
    XYPoly value(const Weight& n);

    std::size_t cached() const noexcept { return memo_.size(); }

private:
    XYPoly step(const Weight& target);

    VariableBasis basis_;
    std::vector<XYPoly> multipliers_;
    std::vector<std::vector<Weight>> shifts_;
    std::map<Weight, XYPoly> memo_;
};

XYPoly poly_via_recurrence(const VariableBasis& basis, std::int64_t m, std::int64_t n);

/// Same index range and keys as polynomial_table, computed by the recurrence.
std::map<Weight, XYPoly> recurrence_table(const VariableBasis& basis, std::int64_t max_m, std::int64_t max_n);

/// Square matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix(std::size_t n, std::size_t rank);
    static PolyMatrix identity(std::size_t n, std::size_t rank);

    std::size_t size() const noexcept { return n_; }
    XYPoly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const XYPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator+(PolyMatrix x, const PolyMatrix& y);
    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

private:
    std::size_t n_;
    std::size_t rank_;
    std::vector<XYPoly> a_;
};

/// Companion matrix: first column holds the recurrence coefficients, ones on
/// the superdiagonal.
PolyMatrix companion_matrix(const std::vector<XYPoly>& first_column);

struct Companions {
    PolyMatrix mx;
    PolyMatrix my;
};

/// The G2 matrices M_x, M_y with the single-index recurrence coefficients.
Companions build_companions(const VariableBasis& basis);

/// coeffs[0] I + coeffs[1] M + ... by Horner's rule.
PolyMatrix evaluate_matrix_polynomial(const std::vector<XYPoly>& coeffs, const PolyMatrix& m);

/// True iff P_1(M_x) and P_2(M_y) both vanish.
bool minimal_poly_check(const RationalGF& gf, const Companions& companions);

}  // namespace weylcheb
