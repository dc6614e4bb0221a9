#include <doctest.h>

#include "test_util.hpp"
#include "weylcheb/orbit.hpp"
#include "weylcheb/polynomialize.hpp"

using namespace weylcheb;
using testutil::xy;

namespace {

LaurentPoly quotient(const RootSystem& rs, const Weight& n) {
    return exact_divide(phi_asym(rs, n + rs.rho), phi_asym(rs, rs.rho));
}

}  // namespace

TEST_SUITE("polynomialize") {
    TEST_CASE("reduce on tabulated entries") {
        const VariableBasis basis(build_root_system(AlgebraId::G2), Kind::Second);
        const RootSystem& rs = basis.root_system();
        CHECK(reduce(basis, quotient(rs, Weight{2, 0})) == xy("x^2-x-y-1"));
        CHECK(reduce(basis, quotient(rs, Weight{1, 1})) == xy("-x^2+xy+y+1"));
        CHECK(reduce(basis, LaurentPoly::constant(2, 1)) == XYPoly::constant(2, 1));
        CHECK(reduce(basis, LaurentPoly(2)).is_zero());
    }

    TEST_CASE("expand") {
        const VariableBasis basis(build_root_system(AlgebraId::G2), Kind::Second);
        CHECK(expand(basis, xy("x")) == basis.var_laurents()[0]);
        CHECK(expand(basis, xy("x^2-x-y-1")) == quotient(basis.root_system(), Weight{2, 0}));
        CHECK(expand(basis, XYPoly(2)).is_zero());
        const auto sq = basis.var_laurents()[0] * basis.var_laurents()[0];
        CHECK(sq.size() == 19);
        CHECK(reduce(basis, sq) == xy("x^2"));
    }

    TEST_CASE("reduce rejects non-invariant input") {
        const VariableBasis basis(build_root_system(AlgebraId::G2), Kind::Second);
        CHECK_THROWS_AS(reduce(basis, LaurentPoly::monomial(Weight{1, 0})), NotInvariant);
    }

    TEST_CASE("round trips with bounded step counts") {
        for (auto alg : {AlgebraId::A1, AlgebraId::A2, AlgebraId::C2, AlgebraId::G2})
            for (auto kind : {Kind::First, Kind::Second}) {
                const VariableBasis basis(build_root_system(alg), kind);
                const std::size_t r = basis.rank();
                for (int iter = 0; iter < 30; ++iter) {
                    const XYPoly p = testutil::random_xypoly(r, 6);
                    CHECK(reduce(basis, expand(basis, p)) == p);
                }
                const RootSystem& rs = basis.root_system();
                for (std::int64_t a = 0; a <= 8; ++a)
                    for (std::int64_t b = 0; b <= (r == 1 ? 0 : 8); ++b) {
                        const Weight n = r == 1 ? Weight{a} : Weight{a, b};
                        const LaurentPoly f = kind == Kind::Second ? quotient(rs, n) : phi_sym(rs, n);
                        ReduceStats stats;
                        const XYPoly p = reduce(basis, f, &stats);
                        CHECK(expand(basis, p) == f);
                        CHECK(stats.steps <= stats.step_bound);
                        if (kind == Kind::Second) CHECK(p.has_integer_coefficients());
                    }
            }
    }

    TEST_CASE("first-kind leading coefficients are stabilizer orders") {
        const VariableBasis basis(build_root_system(AlgebraId::G2), Kind::First);
        CHECK(basis.leading_coeffs()[0] == 2);
        CHECK(basis.leading_coeffs()[1] == 2);
        CHECK(basis.value_at_identity(0) == 12);
        const VariableBasis second(build_root_system(AlgebraId::G2), Kind::Second);
        CHECK(second.value_at_identity(0) == 7);
        CHECK(second.value_at_identity(1) == 14);
    }

    TEST_CASE("dominance order") {
        const RootSystem rs = build_root_system(AlgebraId::G2);
        CHECK(dominance_compare(rs, Weight{1, 0}, Weight{1, 0}) == Dominance::Equal);
        CHECK(dominance_compare(rs, Weight{0, 0}, Weight{1, 1}) == Dominance::Less);
        CHECK(dominance_compare(rs, Weight{1, 1}, Weight{0, 0}) == Dominance::Greater);
        // lambda2 - lambda1 = (-1,1) = alpha1 + alpha2 in root coordinates.
        CHECK(dominance_compare(rs, Weight{1, 0}, Weight{0, 1}) == Dominance::Less);
        CHECK(dominance_compare(rs, Weight{0, 1}, Weight{1, 0}) == Dominance::Greater);
        for (std::int64_t a = -3; a <= 3; ++a)
            for (std::int64_t b = -3; b <= 3; ++b)
                for (std::int64_t c = -3; c <= 3; ++c)
                    for (std::int64_t d = -3; d <= 3; ++d) {
                        const auto ab = dominance_compare(rs, Weight{a, b}, Weight{c, d});
                        const auto ba = dominance_compare(rs, Weight{c, d}, Weight{a, b});
                        if (ab == Dominance::Less) CHECK(ba == Dominance::Greater);
                        if (ab == Dominance::Incomparable) CHECK(ba == Dominance::Incomparable);
                        if (ab == Dominance::Less) CHECK(rs.scaled_height(Weight{a, b}) < rs.scaled_height(Weight{c, d}));
                    }
        CHECK(count_dominant_below(rs, Weight{0, 0}) == 1);
        CHECK(count_dominant_below(rs, Weight{1, 0}) == 2);
    }
}
