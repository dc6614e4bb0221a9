#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "weylcheb/orbit.hpp"

using namespace weylcheb;

TEST_SUITE("orbit") {
    TEST_CASE("symmetric sums") {
        const RootSystem g2 = build_root_system(AlgebraId::G2);
        CHECK(phi_sym(g2, Weight{0, 0}) == LaurentPoly::constant(2, 12));
        const auto p = phi_sym(g2, Weight{1, 0});
        CHECK(p.size() == 6);
        for (const auto& [e, c] : p.terms()) CHECK(c == 2);
        // Oracle: literal generator table walked over all words.
        LaurentPoly expected(2);
        for (const auto& [mu, sign] : oracle::g2_signed_images(Weight{1, 0})) expected.add_term(mu, 1);
        CHECK(p == expected);

        const RootSystem a1 = build_root_system(AlgebraId::A1);
        CHECK(phi_sym(a1, Weight{1}) == LaurentPoly::monomial(Weight{1}) + LaurentPoly::monomial(Weight{-1}));
    }

    TEST_CASE("singular element") {
        const RootSystem g2 = build_root_system(AlgebraId::G2);
        const auto s = phi_asym(g2, Weight{1, 1});
        CHECK(s == testutil::from_terms(testdata::kG2Singular));
        CHECK(s.size() == 12);
        const auto& bad = testdata::kG2SingularMisprint;
        CHECK(s.coeff(Weight{bad.a, bad.b}) == 0);
    }

    TEST_CASE("antisymmetric sums against the literal generator table") {
        const RootSystem g2 = build_root_system(AlgebraId::G2);
        for (std::int64_t a = -3; a <= 4; ++a)
            for (std::int64_t b = -3; b <= 4; ++b) {
                LaurentPoly expected(2);
                for (const auto& [mu, sign] : oracle::g2_signed_images(Weight{a, b})) expected.add_term(mu, sign);
                CHECK(phi_asym(g2, Weight{a, b}) == expected);
            }
        const auto p = phi_asym(g2, Weight{2, 1});
        CHECK(p.size() == 12);
        CHECK(exact_divide(p, phi_asym(g2, Weight{1, 1})) == testutil::from_terms(testdata::kG2X));
    }

    TEST_CASE("invariance, antisymmetry, wall vanishing, reflection rule") {
        for (auto alg : {AlgebraId::A1, AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
            const RootSystem rs = build_root_system(alg);
            for (std::int64_t a = -4; a <= 4; ++a)
                for (std::int64_t b = -4; b <= 4; ++b) {
                    if (rs.rank() == 1 && b != 0) continue;
                    const Weight k = rs.rank() == 1 ? Weight{a} : Weight{a, b};
                    const auto sym = phi_sym(rs, k), as = phi_asym(rs, k);
                    for (const auto& w : rs.elements) {
                        CHECK(apply_weyl(sym, w) == sym);
                        CHECK(apply_weyl(as, w) == scale(as, w.det));
                        CHECK(phi_asym(rs, act(rs, w, k)) == scale(as, w.det));
                    }
                    bool on_wall = false;
                    for (std::size_t i = 0; i < rs.rank(); ++i) on_wall = on_wall || k[i] == 0;
                    if (on_wall) CHECK(as.is_zero());
                }
        }
    }

    TEST_CASE("multiplication rule") {
        // phi_sym(e_i) * phi_asym(k) = sum_w phi_asym(k + w e_i)
        for (auto alg : {AlgebraId::A1, AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
            const RootSystem rs = build_root_system(alg);
            for (std::size_t i = 0; i < rs.rank(); ++i)
                for (std::int64_t a = 1; a <= 3; ++a)
                    for (std::int64_t b = 1; b <= 3; ++b) {
                        if (rs.rank() == 1 && b > 1) continue;
                        const Weight k = rs.rank() == 1 ? Weight{a} : Weight{a, b};
                        const Weight e = Weight::unit(rs.rank(), i);
                        LaurentPoly rhs(rs.rank());
                        for (const auto& w : rs.elements) rhs += phi_asym(rs, k + act(rs, w, e));
                        CHECK(phi_sym(rs, e) * phi_asym(rs, k) == rhs);
                    }
        }
    }

    TEST_CASE("character quotients divide exactly") {
        for (auto alg : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
            const RootSystem rs = build_root_system(alg);
            const auto den = phi_asym(rs, rs.rho);
            for (std::int64_t a = 0; a <= 8; ++a)
                for (std::int64_t b = 0; b <= 8; ++b) CHECK_NOTHROW(exact_divide(phi_asym(rs, Weight{a, b} + rs.rho), den));
        }
    }

    TEST_CASE("variables") {
        const RootSystem g2 = build_root_system(AlgebraId::G2);
        const auto second = variable_laurents(g2, Kind::Second);
        CHECK(second[0] == testutil::from_terms(testdata::kG2X));
        CHECK(second[0].coeff(Weight{0, 0}) == 1);
        CHECK(second[1] == testutil::from_terms(testdata::kG2Y));
        CHECK(second[1].coeff(Weight{0, 0}) == 2);
        CHECK(second[1].coeff(Weight{3, 2}) == 0);

        const RootSystem a1 = build_root_system(AlgebraId::A1);
        const auto zz = LaurentPoly::monomial(Weight{1}) + LaurentPoly::monomial(Weight{-1});
        CHECK(variable_laurents(a1, Kind::Second)[0] == zz);
        CHECK(variable_laurents(a1, Kind::First)[0] == zz);
        CHECK(variable_laurents(g2, Kind::First)[0] == phi_sym(g2, Weight{1, 0}));
    }

    TEST_CASE("kind names") {
        CHECK(parse_kind("first") == Kind::First);
        CHECK(parse_kind(to_string(Kind::Second)) == Kind::Second);
        CHECK_FALSE(parse_kind("third").has_value());
    }
}
