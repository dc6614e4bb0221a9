#include <doctest.h>

#include "test_util.hpp"
#include "weylcheb/xypoly.hpp"

using namespace weylcheb;
using testutil::xy;

TEST_SUITE("xypoly") {
    TEST_CASE("canonical order and formatting") {
        const XYPoly p = xy("-1 - y - x + x^2");
        CHECK(format_poly(p) == "x^2 - x - y - 1");
        CHECK(format_poly(p, PolyFormat::Latex) == "x^{2}-x-y-1");
        CHECK(format_poly(XYPoly(2)) == "0");
        CHECK(p.total_degree() == 2);
        CHECK(p.has_integer_coefficients());
        CHECK_FALSE(xy("\\frac{1}{2}x").has_integer_coefficients());
    }

    TEST_CASE("parser accepts shorthand, plain and LaTeX forms") {
        const XYPoly expected = XYPoly::monomial(Degrees{2, 1}, 2) - XYPoly::monomial(Degrees{0, 3}) + XYPoly::constant(2, 5);
        CHECK(xy("2x^2y-y^3+5") == expected);
        CHECK(xy("2*x^2*y - y^3 + 5") == expected);
        CHECK(xy("2x^{2}y-y^{3}+5") == expected);
        CHECK(xy("x - x") == XYPoly(2));
        CHECK(xy("\\frac{1}{2}x") == XYPoly::monomial(Degrees{1, 0}, Rational(1, 2)));
        CHECK_THROWS(xy("x^"));
        CHECK_THROWS(xy("z"));
        CHECK_THROWS(parse_poly("y", 1));
    }

    TEST_CASE("format and parse round trip") {
        for (int iter = 0; iter < 200; ++iter) {
            const XYPoly p = testutil::random_xypoly(iter % 3 ? 2 : 1, 7);
            CHECK(parse_poly(format_poly(p), p.rank()) == p);
            CHECK(parse_poly(format_poly(p, PolyFormat::Latex), p.rank()) == p);
        }
    }

    TEST_CASE("ring operations") {
        for (int iter = 0; iter < 100; ++iter) {
            const XYPoly a = testutil::random_xypoly(2, 4), b = testutil::random_xypoly(2, 4),
                         c = testutil::random_xypoly(2, 4);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a - a).is_zero());
        }
        CHECK_THROWS(XYPoly(2).add_term(Degrees{-1, 0}, 1));
    }

    TEST_CASE("evaluation") {
        const XYPoly p = xy("-x^2+xy+y+1");
        const Rational at[] = {7, 14};
        CHECK(evaluate_exact(p, at) == 64);
        const std::complex<double> z[] = {{7, 0}, {14, 0}};
        CHECK(evaluate(p, z).real() == doctest::Approx(64));
    }
}
