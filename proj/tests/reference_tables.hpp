#pragma once

// Reference G2 data: second-kind polynomials U_{m,n}, generating-function
// denominators and numerator coefficients, the variables x and y, and the
// singular element. Strings keep the original term order.

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "weylcheb/types.hpp"
#include "weylcheb/xypoly.hpp"

namespace weylcheb::testdata {

struct ReferencePoly {
    int m;
    int n;
    std::string_view text;
};

inline constexpr std::array<ReferencePoly, 15> kG2SecondKind{{
    {0, 0, "1"},
    {1, 0, "x"},
    {0, 1, "y"},
    {2, 0, "x^2-x-y-1"},
    {1, 1, "-x^2+xy+y+1"},
    {0, 2, "-x^3+2xy+y^2+2x+y"},
    {3, 0, "-2xy-x-x^2-y+x^3"},
    {2, 1, "-y+x+x^2-y^2-x^3+x^2y"},
    {1, 2, "2x^2-x-1-x^4+x^2y+x^3+y^2+xy^2"},
    {0, 3, "-2x^3y+4xy^2+3y^2+4xy+2y-x^3-x^2+x^4-2x^2y+y^3"},
    {4, 0, "y^2+2y+x-3x^2y-x^2-x^3+x^4"},
    {3, 1, "2x^3-2y^2-2x-2y+x^2y+x^3y-2xy^2-2xy-x^4+x^2"},
    {2, 2, "1+2x^3-2y^2-x-x^5-y^3-x^2y+2x^3y-2xy^2-4xy+x^2y^2+2x^4-4x^2"},
    {1, 3, "-4x^3+y^2+2x+2x^5+y^3+4x^2y-4x^3y+4xy^2+6xy+3x^2y^2-2x^4y+xy^3-2x^4+2x^2"},
    {0, 4, "-1+2x^3+4y^2-x-2y-x^5+5y^3+6x^2y-2x^3y+9xy^2+2xy-2x^4y-3x^3y^2+6xy^3-3x^4+3x^2+x^6+y^4"},
}};

inline std::vector<XYPoly> reference_p1() {
    auto p = [](std::string_view s) { return parse_poly(s, 2); };
    return {p("1"), p("1-x"), p("y+1"), -p("x^2-2y-1"), p("y+1"), p("1-x"), p("1")};
}

inline std::vector<XYPoly> reference_p2() {
    auto p = [](std::string_view s) { return parse_poly(s, 2); };
    return {p("1"),
            p("x-y+1"),
            p("x^3-3xy-2y-x+1"),
            -p("y^2-2x^3+4xy+6y+x^2-2y+2x-1"),
            p("x^3-3xy-2y-x+1"),
            p("x-y+1"),
            p("1")};
}

inline constexpr std::array<ReferencePoly, 19> kG2Numerator{{
    {0, 0, "1"},
    {1, 0, "1"},
    {0, 1, "x+1"},
    {0, 2, "x+1"},
    {1, 1, "-x^2+x+y+2"},
    {0, 3, "1"},
    {1, 2, "-x^2+x+1"},
    {2, 1, "y+1"},
    {3, 1, "1-x"},
    {1, 3, "1-x"},
    {2, 2, "-x^2+xy+y+2x+1"},
    {4, 1, "1"},
    {2, 3, "y+1"},
    {3, 2, "-x^2+x+1"},
    {3, 3, "-x^2+x+y+2"},
    {4, 2, "x+1"},
    {3, 4, "1"},
    {4, 3, "x+1"},
    {4, 4, "1"},
}};

struct ReferenceTerm {
    std::int64_t a;
    std::int64_t b;
    int coeff;
};

// x = U_{1,0}: seven unit exponentials including the constant.
inline constexpr std::array<ReferenceTerm, 7> kG2X{{
    {-1, 0, 1}, {1, -1, 1}, {-2, 1, 1}, {2, -1, 1}, {-1, 1, 1}, {1, 0, 1}, {0, 0, 1},
}};

// y = U_{0,1}. The orbit of lambda_2 contains (-3,2); kG2YMisprint is the
// mistyped (3,2) variant, which must not appear.
inline constexpr std::array<ReferenceTerm, 13> kG2Y{{
    {-3, 1, 1}, {0, -1, 1}, {3, -2, 1}, {3, -1, 1}, {-3, 2, 1}, {0, 1, 1}, {-1, 0, 1},
    {1, -1, 1}, {-2, 1, 1}, {2, -1, 1}, {-1, 1, 1}, {1, 0, 1}, {0, 0, 2},
}};
inline constexpr ReferenceTerm kG2YMisprint{3, 2, 1};

// Phi^as_{1,1}. Antisymmetry under w0 = -1 forces (-5,3) in the eighth place;
// kG2SingularMisprint is the mistyped (-5,-3) variant.
inline constexpr std::array<ReferenceTerm, 12> kG2Singular{{
    {1, 1, 1},  {-1, 2, -1}, {-4, 3, 1}, {4, -1, -1}, {5, -2, 1},  {5, -3, -1},
    {-5, 2, 1}, {-5, 3, -1}, {4, -3, 1}, {1, -2, -1}, {-1, -1, 1}, {-4, 1, -1},
}};
inline constexpr ReferenceTerm kG2SingularMisprint{-5, -3, -1};

}  // namespace weylcheb::testdata
