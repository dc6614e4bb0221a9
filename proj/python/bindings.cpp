#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "weylcheb/genfunc.hpp"
#include "weylcheb/numeric.hpp"
#include "weylcheb/orbit.hpp"
#include "weylcheb/recurrence.hpp"

namespace py = pybind11;
using namespace weylcheb;

namespace {

AlgebraId algebra_arg(const std::string& name) {
    if (auto a = parse_algebra(name)) return *a;
    throw py::value_error("unknown algebra '" + name + "' (expected a1, a2, c2 or g2)");
}

Kind kind_arg(const std::string& name) {
    if (auto k = parse_kind(name)) return *k;
    throw py::value_error("unknown kind '" + name + "' (expected first or second)");
}

PolyFormat format_arg(const std::string& name) {
    if (name == "plain") return PolyFormat::Plain;
    if (name == "latex") return PolyFormat::Latex;
    throw py::value_error("unknown format '" + name + "' (expected plain or latex)");
}

Weight index(AlgebraId a, const std::vector<std::int64_t>& n) {
    if (n.size() != rank_of(a)) throw py::value_error("index length must equal the rank");
    return n.size() == 1 ? Weight{n[0]} : Weight{n[0], n[1]};
}

py::dict laurent_dict(const LaurentPoly& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) {
        py::tuple key(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
        d[key] = py::module_::import("fractions").attr("Fraction")(c.get_str());
    }
    return d;
}

std::string poly_str(const XYPoly& p, const std::string& fmt) { return format_poly(p, format_arg(fmt)); }

}  // namespace

PYBIND11_MODULE(_weylcheb, m) {
    m.doc() = "Exact multivariate Chebyshev polynomials for A1, A2, C2 and G2";

    m.def("group_order", [](const std::string& a) { return build_root_system(algebra_arg(a)).order(); },
          py::arg("algebra"));

    m.def(
        "weyl_elements",
        [](const std::string& a) {
            const RootSystem rs = build_root_system(algebra_arg(a));
            py::list out;
            for (const auto& w : rs.elements) {
                std::vector<std::vector<std::int64_t>> mat(rs.rank(), std::vector<std::int64_t>(rs.rank()));
                for (std::size_t i = 0; i < rs.rank(); ++i)
                    for (std::size_t j = 0; j < rs.rank(); ++j) mat[i][j] = w.matrix(i, j);
                py::dict d;
                d["matrix"] = mat;
                d["det"] = w.det;
                d["word"] = w.word;
                out.append(d);
            }
            return out;
        },
        py::arg("algebra"), "Group elements as weight-basis matrices with determinant and shortest word.");

    m.def(
        "phi_sym", [](const std::string& a, const std::vector<std::int64_t>& n) {
            const AlgebraId id = algebra_arg(a);
            return laurent_dict(phi_sym(build_root_system(id), index(id, n)));
        },
        py::arg("algebra"), py::arg("index"), "Orbit sum as {exponent: Fraction}.");

    m.def(
        "phi_asym", [](const std::string& a, const std::vector<std::int64_t>& n) {
            const AlgebraId id = algebra_arg(a);
            return laurent_dict(phi_asym(build_root_system(id), index(id, n)));
        },
        py::arg("algebra"), py::arg("index"), "Determinant-signed orbit sum as {exponent: Fraction}.");

    m.def(
        "variables",
        [](const std::string& a, const std::string& kind) {
            py::list out;
            for (const auto& v : variable_laurents(build_root_system(algebra_arg(a)), kind_arg(kind)))
                out.append(laurent_dict(v));
            return out;
        },
        py::arg("algebra"), py::arg("kind") = "second");

    m.def(
        "second_kind_poly",
        [](const std::string& a, const std::vector<std::int64_t>& n, const std::string& fmt) {
            const AlgebraId id = algebra_arg(a);
            return poly_str(second_kind_poly(VariableBasis(build_root_system(id), Kind::Second), index(id, n)), fmt);
        },
        py::arg("algebra"), py::arg("index"), py::arg("format") = "plain");

    m.def(
        "first_kind_poly",
        [](const std::string& a, const std::vector<std::int64_t>& n, const std::string& fmt) {
            const AlgebraId id = algebra_arg(a);
            return poly_str(first_kind_poly(VariableBasis(build_root_system(id), Kind::First), index(id, n)), fmt);
        },
        py::arg("algebra"), py::arg("index"), py::arg("format") = "plain");

    m.def(
        "recurrence_poly",
        [](const std::string& a, const std::vector<std::int64_t>& n, const std::string& fmt) {
            const AlgebraId id = algebra_arg(a);
            RecurrenceSolver solver(VariableBasis(build_root_system(id), Kind::Second));
            return poly_str(solver.value(index(id, n)), fmt);
        },
        py::arg("algebra"), py::arg("index"), py::arg("format") = "plain",
        "Second-kind polynomial from the multiplication-rule recurrence; negative indices are reflected.");

    m.def(
        "polynomial_table",
        [](const std::string& a, const std::string& kind, std::int64_t max_m, std::int64_t max_n,
           const std::string& fmt) {
            if (max_m < 0 || max_n < 0) throw py::value_error("bounds must be nonnegative");
            const AlgebraId id = algebra_arg(a);
            const VariableBasis basis(build_root_system(id), kind_arg(kind));
            py::dict out;
            for (const auto& [k, p] : polynomial_table(basis, max_m, rank_of(id) == 1 ? 0 : max_n)) {
                py::tuple key(k.size());
                for (std::size_t i = 0; i < k.size(); ++i) key[i] = k[i];
                out[key] = poly_str(p, fmt);
            }
            return out;
        },
        py::arg("algebra"), py::arg("kind") = "second", py::arg("max_m") = 4, py::arg("max_n") = 4,
        py::arg("format") = "plain");

    m.def(
        "closed_form_gf",
        [](const std::string& a, const std::string& kind) {
            const auto j = to_json(closed_form_gf(VariableBasis(build_root_system(algebra_arg(a)), kind_arg(kind))));
            return py::module_::import("json").attr("loads")(j.dump());
        },
        py::arg("algebra") = "g2", py::arg("kind") = "second",
        "Denominators P1, P2 and numerator coefficients K as a dict.");

    m.def(
        "verify_ratio",
        [](const std::string& a, const std::vector<std::int64_t>& n, std::size_t samples, double tol,
           std::uint64_t seed) {
            const AlgebraId id = algebra_arg(a);
            const VariableBasis basis(build_root_system(id), Kind::Second);
            const Weight w = index(id, n);
            const auto r = verify_ratio(basis, w, second_kind_poly(basis, w), samples, tol, seed);
            return py::module_::import("json").attr("loads")(to_json(r).dump());
        },
        py::arg("algebra"), py::arg("index"), py::arg("samples") = 100, py::arg("tol") = 1e-8,
        py::arg("seed") = kDefaultSeed);

    m.def(
        "dimension_check",
        [](const std::string& a, const std::vector<std::int64_t>& n) {
            const AlgebraId id = algebra_arg(a);
            const VariableBasis basis(build_root_system(id), Kind::Second);
            const Weight w = index(id, n);
            const auto [left, right] = dimension_check(basis, w, second_kind_poly(basis, w));
            return py::make_tuple(py::int_(py::str(left.get_str())), py::int_(py::str(right.get_str())));
        },
        py::arg("algebra"), py::arg("index"), "(polynomial at the identity, Weyl dimension) as exact integers.");

    py::register_exception<NonDivisible>(m, "NonDivisible", PyExc_ArithmeticError);
    py::register_exception<NotInvariant>(m, "NotInvariant", PyExc_ValueError);
}
