#include <optional>
#include <string>
#include <utility>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "codo/errors.hpp"
#include "codo/families.hpp"
#include "codo/io.hpp"
#include "codo/spectral.hpp"

namespace py = pybind11;

namespace {

// operators travel together with the extension d of their session
struct PyOperator {
    codo::DiffOperator op;
    codo::Rational d = codo::Rational(0);
};

codo::Rational rat(const std::string& s) { return codo::Rational::from_string(s); }

codo::Scalar scal(const std::string& s) { return codo::Scalar(rat(s)); }

py::dict pair_dict(const codo::BuiltPair& bp) {
    py::dict constants;
    for (const auto& [id, value] : bp.constants.assignment)
        constants[py::str(id.to_string())] = value.to_string();
    py::dict out;
    out["l"] = PyOperator{bp.L, bp.d};
    out["m"] = PyOperator{bp.M, bp.d};
    out["constants"] = constants;
    out["window_orders"] =
        bp.window.unbounded() ? py::object(py::none()) : py::cast(bp.window.orders());
    return out;
}

py::dict relation_dict(const codo::DiffOperator& l, const codo::DiffOperator& m,
                       int degz) {
    codo::RelationResult rel = codo::find_quadratic_relation(l, m, degz);
    py::dict out;
    out["relation"] = rel.curve.to_string();
    out["unique"] = rel.unique;
    if (rel.curve.wdegree() == 2) {
        codo::Reducibility red = codo::reducibility_quadratic(rel.curve);
        out["discriminant"] = red.discriminant.to_string("z");
        out["reducible"] = red.reducible;
        if (red.reducible)
            out["factors"] = py::make_tuple(red.f1.to_string(), red.f2.to_string());
        out["nonsingular"] = codo::nonsingular_hyperelliptic(red.discriminant);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_codo, mod) {
    mod.doc() = "exact commuting pairs of 2x2 matrix differential operators";

    py::register_exception<codo::Error>(mod, "CodoError");

    py::class_<PyOperator>(mod, "Operator")
        .def_property_readonly("order", [](const PyOperator& o) { return o.op.order(); })
        .def_property_readonly("size", [](const PyOperator& o) { return o.op.size(); })
        .def_property_readonly("d", [](const PyOperator& o) { return o.d.to_string(); })
        .def("is_zero", [](const PyOperator& o) { return o.op.is_zero(); })
        .def("render", [](const PyOperator& o) { return codo::render_operator(o.op, o.d); })
        .def("__eq__",
             [](const PyOperator& a, const PyOperator& b) {
                 return a.op == b.op && a.d == b.d;
             })
        .def("__repr__", [](const PyOperator& o) {
            return "<codo.Operator of order " + std::to_string(o.op.order()) + ">";
        });

    mod.def(
        "parse_operator",
        [](const std::string& text) {
            codo::ParsedOperator p = codo::parse_operator(text);
            return PyOperator{std::move(p.op), std::move(p.d)};
        },
        py::arg("text"), "Parse an operator document.");

    mod.def(
        "build_theorem2",
        [](int n, const std::string& alpha0, const std::string& alpha2,
           const std::string& beta, const std::string& mu1, const std::string& mu2,
           std::optional<std::string> gamma) {
            codo::Theorem2Params p;
            p.n = n;
            p.alpha0 = rat(alpha0);
            p.alpha2 = rat(alpha2);
            p.beta = rat(beta);
            p.mu1 = scal(mu1);
            p.mu2 = scal(mu2);
            if (gamma) p.gamma = scal(*gamma);
            return pair_dict(codo::build_theorem2(p));
        },
        py::arg("n"), py::arg("alpha0"), py::arg("alpha2"), py::arg("beta"),
        py::arg("mu1") = "1", py::arg("mu2") = "-1", py::arg("gamma") = py::none(),
        "Build the polynomial-coefficient commuting pair of order (2, 4n).");

    mod.def(
        "build_theorem3",
        [](int n, const std::string& g2, const std::string& mu1, const std::string& mu2,
           int trunc) {
            codo::Theorem3Params p;
            p.n = n;
            p.g2 = rat(g2);
            p.mu1 = scal(mu1);
            p.mu2 = scal(mu2);
            p.trunc = trunc;
            return pair_dict(codo::build_theorem3(p));
        },
        py::arg("n"), py::arg("g2"), py::arg("mu1") = "1", py::arg("mu2") = "-1",
        py::arg("trunc") = 0,
        "Build the Weierstrass-coefficient commuting pair of order (2, 4n).");

    mod.def(
        "commutes",
        [](const PyOperator& a, const PyOperator& b) {
            return codo::commutator(a.op, b.op).is_zero();
        },
        py::arg("a"), py::arg("b"), "True iff [a, b] = 0 (through any truncation).");

    mod.def(
        "commutator_defect",
        [](const PyOperator& a, const PyOperator& b) -> py::object {
            std::optional<codo::OpCoordinate> w =
                codo::first_nonzero(codo::commutator(a.op, b.op));
            if (!w) return py::none();
            return py::str(w->to_string());
        },
        py::arg("a"), py::arg("b"),
        "Location of the first nonzero coefficient of [a, b], or None.");

    mod.def(
        "find_relation",
        [](const PyOperator& l, const PyOperator& m, int degz) {
            return relation_dict(l.op, m.op, degz);
        },
        py::arg("l"), py::arg("m"), py::arg("degz"),
        "Minimal w-linear or w-quadratic relation R with R(l, m) = 0.");
}
