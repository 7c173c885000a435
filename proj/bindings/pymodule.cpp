#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motivic/expr.hpp"
#include "motivic/format.hpp"
#include "motivic/group_classes.hpp"
#include "motivic/recursion.hpp"
#include "motivic/series.hpp"

namespace py = pybind11;
using namespace motivic;

namespace {

py::object to_py_int(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int int_from_py(const py::object& o) {
    return int_from_decimal(py::str(o).cast<std::string>());
}

Rational rational_from_py(const py::object& o) {
    return rational_from_string(py::str(o).cast<std::string>());
}

py::object to_py_fraction(const Rational& v) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(v.str());
}

MotivicClass class_from_py(const py::object& o) {
    if (py::isinstance<MotivicClass>(o)) return o.cast<MotivicClass>();
    if (py::isinstance<py::int_>(o)) return MotivicClass::from_int(int_from_py(o));
    throw py::type_error("expected MotivicClass or int");
}

MotivicClass py_class_of(const std::string& kind, long long n) {
    auto gk = group_kind_from_name(kind);
    if (!gk) throw py::value_error("unknown group kind '" + kind + "'");
    return class_of({*gk, n});
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic in Z[L] localized at L and L^n - 1, with the classes of "
              "BO_n, BSO_n and SO_n, their defining recursion, and Laurent expansion.";

    py::register_exception<NotAUnitError>(m, "NotAUnitError", PyExc_ArithmeticError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<UnsupportedSpecError>(m, "UnsupportedSpecError", PyExc_ValueError);

    py::class_<MotivicClass>(m, "MotivicClass")
        .def(py::init([](const py::object& o) { return class_from_py(o); }),
             "Construct a constant class from an integer.")
        .def_static("from_json", [](const std::string& s) {
            return class_from_json(nlohmann::json::parse(s));
        })
        .def_property_readonly("sign", &MotivicClass::sign)
        .def_property_readonly("lpow", &MotivicClass::lpow)
        .def("is_zero", &MotivicClass::is_zero)
        .def("is_one", &MotivicClass::is_one)
        .def("inv", &MotivicClass::inv)
        .def("degree",
             [](const MotivicClass& a) -> py::object {
                 auto d = a.degree();
                 return d ? py::cast(*d) : py::none();
             })
        .def("eval_at",
             [](const MotivicClass& a, const py::object& q) {
                 return to_py_fraction(a.eval_at(rational_from_py(q)));
             },
             py::arg("q"), "Exact value of the rational function at L = q (int, Fraction or 'p/q').")
        .def("plain", [](const MotivicClass& a) { return to_plain(a); })
        .def("latex", [](const MotivicClass& a) { return to_latex(a); })
        .def("json", [](const MotivicClass& a) { return to_json(a).dump(); })
        .def("__str__", [](const MotivicClass& a) { return to_plain(a); })
        .def("__repr__", [](const MotivicClass& a) { return "MotivicClass(" + to_plain(a) + ")"; })
        .def("__hash__", [](const MotivicClass& a) { return py::hash(py::str(to_json(a).dump())); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def("__add__", [](const MotivicClass& a, const py::int_& b) { return a + MotivicClass::from_int(int_from_py(b)); })
        .def("__radd__", [](const MotivicClass& a, const py::int_& b) { return MotivicClass::from_int(int_from_py(b)) + a; })
        .def("__sub__", [](const MotivicClass& a, const py::int_& b) { return a - MotivicClass::from_int(int_from_py(b)); })
        .def("__rsub__", [](const MotivicClass& a, const py::int_& b) { return MotivicClass::from_int(int_from_py(b)) - a; })
        .def("__mul__", [](const MotivicClass& a, const py::int_& b) { return a * MotivicClass::from_int(int_from_py(b)); })
        .def("__rmul__", [](const MotivicClass& a, const py::int_& b) { return MotivicClass::from_int(int_from_py(b)) * a; })
        .def("__truediv__", [](const MotivicClass& a, const py::int_& b) { return a / MotivicClass::from_int(int_from_py(b)); })
        .def("__rtruediv__", [](const MotivicClass& a, const py::int_& b) { return MotivicClass::from_int(int_from_py(b)) / a; })
        .def("__pow__", [](const MotivicClass& a, long long e) { return a.pow(e); });

    py::class_<LaurentTail>(m, "LaurentTail")
        .def_readonly("leading_exp", &LaurentTail::leading_exp)
        .def_readonly("order", &LaurentTail::order)
        .def("is_zero", &LaurentTail::is_zero)
        .def("coeff_at", [](const LaurentTail& t, long long e) { return to_py_int(t.coeff_at(e)); })
        .def("coeffs",
             [](const LaurentTail& t) {
                 py::list out;
                 for (const auto& c : t.coeffs) out.append(to_py_int(c));
                 return out;
             })
        .def("terms",
             [](const LaurentTail& t) {
                 py::list out;
                 for (long long e = t.leading_exp; e >= t.order; --e) {
                     Int c = t.coeff_at(e);
                     if (c != 0) out.append(py::make_tuple(e, to_py_int(c)));
                 }
                 return out;
             },
             "Nonzero (exponent, coefficient) pairs, descending.")
        .def("__str__", [](const LaurentTail& t) { return to_plain(t); })
        .def("__repr__", [](const LaurentTail& t) { return "LaurentTail(" + to_plain(t) + ")"; })
        .def(py::self == py::self);

    py::class_<DerivationStep>(m, "DerivationStep")
        .def_property_readonly("label", [](const DerivationStep& s) { return step_label_name(s.label); })
        .def_readonly("formula", &DerivationStep::formula)
        .def_readonly("anchor", &DerivationStep::anchor)
        .def_readonly("value", &DerivationStep::value)
        .def("__repr__", [](const DerivationStep& s) {
            return "DerivationStep(" + step_label_name(s.label) + ": " + s.formula + ")";
        });

    py::class_<DerivationTrace>(m, "DerivationTrace")
        .def_property_readonly("group", [](const DerivationTrace& t) { return group_kind_name(t.group); })
        .def_readonly("n", &DerivationTrace::n)
        .def_readonly("steps", &DerivationTrace::steps)
        .def_readonly("final", &DerivationTrace::final)
        .def("json", [](const DerivationTrace& t) { return to_json(t).dump(); })
        .def("__str__", [](const DerivationTrace& t) { return format_trace(t, OutputFormat::Plain); });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("passed", &VerifyReport::passed)
        .def_readonly("n_max", &VerifyReport::n_max)
        .def_readonly("checks_run", &VerifyReport::checks_run)
        .def_readonly("first_failure", &VerifyReport::first_failure)
        .def("__bool__", [](const VerifyReport& r) { return r.passed; })
        .def("__repr__", [](const VerifyReport& r) {
            return std::string("VerifyReport(") + (r.passed ? "passed" : "FAILED: " + r.first_failure) +
                   ", checks_run=" + std::to_string(r.checks_run) + ")";
        });

    m.attr("L") = MotivicClass::lefschetz();
    m.def("zero", &MotivicClass::zero);
    m.def("one", &MotivicClass::one);
    m.def("lpower", &MotivicClass::lpower, py::arg("e"), "L^e");
    m.def("cyclotomic",
          [](long long d) { return MotivicClass::from_poly(cyclotomic(d)); },
          py::arg("d"), "The d-th cyclotomic polynomial Phi_d(L) as a class.");
    m.def("class_of", &py_class_of, py::arg("kind"), py::arg("n") = 0,
          "Class of a group or classifying stack: kind is one of O, SO, GL, SL, BO, BSO, "
          "BGL, BSL, Gm, Ga, Bmu2.");
    m.def("evaluate",
          [](const std::string& text) { return eval_expr(*parse(text)); },
          py::arg("text"), "Parse and evaluate an expression such as 'BSO(7) * SO(7)'.");
    m.def("expand", &expand, py::arg("a"), py::arg("order"),
          "Laurent expansion in descending powers of L, truncated below L^order.");
    m.def("tails_equal", &tails_equal, py::arg("a"), py::arg("b"), py::arg("order"));
    m.def("filtration_degree",
          [](const MotivicClass& a) -> py::object {
              auto d = filtration_degree(a);
              return d ? py::cast(*d) : py::none();
          },
          py::arg("a"), "Degree in L; None for the zero class.");
    m.def("in_piece", &in_piece, py::arg("a"), py::arg("m"));
    m.def("affine_bundle_class", &affine_bundle_class, py::arg("base"), py::arg("d"));
    m.def("semidirect_vector_class", &semidirect_vector_class, py::arg("base_bg"), py::arg("d"));
    m.def("special_torsor_class", &special_torsor_class, py::arg("group_class"), py::arg("base_class"));
    m.def("trace_bo", [](long long n) { return recurse_bo(n).second; }, py::arg("n"),
          "Derivation trace for {BO_n} computed by the stratification recursion.");
    m.def("trace_bso", [](long long n) { return recurse_bso(n).second; }, py::arg("n"),
          "Derivation trace for {BSO_n}.");
    m.def("verify_theorem", &verify_theorem, py::arg("n_max"),
          "Check recursion against closed forms and the parity relations for 2 <= n <= n_max.");

    m.attr("__version__") = "0.1.0";
}
