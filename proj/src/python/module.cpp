#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zmgb/io.hpp"
#include "zmgb/normalform.hpp"
#include "zmgb/recursive.hpp"
#include "zmgb/vanishing.hpp"

namespace py = pybind11;

namespace pybind11::detail {

/// Moves arbitrary-precision integers across the boundary as decimal
/// strings; Python ints of any size map to zmgb::Int and back losslessly.
template <>
struct type_caster<zmgb::Int> {
    PYBIND11_TYPE_CASTER(zmgb::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        PyObject* text = PyObject_Str(src.ptr());
        if (!text)
            return false;
        const char* chars = PyUnicode_AsUTF8(text);
        const bool ok = chars && value.set_str(chars, 10) == 0;
        Py_DECREF(text);
        return ok;
    }

    static handle cast(const zmgb::Int& src, return_value_policy, handle) {
        return handle(PyLong_FromString(src.get_str().c_str(), nullptr, 10));
    }
};

} // namespace pybind11::detail

namespace {

zmgb::ExponentVector to_exponents(const std::vector<std::uint32_t>& alpha) {
    return zmgb::ExponentVector(alpha);
}

py::tuple exponents_to_py(const zmgb::ExponentVector& alpha) {
    py::tuple out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        out[i] = alpha[i];
    return out;
}

py::tuple entry_to_py(const zmgb::BasisEntry& e) {
    return py::make_tuple(exponents_to_py(e.alpha), e.a);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Groebner bases of vanishing ideals over Z/m: construction, reduced "
              "normal forms, function counting and equivalence of polynomial "
              "expressions";

    py::enum_<zmgb::MonomialOrder>(m, "MonomialOrder")
        .value("lex", zmgb::MonomialOrder::lex)
        .value("deglex", zmgb::MonomialOrder::deglex)
        .value("degrevlex", zmgb::MonomialOrder::degrevlex);

    py::class_<zmgb::Modulus>(m, "Modulus")
        .def(py::init<zmgb::Int>(), py::arg("m"))
        .def_property_readonly("value", &zmgb::Modulus::value)
        .def("__int__", [](const zmgb::Modulus& m_) { return m_.value(); })
        .def(py::self == py::self)
        .def("__repr__", [](const zmgb::Modulus& m_) {
            return "Modulus(" + m_.value().get_str() + ")";
        });
    py::implicitly_convertible<py::int_, zmgb::Modulus>();

    py::class_<zmgb::Polynomial>(m, "Polynomial")
        .def_property_readonly("nvars", &zmgb::Polynomial::nvars)
        .def_property_readonly("modulus",
                               [](const zmgb::Polynomial& f) { return f.modulus().value(); })
        .def("is_zero", &zmgb::Polynomial::is_zero)
        .def("term_count", &zmgb::Polynomial::term_count)
        .def("total_degree", &zmgb::Polynomial::total_degree)
        .def("evaluate",
             [](const zmgb::Polynomial& f, const std::vector<zmgb::Int>& point) {
                 return f.evaluate(point);
             },
             py::arg("point"))
        .def("leading_term",
             [](const zmgb::Polynomial& f, zmgb::MonomialOrder order) {
                 const zmgb::Term t = f.leading_term(order);
                 return py::make_tuple(t.coeff, exponents_to_py(t.exponents));
             },
             py::arg("order") = zmgb::MonomialOrder::lex)
        .def("terms",
             [](const zmgb::Polynomial& f) {
                 py::list out;
                 for (const auto& [alpha, coeff] : f.terms())
                     out.append(py::make_tuple(exponents_to_py(alpha), coeff));
                 return out;
             })
        .def("coefficient",
             [](const zmgb::Polynomial& f, const std::vector<std::uint32_t>& alpha) {
                 return f.coefficient(to_exponents(alpha));
             },
             py::arg("alpha"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self);

    py::class_<zmgb::RingContext>(m, "Ring")
        .def(py::init<zmgb::Modulus, std::vector<std::string>>(), py::arg("modulus"),
             py::arg("names"))
        .def_property_readonly("modulus",
                               [](const zmgb::RingContext& c) { return c.modulus().value(); })
        .def_property_readonly("nvars", &zmgb::RingContext::nvars)
        .def_property_readonly("names", &zmgb::RingContext::names)
        .def("parse",
             [](const zmgb::RingContext& c, const std::string& text) {
                 return zmgb::parse_poly(text, c);
             },
             py::arg("text"))
        .def("format",
             [](const zmgb::RingContext& c, const zmgb::Polynomial& f,
                zmgb::MonomialOrder order) { return zmgb::format_poly(f, c, order); },
             py::arg("f"), py::arg("order") = zmgb::MonomialOrder::lex)
        .def("zero",
             [](const zmgb::RingContext& c) {
                 return zmgb::Polynomial(c.modulus(), c.nvars());
             })
        .def("constant",
             [](const zmgb::RingContext& c, const zmgb::Int& v) {
                 return zmgb::Polynomial::constant(c.modulus(), c.nvars(), v);
             },
             py::arg("value"))
        .def("variable",
             [](const zmgb::RingContext& c, std::size_t i) {
                 if (i >= c.nvars())
                     throw std::out_of_range("variable index out of range");
                 return zmgb::Polynomial::variable(c.modulus(), c.nvars(), i);
             },
             py::arg("i"));

    py::class_<zmgb::GroebnerBasis>(m, "GroebnerBasis")
        .def_property_readonly("modulus",
                               [](const zmgb::GroebnerBasis& g) { return g.modulus().value(); })
        .def_property_readonly("nvars", &zmgb::GroebnerBasis::nvars)
        .def("entries",
             [](const zmgb::GroebnerBasis& g) {
                 py::list out;
                 for (const zmgb::BasisEntry& e : g.entries())
                     out.append(entry_to_py(e));
                 return out;
             })
        .def("polynomials", &zmgb::GroebnerBasis::polynomials)
        .def("__len__", &zmgb::GroebnerBasis::size)
        .def("__contains__",
             [](const zmgb::GroebnerBasis& g, const py::tuple& pair) {
                 if (pair.size() != 2)
                     return false;
                 auto alpha = pair[0].cast<std::vector<std::uint32_t>>();
                 auto a = pair[1].cast<zmgb::Int>();
                 return g.contains(zmgb::BasisEntry{to_exponents(alpha), std::move(a)});
             })
        .def(py::self == py::self);

    m.def("smarandache", &zmgb::smarandache, py::arg("m"),
          "Smallest k with m dividing k factorial");
    m.def("gcd", &zmgb::gcd, py::arg("a"), py::arg("b"));
    m.def("factorial_valuation", &zmgb::factorial_valuation, py::arg("k"), py::arg("q"),
          "Exponent of the prime q in k factorial");
    m.def("divides_mod", &zmgb::divides_mod, py::arg("a"), py::arg("b"), py::arg("m"),
          "a divides b in Z/m");
    m.def("build_p",
          [](const std::vector<std::uint32_t>& alpha, const zmgb::Int& a,
             const zmgb::Modulus& m_) { return zmgb::build_p(to_exponents(alpha), a, m_); },
          py::arg("alpha"), py::arg("a"), py::arg("m"),
          "a * prod_i (x_i - 1)...(x_i - alpha_i)");
    m.def("is_vanishing", &zmgb::is_vanishing, py::arg("f"),
          py::arg("budget") = zmgb::kDefaultExhaustionBudget,
          "Evaluates f at every point of (Z/m)^n");
    m.def("partial_difference", &zmgb::partial_difference, py::arg("f"), py::arg("i"),
          "f(.., x_i + 1, ..) - f(.., x_i, ..)");
    m.def("nabla",
          [](const zmgb::Polynomial& f, const std::vector<std::uint32_t>& beta) {
              return zmgb::nabla(f, to_exponents(beta));
          },
          py::arg("f"), py::arg("beta"), "Iterated partial differences");
    m.def("in_S",
          [](const zmgb::Modulus& m_, const std::vector<std::uint32_t>& alpha,
             const zmgb::Int& a) { return zmgb::in_S(m_, to_exponents(alpha), a); },
          py::arg("m"), py::arg("alpha"), py::arg("a"),
          "Membership of (alpha, a) in the index set of the minimal strong basis");
    m.def("build_basis", &zmgb::build_basis, py::arg("m"), py::arg("nvars"),
          "The minimal strong Groebner basis G_m of the vanishing ideal");
    m.def("rec_comp",
          [](const zmgb::Modulus& m_, std::size_t nvars) { return zmgb::rec_comp(m_, nvars); },
          py::arg("m"), py::arg("nvars"),
          "G_m built recursively along the prime factorization of m");
    m.def("reduced_nf", &zmgb::reduced_nf, py::arg("f"),
          py::arg("order") = zmgb::MonomialOrder::lex,
          "The unique reduced representative of f modulo the vanishing ideal");
    m.def("is_reduced", &zmgb::is_reduced, py::arg("f"));
    m.def("coefficient_bound",
          [](const zmgb::Modulus& m_, const std::vector<std::uint32_t>& alpha) {
              return zmgb::coefficient_bound(m_, to_exponents(alpha));
          },
          py::arg("m"), py::arg("alpha"),
          "Reduced coefficients at x^alpha live in [0, m / gcd(m, alpha!))");
    m.def("functionally_equal", &zmgb::functionally_equal, py::arg("f"), py::arg("g"),
          "True when f and g agree at every point of (Z/m)^n");
    m.def("count_polynomial_functions", &zmgb::count_polynomial_functions, py::arg("m"),
          py::arg("nvars"), "Number of functions (Z/m)^n -> Z/m given by polynomials");
    m.def("serialize_basis", &zmgb::serialize_basis, py::arg("basis"));
    m.def("deserialize_basis",
          [](const std::string& text) { return zmgb::deserialize_basis(text); },
          py::arg("text"));
}
