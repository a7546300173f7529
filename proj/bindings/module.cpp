#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "catent/entropy.hpp"
#include "catent/errors.hpp"
#include "catent/kgroup.hpp"
#include "catent/lls.hpp"
#include "catent/sl2z.hpp"
#include "catent/words.hpp"

namespace py = pybind11;
using namespace catent;

namespace pybind11::detail {

// cpp_int <-> python int, through decimal strings (both ends are
// arbitrary precision, so the round trip is exact).
template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object s = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!s) return false;
        value = Int(s.cast<std::string>());
        return true;
    }

    static handle cast(const Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

    bool load(handle, bool) { return false; }  // output only

    static handle cast(const Rational& src, return_value_policy, handle) {
        object fractions = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            PyLong_FromString(boost::multiprecision::numerator(src).str().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(
            PyLong_FromString(boost::multiprecision::denominator(src).str().c_str(), nullptr, 10));
        return fractions(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

std::string quadrant_sign_string(const QuadrantStep& s) {
    std::string out;
    out += s.sign_rank > 0 ? '+' : '-';
    out += s.sign_degree > 0 ? '+' : '-';
    return out;
}

}  // namespace

PYBIND11_MODULE(_catent, m) {
    m.doc() = "categorical entropy of curve autoequivalences via the induced SL(2,Z) action";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Mat2Z>(m, "Mat2Z")
        .def(py::init<Int, Int, Int, Int>(), py::arg("a"), py::arg("b"), py::arg("c"),
             py::arg("d"))
        .def_static("identity", [] { return Mat2Z::identity(); })
        .def_static("S", [] { return Mat2Z::gen_s(); })
        .def_static("T", [] { return Mat2Z::gen_t(); })
        .def_static("parse", &Mat2Z::parse, py::arg("text"))
        .def_property_readonly("a", &Mat2Z::a)
        .def_property_readonly("b", &Mat2Z::b)
        .def_property_readonly("c", &Mat2Z::c)
        .def_property_readonly("d", &Mat2Z::d)
        .def("trace", &Mat2Z::trace)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Mat2Z::str)
        .def("__repr__", [](const Mat2Z& v) { return "Mat2Z(" + v.str() + ")"; })
        .def("__hash__", [](const Mat2Z& v) { return Mat2ZHash{}(v); });

    m.def("compose", &compose, py::arg("a"), py::arg("b"));
    m.def("power", &power, py::arg("a"), py::arg("n"));
    m.def("inverse", &inverse, py::arg("a"));
    m.def("conjugate", &conjugate, py::arg("a"), py::arg("m"));
    m.def("is_reduced", &is_reduced, py::arg("a"));
    m.def("is_hyperbolic", &is_hyperbolic, py::arg("a"));

    py::class_<SpectralRadius>(m, "SpectralRadius")
        .def_property_readonly("trace", &SpectralRadius::trace)
        .def_property_readonly("discriminant", &SpectralRadius::discriminant)
        .def("is_one", &SpectralRadius::is_one)
        .def("value", &SpectralRadius::value)
        .def("log_value", &SpectralRadius::log_value)
        .def(py::self == py::self)
        .def("__repr__", [](const SpectralRadius& r) {
            std::ostringstream out;
            out << "SpectralRadius(trace=" << r.trace() << ")";
            return out.str();
        });
    m.def("spectral_radius", &spectral_radius, py::arg("a"));

    py::enum_<TokenKind>(m, "TokenKind")
        .value("S", TokenKind::S)
        .value("T", TokenKind::T)
        .value("Shift", TokenKind::Shift)
        .value("Twist0", TokenKind::Twist0)
        .value("Auto", TokenKind::Auto);

    py::class_<Token>(m, "Token")
        .def(py::init<TokenKind, Int>(), py::arg("kind"), py::arg("exponent") = Int(0))
        .def_readonly("kind", &Token::kind)
        .def_readonly("exponent", &Token::exponent)
        .def(py::self == py::self);

    py::class_<Word>(m, "Word")
        .def(py::init<>())
        .def(py::init([](const std::vector<Token>& tokens) { return Word{tokens}; }))
        .def_readonly("tokens", &Word::tokens)
        .def("__len__", &Word::size)
        .def(py::self == py::self)
        .def("__str__", &print_word)
        .def("__repr__", [](const Word& w) { return "Word('" + print_word(w) + "')"; });

    m.def("parse_word", &parse_word, py::arg("text"));
    m.def("print_word", &print_word, py::arg("word"));
    m.def("evaluate", &evaluate, py::arg("word"));
    m.def("simplify", &simplify, py::arg("word"));
    m.def("concat", &concat, py::arg("lhs"), py::arg("rhs"));
    m.def("type_m_word", &type_m_word, py::arg("m"));

    m.def("cf_odd", &cf_odd, py::arg("p"), py::arg("q"));
    m.def("cf_eval", &cf_eval, py::arg("cf"));

    py::class_<LLSPeriod>(m, "LLSPeriod")
        .def(py::init<std::vector<Int>>(), py::arg("entries"))
        .def_property_readonly("entries", &LLSPeriod::entries)
        .def_property_readonly("canonical", &LLSPeriod::canonical)
        .def("__len__", &LLSPeriod::size)
        .def("__str__", &LLSPeriod::str)
        .def("__repr__", [](const LLSPeriod& p) { return "LLSPeriod(" + p.str() + ")"; })
        .def(py::self == py::self);

    m.def("cyclic_equal", &cyclic_equal, py::arg("p"), py::arg("q"));
    m.def("lls_of_reduced", &lls_of_reduced, py::arg("a"));

    py::class_<Reduction>(m, "Reduction")
        .def_readonly("reduced", &Reduction::reduced)
        .def_readonly("conjugator", &Reduction::conjugator);

    m.def("reduce_hyperbolic", &reduce_hyperbolic, py::arg("a"),
          py::arg("max_depth") = kDefaultReduceDepth);
    m.def("lls_period", &lls_period, py::arg("a"));
    m.def("is_conjugate", &is_conjugate, py::arg("a"), py::arg("b"));
    m.def(
        "brute_force_conjugate",
        [](const Mat2Z& a, const Mat2Z& b, int bound) -> py::object {
            auto witness = brute_force_conjugate(a, b, bound);
            return witness ? py::cast(*witness) : py::none();
        },
        py::arg("a"), py::arg("b"), py::arg("bound"));

    py::class_<EntropyValue>(m, "EntropyValue")
        .def("is_zero", &EntropyValue::is_zero)
        .def("value", &EntropyValue::value)
        .def_property_readonly("radius", &EntropyValue::radius)
        .def(py::self == py::self)
        .def("__float__", &EntropyValue::value)
        .def("__repr__", [](const EntropyValue& e) {
            std::ostringstream out;
            if (e.is_zero())
                out << "EntropyValue(0)";
            else
                out << "EntropyValue(log((" << boost::multiprecision::abs(e.radius().trace())
                    << "+sqrt(" << e.radius().discriminant() << "))/2))";
            return out.str();
        });

    m.def("entropy_of_matrix", &entropy_of_matrix, py::arg("a"));
    m.def("entropy_of_word", &entropy_of_word, py::arg("word"));

    py::class_<StandardDescriptor>(m, "StandardDescriptor")
        .def(py::init([](Int genus, Int twist_degree, Int shift, bool automorphism) {
                 return StandardDescriptor{std::move(genus), std::move(twist_degree),
                                           std::move(shift), automorphism};
             }),
             py::arg("genus"), py::arg("twist_degree") = Int(0), py::arg("shift") = Int(0),
             py::arg("automorphism") = false)
        .def_readonly("genus", &StandardDescriptor::genus)
        .def_readonly("twist_degree", &StandardDescriptor::twist_degree)
        .def_readonly("shift", &StandardDescriptor::shift)
        .def_readonly("automorphism", &StandardDescriptor::automorphism)
        .def("induced_matrix", &StandardDescriptor::induced_matrix);

    py::class_<StandardEntropy>(m, "StandardEntropy")
        .def_readonly("value", &StandardEntropy::value)
        .def_readonly("induced", &StandardEntropy::induced);

    m.def("entropy_of_curve_autoeq", &entropy_of_curve_autoeq, py::arg("descriptor"));
    m.def("type_m_representative", &type_m_representative, py::arg("a"));

    py::class_<TypeMPrefix>(m, "TypeMPrefix")
        .def_readonly("index", &TypeMPrefix::index)
        .def_readonly("matrix", &TypeMPrefix::matrix)
        .def_readonly("alpha", &TypeMPrefix::alpha)
        .def_readonly("beta", &TypeMPrefix::beta)
        .def_readonly("a_positive", &TypeMPrefix::a_positive)
        .def_readonly("a_le_c", &TypeMPrefix::a_le_c)
        .def_readonly("cf_matches", &TypeMPrefix::cf_matches)
        .def_readonly("alpha_in_range", &TypeMPrefix::alpha_in_range)
        .def_readonly("beta_in_range", &TypeMPrefix::beta_in_range)
        .def("ok", &TypeMPrefix::ok);

    py::class_<TypeMCertificate>(m, "TypeMCertificate")
        .def_readonly("m", &TypeMCertificate::m)
        .def_readonly("prefixes", &TypeMCertificate::prefixes)
        .def_readonly("lls", &TypeMCertificate::lls)
        .def_readonly("lls_matches", &TypeMCertificate::lls_matches)
        .def("ok", &TypeMCertificate::ok);

    m.def("verify_type_m", &verify_type_m, py::arg("m"));

    py::class_<KClass>(m, "KClass")
        .def(py::init([](Int rank, Int degree) {
                 return KClass{std::move(rank), std::move(degree)};
             }),
             py::arg("rank"), py::arg("degree"))
        .def_readonly("rank", &KClass::rank)
        .def_readonly("degree", &KClass::degree)
        .def(py::self == py::self)
        .def("__repr__", [](const KClass& v) {
            std::ostringstream out;
            out << "KClass(" << v.rank << ", " << v.degree << ")";
            return out.str();
        });

    m.attr("GENERATOR_CLASS") = kGeneratorClass;
    m.attr("DUAL_GENERATOR_CLASS") = kDualGeneratorClass;

    m.def("euler_form", &euler_form, py::arg("v"), py::arg("w"));
    m.def("act", &act, py::arg("a"), py::arg("v"));

    py::class_<GrowthRow>(m, "GrowthRow")
        .def_readonly("l", &GrowthRow::l)
        .def_readonly("chi_abs", &GrowthRow::chi_abs)
        .def_readonly("estimate", &GrowthRow::estimate)
        .def_readonly("rate", &GrowthRow::rate)
        .def_readonly("gap", &GrowthRow::gap);

    py::class_<GrowthReport>(m, "GrowthReport")
        .def_readonly("rows", &GrowthReport::rows)
        .def_readonly("target", &GrowthReport::target)
        .def_readonly("final_gap", &GrowthReport::final_gap)
        .def("csv", &GrowthReport::csv);

    m.def("growth_sequence", &growth_sequence, py::arg("a"), py::arg("v"), py::arg("w"),
          py::arg("steps"));

    py::class_<QuadrantStep>(m, "QuadrantStep")
        .def_readonly("block", &QuadrantStep::block)
        .def_readonly("t_exponent", &QuadrantStep::t_exponent)
        .def_readonly("value", &QuadrantStep::value)
        .def_property_readonly("signs", &quadrant_sign_string);

    py::class_<QuadrantTrace>(m, "QuadrantTrace")
        .def_readonly("steps", &QuadrantTrace::steps)
        .def_readonly("final_class", &QuadrantTrace::final_class);

    m.def("quadrant_trace", &quadrant_trace, py::arg("m"), py::arg("v"));
    m.def("graded_complexity", &graded_complexity, py::arg("dims"), py::arg("t") = 0.0);
}
