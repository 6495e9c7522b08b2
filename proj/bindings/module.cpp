#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "gausssum/acceptance.hpp"
#include "gausssum/errors.hpp"
#include "gausssum/evaluator.hpp"
#include "gausssum/modular.hpp"
#include "gausssum/oracle.hpp"
#include "gausssum/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace gausssum;

namespace {

std::complex<double> to_std_complex(const ComplexApprox& c) { return {c.re, c.im}; }

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["query"] = r.query;
    d["pass"] = r.pass;
    d["exact"] = r.exact ? py::cast(*r.exact) : py::object(py::none());
    d["lhs"] = to_std_complex(r.lhs);
    d["lhs_err"] = r.lhs.err;
    d["rhs"] = to_std_complex(r.rhs);
    d["rhs_err"] = r.rhs.err;
    d["difference"] = r.difference;
    d["tolerance"] = r.tolerance;
    d["failing_step"] = r.failing_step ? py::cast(*r.failing_step) : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Normalized quadratic Gauss sums phi(a,b): exact closed forms, "
              "brute-force oracles, and identity verification.";

    py::register_exception<bound_error>(m, "BoundError", PyExc_RuntimeError);

    py::class_<ExactGaussValue>(m, "ExactValue")
        .def_static("zero", &ExactGaussValue::zero)
        .def_static(
            "root8",
            [](std::int64_t num, std::int64_t den, std::int64_t radicand, int octant) {
                return ExactGaussValue::root8(Rational(num, den), radicand, octant);
            },
            "coeff_num"_a, "coeff_den"_a = 1, "radicand"_a = 1, "octant"_a = 0,
            "c*sqrt(radicand)*zeta8^octant with c = coeff_num/coeff_den > 0")
        .def_static("integer", &ExactGaussValue::integer)
        .def_property_readonly("is_zero", &ExactGaussValue::is_zero)
        .def_property_readonly("coeff_num",
                               [](const ExactGaussValue& v) { return v.coeff().num(); })
        .def_property_readonly("coeff_den",
                               [](const ExactGaussValue& v) { return v.coeff().den(); })
        .def_property_readonly("radicand", &ExactGaussValue::radicand)
        .def_property_readonly("octant", &ExactGaussValue::octant)
        .def("conj", [](const ExactGaussValue& v) { return conj(v); })
        .def("scale_sqrt",
             [](const ExactGaussValue& v, std::int64_t k) { return scale_sqrt(v, k); },
             "k"_a)
        .def("to_complex",
             [](const ExactGaussValue& v) {
                 const ComplexApprox c = v.to_complex();
                 return py::make_tuple(to_std_complex(c), c.err);
             },
             "(complex value, absolute error bound)")
        .def("to_json", &ExactGaussValue::to_json)
        .def_static("from_json", &ExactGaussValue::from_json, "text"_a)
        .def("__complex__",
             [](const ExactGaussValue& v) { return to_std_complex(v.to_complex()); })
        .def("__mul__", [](const ExactGaussValue& a, const ExactGaussValue& b) {
            return mul(a, b);
        })
        .def("__truediv__", [](const ExactGaussValue& a, const ExactGaussValue& b) {
            return div(a, b);
        })
        .def("__eq__", [](const ExactGaussValue& a, const ExactGaussValue& b) {
            return a == b;
        })
        .def("__repr__",
             [](const ExactGaussValue& v) { return "<ExactValue " + v.str() + ">"; })
        .def("__str__", &ExactGaussValue::str);

    m.def(
        "phi_exact",
        [](std::int64_t a, std::int64_t b, std::int64_t factor_bound) {
            return eval_phi({a, b}, factor_bound).value;
        },
        "a"_a, "b"_a, "factor_bound"_a = kDefaultFactorBound,
        "Exact phi(a,b) for even b.");
    m.def(
        "phi_exact_with_trace",
        [](std::int64_t a, std::int64_t b, std::int64_t factor_bound) {
            const EvalResult r = eval_phi({a, b}, factor_bound);
            py::list steps;
            for (const TraceStep& s : r.trace.steps) {
                py::dict d;
                d["rule"] = step_rule_name(s.rule);
                d["modulus"] = s.modulus;
                d["numerator"] = s.numerator;
                d["factor"] = py::cast(s.factor);
                d["note"] = s.note;
                steps.append(d);
            }
            return py::make_tuple(r.value, steps);
        },
        "a"_a, "b"_a, "factor_bound"_a = kDefaultFactorBound);
    m.def(
        "phi_assuming_ls",
        [](std::int64_t a, std::int64_t b, std::int64_t factor_bound) {
            return eval_phi_assuming_ls(a, b, factor_bound);
        },
        "a"_a, "b"_a, "factor_bound"_a = kDefaultFactorBound,
        "Exact phi(a,b) for even a and any b, using the Landsberg-Schaar "
        "relation itself (assumes-LS).");
    m.def(
        "phi_numeric",
        [](std::int64_t a, std::int64_t b, std::int64_t bound) {
            const ComplexApprox c = phi_numeric(a, b, bound);
            return py::make_tuple(to_std_complex(c), c.err);
        },
        "a"_a, "b"_a, "bound"_a = kDefaultSumBound,
        "Direct summation; returns (value, error bound).");
    m.def("phi_base", &phi_base, "a"_a, "phi(a,2) from the four-case table");
    m.def("phi_odd_prime_power", &phi_odd_prime_power, "p"_a, "k"_a, "l"_a);
    m.def("phi_two_power", &phi_two_power, "k"_a, "l"_a);
    m.def("reflection_product", &reflection_product, "p"_a, "k"_a, "l"_a);

    m.def("legendre", &legendre, "k"_a, "p"_a);
    m.def("is_prime", &is_prime, "n"_a);
    m.def(
        "factorize",
        [](std::int64_t n, std::int64_t bound) { return factorize(n, bound).factors; },
        "n"_a, "bound"_a = kDefaultFactorBound, "list of (prime, exponent)");
    m.def("count_sqrt_closed",
          py::overload_cast<std::int64_t, std::int64_t, int>(&count_sqrt_closed), "t"_a,
          "p"_a, "j"_a);
    m.def("count_sqrt_brute", &count_sqrt_brute, "t"_a, "m"_a,
          "bound"_a = kDefaultCountBound);
    m.def("sylvester_count", &sylvester_count, "a"_a, "b"_a);
    m.def("sylvester_brute", &sylvester_brute, "a"_a, "b"_a,
          "bound"_a = kDefaultCountBound);

    m.def(
        "verify_ls",
        [](std::int64_t a, std::int64_t b, double tol, std::int64_t sum_bound) {
            return report_dict(verify_ls(a, b, tol, sum_bound));
        },
        "a"_a, "b"_a, "tol"_a = 1e-6, "sum_bound"_a = kDefaultSumBound);
    m.def(
        "fourier_check",
        [](std::int64_t p, int k, std::int64_t l, double tol, std::int64_t bound) {
            return report_dict(fourier_check(p, k, l, tol, bound));
        },
        "p"_a, "k"_a, "l"_a, "tol"_a = 1e-6, "bound"_a = kDefaultSumBound);
    m.def(
        "induction_check",
        [](std::int64_t a, std::int64_t b, std::int64_t p, int k, double tol,
           std::int64_t sum_bound) {
            return report_dict(induction_check(a, b, p, k, tol, sum_bound));
        },
        "a"_a, "b"_a, "p"_a, "k"_a, "tol"_a = 1e-6,
        "sum_bound"_a = std::int64_t(1) << 28);

    m.def(
        "self_test",
        [](double tol, int workers) {
            AcceptanceOptions opt;
            opt.tol = tol;
            opt.workers = workers;
            std::vector<CriterionResult> results;
            {
                py::gil_scoped_release release;
                results = run_acceptance(opt);
            }
            py::list out;
            for (const CriterionResult& r : results) {
                py::dict d;
                d["index"] = r.index;
                d["name"] = r.name;
                d["pass"] = r.passed;
                d["cases"] = r.total;
                d["failures"] = r.failures;
                d["seconds"] = r.seconds;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        "tol"_a = 1e-6, "workers"_a = 0,
        "Runs the full acceptance suite; returns one dict per criterion.");

    m.attr("__version__") = "0.1.0";
}
