#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wrightlab/direct.hpp"
#include "wrightlab/errors.hpp"
#include "wrightlab/euler.hpp"
#include "wrightlab/multivar.hpp"
#include "wrightlab/quadrature.hpp"
#include "wrightlab/scalar.hpp"
#include "wrightlab/series.hpp"
#include "wrightlab/verify.hpp"

namespace py = pybind11;
using namespace wrightlab;

namespace {

std::vector<WeightedParam> pairs(const std::vector<std::pair<double, double>>& in)
{
    std::vector<WeightedParam> out;
    out.reserve(in.size());
    for (const auto& [value, weight] : in) {
        out.push_back({value, weight});
    }
    return out;
}

SeriesPolicy policy_from(std::optional<int> max_terms, std::optional<double> rel_tol)
{
    SeriesPolicy p = SeriesPolicy::from_environment();
    if (max_terms) {
        p.max_terms = *max_terms;
    }
    if (rel_tol) {
        p.rel_tol = *rel_tol;
    }
    p.validate();
    return p;
}

GeneratorSpec make_generator(const std::string& kind, double a, double b, double x)
{
    if (kind == "binomial") {
        return BinomialGenerator{a, x};
    }
    if (kind == "humbert") {
        return HumbertGenerator{a, b, x};
    }
    if (kind == "gegenbauer") {
        return GegenbauerGenerator{a, x};
    }
    throw py::value_error("generator must be binomial, humbert or gegenbauer");
}

} // namespace

PYBIND11_MODULE(_wrightlab, m)
{
    m.doc() = "Wright-type hypergeometric functions and Euler-type integral identities";
    m.attr("__version__") = std::string(verify::kVersion);

    static py::exception<NumericError> numeric(m, "NumericError", PyExc_ArithmeticError);
    static py::exception<DomainError> domain(m, "DomainError", numeric.ptr());
    static py::exception<PoleError> pole(m, "PoleError", numeric.ptr());
    static py::exception<OverflowError> overflow(m, "OverflowError", numeric.ptr());
    static py::exception<DivergenceError> divergence(m, "DivergenceError", numeric.ptr());
    static py::exception<MaxTermsError> max_terms(m, "MaxTermsError", numeric.ptr());
    static py::exception<NonConvergenceError> nonconv(m, "NonConvergenceError", numeric.ptr());
    static py::exception<EvaluationError> evaluation(m, "EvaluationError", numeric.ptr());
    static py::exception<verify::ConfigError> config(m, "ConfigError", PyExc_ValueError);
    // Most specific first.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const DomainError& e) {
            py::set_error(domain, e.what());
        } catch (const PoleError& e) {
            py::set_error(pole, e.what());
        } catch (const OverflowError& e) {
            py::set_error(overflow, e.what());
        } catch (const DivergenceError& e) {
            py::set_error(divergence, e.what());
        } catch (const MaxTermsError& e) {
            py::set_error(max_terms, e.what());
        } catch (const NonConvergenceError& e) {
            py::set_error(nonconv, e.what());
        } catch (const EvaluationError& e) {
            py::set_error(evaluation, e.what());
        } catch (const NumericError& e) {
            py::set_error(numeric, e.what());
        } catch (const verify::ConfigError& e) {
            py::set_error(config, e.what());
        }
    });

    py::class_<SeriesResult>(m, "SeriesResult")
        .def_readonly("value", &SeriesResult::value)
        .def_readonly("terms_used", &SeriesResult::terms_used)
        .def_readonly("tail_estimate", &SeriesResult::tail_estimate)
        .def("__repr__", [](const SeriesResult& r) {
            return "SeriesResult(value=" + py::repr(py::cast(r.value)).cast<std::string>()
                + ", terms_used=" + std::to_string(r.terms_used) + ")";
        });

    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("err_estimate", &QuadratureResult::err_estimate)
        .def_readonly("evaluations", &QuadratureResult::evaluations)
        .def_readonly("levels", &QuadratureResult::levels)
        .def_readonly("level_errors", &QuadratureResult::level_errors);

    m.def("gamma", &gamma_fn, py::arg("x"));
    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def("beta", &beta_fn, py::arg("x"), py::arg("y"));
    m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("n"));

    const auto mt = py::arg("max_terms") = py::none();
    const auto rt = py::arg("rel_tol") = py::none();

    m.def(
        "wright_psi",
        [](const std::vector<std::pair<double, double>>& upper, const std::vector<std::pair<double, double>>& lower,
           Complex z, bool normalized, std::optional<int> max_terms, std::optional<double> rel_tol) {
            const WrightSpec spec(pairs(upper), pairs(lower));
            const SeriesPolicy p = policy_from(max_terms, rel_tol);
            return normalized ? wright_psi_normalized(spec, z, p) : wright_psi(spec, z, p);
        },
        "pΨq with (parameter, weight) pairs.", py::arg("upper"), py::arg("lower"), py::arg("z"),
        py::arg("normalized") = false, mt, rt);

    m.def(
        "pfq",
        [](const std::vector<double>& num, const std::vector<double>& den, Complex z, std::optional<int> max_terms,
           std::optional<double> rel_tol) { return hyper_pfq(num, den, z, policy_from(max_terms, rel_tol)); },
        py::arg("num"), py::arg("den"), py::arg("z"), mt, rt);

    m.def(
        "mittag_leffler",
        [](double lambda, Complex z, std::optional<int> max_terms, std::optional<double> rel_tol) {
            return mittag_leffler(lambda, z, policy_from(max_terms, rel_tol));
        },
        py::arg("lam"), py::arg("z"), mt, rt);

    m.def(
        "appell_f1",
        [](double a, double b1, double b2, double c, Complex x, Complex y) {
            return appell_f1(a, b1, b2, c, x, y, policy_from({}, {}));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("beta_prime"), py::arg("gamma"), py::arg("x"), py::arg("y"));
    m.def(
        "appell_f3",
        [](double a1, double a2, double b1, double b2, double c, Complex x, Complex y) {
            return appell_f3(a1, a2, b1, b2, c, x, y, policy_from({}, {}));
        },
        py::arg("alpha"), py::arg("alpha_prime"), py::arg("beta"), py::arg("beta_prime"), py::arg("gamma"),
        py::arg("x"), py::arg("y"));
    m.def(
        "humbert_phi2",
        [](double b1, double b2, double c, Complex x, Complex y) {
            return humbert_phi2(b1, b2, c, x, y, policy_from({}, {}));
        },
        py::arg("b1"), py::arg("b2"), py::arg("c"), py::arg("x"), py::arg("y"));
    m.def(
        "lauricella_fd",
        [](double a, const std::vector<double>& alphas, double c, const std::vector<Complex>& xs) {
            return lauricella_fd(a, alphas, c, xs, policy_from({}, {}));
        },
        py::arg("alpha"), py::arg("alphas"), py::arg("gamma"), py::arg("xs"));
    m.def("gegenbauer", &gegenbauer, py::arg("n"), py::arg("a"), py::arg("x"));

    // Euler-type integrals: closed form and direct quadrature over the same spec.
    py::class_<EulerIntegralSpec>(m, "EulerIntegralSpec")
        .def_readonly("alpha", &EulerIntegralSpec::alpha)
        .def_readonly("beta", &EulerIntegralSpec::beta)
        .def_readonly("gamma", &EulerIntegralSpec::gamma)
        .def_readonly("a", &EulerIntegralSpec::a)
        .def_readonly("b", &EulerIntegralSpec::b)
        .def_readonly("lam", &EulerIntegralSpec::lambda)
        .def_readonly("p", &EulerIntegralSpec::p)
        .def("closed_form", [](const EulerIntegralSpec& s) { return closed_form(s, policy_from({}, {})); })
        .def("direct", [](const EulerIntegralSpec& s) { return evaluate_integral_direct(s, {}, policy_from({}, {})); });

    m.def("theorem1_spec", &theorem1_spec, py::arg("alpha"), py::arg("beta"), py::arg("alpha1"), py::arg("alpha2"),
          py::arg("x1"), py::arg("x2"), py::arg("lam"), py::arg("p"));
    m.def("theorem2_spec", &theorem2_spec, py::arg("alpha"), py::arg("beta"), py::arg("alpha1"), py::arg("alpha2"),
          py::arg("x1"), py::arg("x2"), py::arg("lam"), py::arg("p"));
    m.def("theorem3_spec", &theorem3_spec, py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("a"),
          py::arg("b"), py::arg("u"), py::arg("v"), py::arg("lam"), py::arg("p"));
    m.def("theorem4_spec", &theorem4_spec, py::arg("alpha"), py::arg("beta"), py::arg("a"), py::arg("b"),
          py::arg("nu"), py::arg("mu"), py::arg("lam"), py::arg("p"));
    m.def("lauricella_spec", &lauricella_spec, py::arg("alpha"), py::arg("beta"), py::arg("alphas"), py::arg("xs"),
          py::arg("lam"), py::arg("p"));

    py::class_<GeneratingIntegralSpec>(m, "GeneratingIntegralSpec")
        .def("closed_form",
             [](const GeneratingIntegralSpec& s) { return generating_integral_closed_form(s, policy_from({}, {})); })
        .def("direct", [](const GeneratingIntegralSpec& s) {
            return evaluate_generating_integral_direct(s, {}, policy_from({}, {}));
        });
    m.def(
        "generating_spec",
        [](const std::string& generator, double a, double b, double x, double r, double s, double delta, double omega,
           double lambda, Complex p, Complex t, const std::vector<std::pair<double, double>>& factors) {
            std::vector<ProductFactor> fs;
            for (const auto& [alpha, xi] : factors) {
                fs.push_back({alpha, xi});
            }
            GeneratingIntegralSpec spec{make_generator(generator, a, b, x), r, s, delta, omega, lambda, p, t, fs};
            spec.validate();
            return spec;
        },
        py::arg("generator"), py::arg("a"), py::arg("b") = 1.0, py::arg("x") = 1.0, py::arg("r"), py::arg("s"),
        py::arg("delta") = 1.0, py::arg("omega") = 1.0, py::arg("lam"), py::arg("p"), py::arg("t"),
        py::arg("factors") = std::vector<std::pair<double, double>>{});

    m.def("catalog", [] {
        std::vector<std::string> names;
        for (const auto& def : verify::catalog()) {
            names.push_back(def.name);
        }
        return names;
    });
    m.def(
        "verify_json",
        [](const std::string& config_json, int jobs) {
            const verify::GridConfig cfg = verify::GridConfig::parse(config_json);
            verify::VerifyOptions options;
            options.jobs = jobs;
            options.series = policy_from({}, {});
            std::string out;
            {
                py::gil_scoped_release release;
                out = verify::to_json(verify::run_verification(cfg, options));
            }
            return out;
        },
        "Runs the verification grid described by a JSON config and returns the report as JSON text.",
        py::arg("config_json") = "{}", py::arg("jobs") = 1);
}
