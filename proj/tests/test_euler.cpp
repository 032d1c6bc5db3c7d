#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wrightlab/direct.hpp"
#include "wrightlab/errors.hpp"
#include "wrightlab/euler.hpp"
#include "wrightlab/multivar.hpp"

using namespace wrightlab;
using oracle::rel_err;

namespace {

Complex kernel(double a1, double a2, double c, double lambda, Complex p)
{
    return euler_kernel(a1, a2, c, lambda, p, Normalization::normalized).value;
}

/// Σ_k Γ(a1+k)Γ(a2+k)Γ(c)/(Γ(a1)Γ(a2)Γ(c+2k)Γ(1+λk)) p^k, summed in plain doubles.
Complex kernel_oracle(double a1, double a2, double c, double lambda, Complex p)
{
    Complex sum = 0.0;
    for (int k = 0; k < 120; ++k) {
        const double lg = std::lgamma(a1 + k) + std::lgamma(a2 + k) + std::lgamma(c) - std::lgamma(a1)
            - std::lgamma(a2) - std::lgamma(c + 2 * k) - std::lgamma(1 + lambda * k);
        sum += std::exp(lg) * std::pow(p, k);
    }
    return sum;
}

} // namespace

TEST_CASE("kernel against a plain gamma sum")
{
    for (const double lambda : {0.0, 0.5, 1.0, 2.0}) {
        const Complex p = lambda == 0.0 ? Complex(0.8, 0.0) : Complex(0.5, 1.1);
        CHECK(rel_err(kernel(1.3, 0.9, 2.2, lambda, p), kernel_oracle(1.3, 0.9, 2.2, lambda, p)) <= 1e-13);
    }
    // raw = normalized * Γ(a1)Γ(a2)/Γ(c)
    const Complex raw = euler_kernel(1.3, 0.9, 2.2, 0.5, 0.7, Normalization::raw).value;
    CHECK(rel_err(raw, kernel(1.3, 0.9, 2.2, 0.5, 0.7) * std::tgamma(1.3) * std::tgamma(0.9) / std::tgamma(2.2))
          <= 1e-14);
}

TEST_CASE("two-factor product closed form")
{
    // p = 0 collapses to Appell F1.
    CHECK(rel_err(closed_form_theorem1(1.2, 0.8, 0.5, 0.9, 0.3, -0.25, 1.0, 0.0).value,
                  oracle::appell_f1(1.2, 0.5, 0.9, 2.0, 0.3, -0.25))
          <= 1e-12);
    // x1 = x2 = 0 leaves the bare kernel.
    CHECK(rel_err(closed_form_theorem1(1.2, 0.8, 0.5, 0.9, 0.0, 0.0, 0.5, 0.7).value,
                  kernel(1.2, 0.8, 2.0, 0.5, 0.7))
          <= 1e-14);
    // Dual evaluation against an independent Gauss-Legendre integral.
    const Complex want = oracle::beta_weighted(1.2, 0.8, [](double t) {
        return std::pow(1 - 0.3 * t, -0.5) * std::pow(1 + 0.25 * t, -0.9) * std::exp(0.7 * t * (1 - t));
    }) / oracle::beta(1.2, 0.8);
    const Complex got = closed_form_theorem1(1.2, 0.8, 0.5, 0.9, 0.3, -0.25, 1.0, 0.7).value;
    CHECK(rel_err(got, want) <= 1e-10);
    CHECK(rel_err(got, evaluate_integral_direct(theorem1_spec(1.2, 0.8, 0.5, 0.9, 0.3, -0.25, 1.0, 0.7)).value)
          <= 1e-8);
}

TEST_CASE("two-factor product is symmetric in its factors")
{
    oracle::Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        const double al = rng.uniform(0.3, 3);
        const double be = rng.uniform(0.3, 3);
        const double a1 = rng.uniform(0.1, 1.5);
        const double a2 = rng.uniform(0.1, 1.5);
        const double x1 = rng.uniform(-0.6, 0.6);
        const double x2 = rng.uniform(-0.6, 0.6);
        const double lambda = rng.uniform(0.3, 2.5);
        const Complex p = rng.disk(2.0);
        REQUIRE(rel_err(closed_form_theorem1(al, be, a1, a2, x1, x2, lambda, p).value,
                        closed_form_theorem1(al, be, a2, a1, x2, x1, lambda, p).value)
                <= 1e-12);
    }
}

TEST_CASE("reflected product closed form")
{
    CHECK(rel_err(closed_form_theorem2(1.5, 1.1, 0.4, 0.6, 0.2, 0.3, 0.5, 0.0).value,
                  oracle::appell_f3(1.5, 1.1, 0.4, 0.6, 2.6, 0.2, 0.3))
          <= 1e-12);
    CHECK(rel_err(closed_form_theorem2(1.5, 1.1, 0.4, 0.0, 0.2, 0.3, 0.5, -0.9).value,
                  closed_form_theorem1(1.5, 1.1, 0.4, 0.0, 0.2, 0.3, 0.5, -0.9).value)
          <= 1e-13);
    const Complex want = oracle::beta_weighted(1.5, 1.1, [](double t) {
        return std::pow(1 - 0.2 * t, -0.4) * std::pow(1 - 0.3 * (1 - t), -0.6)
            * oracle::mittag_leffler(0.5, -0.9 * t * (1 - t));
    }) / oracle::beta(1.5, 1.1);
    CHECK(rel_err(closed_form_theorem2(1.5, 1.1, 0.4, 0.6, 0.2, 0.3, 0.5, -0.9).value, want) <= 1e-10);
}

TEST_CASE("linear factor closed form")
{
    // u = 0, v = 1: χ ≡ 1
    CHECK(rel_err(closed_form_theorem3(0.9, 1.3, -0.7, 0, 1, 0.0, 1.0, 0.5, 0.8).value,
                  kernel(0.9, 1.3, 2.2, 0.5, 0.8))
          <= 1e-14);
    // Integer γ: the outer sum stops after γ + 1 terms.
    const SeriesResult finite = closed_form_theorem3(0.9, 1.3, 2.0, 0, 1, -0.4, 1.0, 1.0, 0.5);
    const Complex want_finite = kernel(0.9, 1.3, 2.2, 1, 0.5) - 2.0 * 0.9 / 2.2 * 0.4 * kernel(1.9, 1.3, 3.2, 1, 0.5)
        + 0.9 * 1.9 / (2.2 * 3.2) * 0.16 * kernel(2.9, 1.3, 4.2, 1, 0.5);
    CHECK(rel_err(finite.value, want_finite) <= 1e-13);

    // The example configuration from the linear family, against Gauss-Legendre.
    const Complex want = oracle::beta_weighted(0.9, 1.3, [](double t) {
        return std::pow(1 - 0.4 * t, -0.7) * std::exp(0.5 * t * (1 - t));
    }) / oracle::beta(0.9, 1.3);
    CHECK(rel_err(closed_form_theorem3(0.9, 1.3, -0.7, 0, 1, -0.4, 1, 1, 0.5).value, want) <= 1e-10);
}

TEST_CASE("linear factor on a general interval")
{
    // p = 0: (b-a)^(α+β-1) (au+v)^γ 2F1(-γ, α; α+β; -u(b-a)/(au+v)) times B(α,β), normalized.
    const double al = 0.9;
    const double be = 1.3;
    const double ga = 1.5;
    const double a = -1;
    const double b = 1;
    const double u = 0.3;
    const double v = 1;
    const double base = a * u + v;
    const Complex want = std::pow(b - a, al + be - 1) * std::pow(base, ga)
        * oracle::pfq({-ga, al}, {al + be}, -u * (b - a) / base, 3000);
    CHECK(rel_err(closed_form_theorem3(al, be, ga, a, b, u, v, 1.0, 0.0).value, want) <= 1e-11);
    const EulerIntegralSpec spec = theorem3_spec(al, be, ga, a, b, u, v, 2.0, Complex(0.4, -0.3));
    CHECK(rel_err(closed_form(spec).value, evaluate_integral_direct(spec).value) <= 1e-8);
    // Non-terminating series outside the disk of convergence.
    CHECK_THROWS_AS(closed_form_theorem3(al, be, 0.5, 0, 1, 1.5, 1.0, 1.0, 0.2), DivergenceError);
}

TEST_CASE("rational family closed form")
{
    const double al = 0.7;
    const double be = 1.2;
    CHECK(rel_err(closed_form_theorem4(al, be, -1, 3, 0.5, -0.3, 1.0, 0.0).value,
                  std::pow(1.5, -al) * std::pow(0.7, -be) / 4.0)
          <= 1e-12);
    CHECK(rel_err(closed_form_theorem4(al, be, 2, 2.5, 0, 0, 2.0, 0.8).value, kernel(al, be, al + be, 2.0, 0.8) / 0.5)
          <= 1e-13);
    CHECK_THROWS_AS(closed_form(theorem4_spec(al, be, 0, 1, -1.0, 0.5, 1.0, 0.5)), DomainError);
}

TEST_CASE("rational family scale invariance")
{
    for (const double lambda : {0.5, 1.0, 2.0}) {
        const Complex ref = closed_form_theorem4(1.3, 0.6, 0, 1, 0.4, 1.7, lambda, Complex(0.5, 0.5)).value;
        for (const auto& [a, b] : {std::pair{-1.0, 3.0}, std::pair{2.0, 2.5}}) {
            REQUIRE(rel_err(closed_form_theorem4(1.3, 0.6, a, b, 0.4, 1.7, lambda, Complex(0.5, 0.5)).value * (b - a),
                            ref)
                    <= 1e-12);
        }
    }
}

TEST_CASE("n-factor product closed form")
{
    const double a2[] = {0.5, 0.9};
    const double x2[] = {0.3, -0.25};
    CHECK(rel_err(closed_form_lauricella(1.2, 0.8, a2, x2, 1.0, 0.7).value,
                  closed_form_theorem1(1.2, 0.8, 0.5, 0.9, 0.3, -0.25, 1.0, 0.7).value)
          <= 1e-12);
    const double a3[] = {0.3, 0.5, 0.7};
    const double x3[] = {0.2, -0.15, 0.3};
    CHECK(rel_err(closed_form_lauricella(1.1, 0.9, a3, x3, 1.0, 0.0).value,
                  oracle::lauricella_fd3(1.1, {0.3, 0.5, 0.7}, 2.0, {0.2, -0.15, 0.3}))
          <= 1e-12);
    const EulerIntegralSpec spec = lauricella_spec(1.1, 0.9, {0.3, 0.5, 0.7}, {0.2, -0.15, 0.3}, 1.0, 0.8);
    CHECK(rel_err(closed_form(spec).value, evaluate_integral_direct(spec).value) <= 1e-8);
    const double a5[] = {0.1, 0.1, 0.1, 0.1, 0.1};
    const double x5[] = {0.1, 0.1, 0.1, 0.1, 0.1};
    CHECK_THROWS_AS(closed_form_lauricella(1.1, 0.9, a5, x5, 1.0, 0.8), DomainError);
}

TEST_CASE("reductions at lambda one")
{
    CHECK(reduce_lambda1(1.3, 0.9, 0.0).value == Complex(1.0));
    CHECK(rel_err(reduce_lambda1(1.0, 1.0, 1.0).value, oracle::pfq({1}, {1.5}, 0.25)) <= 1e-14);
    CHECK(rel_err(reduce_lambda1(1.3, 0.9, 0.5).value, kernel(1.3, 0.9, 2.2, 1.0, 0.5)) <= 1e-12);
    const WrightSpec w({{1.3, 1}, {0.9, 1}, {1, 1}}, {{2.2, 2}, {1, 1}});
    CHECK(rel_err(reduce_lambda1(1.3, 0.9, 0.5).value, wright_psi_normalized(w, 0.5).value) <= 1e-12);

    // Rational family with α = β on (0, 1) against the 1F1 form.
    const Complex p{1.2, -0.7};
    CHECK(rel_err(closed_form_theorem4(0.8, 0.8, 0, 1, 0.5, 1.0, 1.0, p).value,
                  symmetric_rational_lambda1(0.8, 0.5, 1.0, p).value)
          <= 1e-10);
    CHECK(rel_err(symmetric_rational_lambda1(0.8, 0.5, 1.0, p).value,
                  std::pow(3.0, -0.8) * oracle::pfq({0.8}, {1.3}, p / 12.0))
          <= 1e-13);
}

TEST_CASE("application cases")
{
    ApplicationParams ap;
    ap.alpha = 1;
    ap.beta = 1;
    ap.a = 0;
    ap.b = 1;
    ap.lambda = 1;
    CHECK(rel_err(application_case("4.4", ap, 0.0).closed_form({}).value, 1.0) <= 1e-15);

    ApplicationParams e1;
    e1.alpha = 1.3;
    e1.alpha1 = 0.4;
    e1.x1 = 0.0;
    e1.lambda = 0.5;
    CHECK(rel_err(application_case("4.1", e1, 0.9).closed_form({}).value, kernel(1.3, 1.3, 2.6, 0.5, 0.9)) <= 1e-14);
    e1.x1 = 0.6;
    CHECK_THROWS_AS(application_case("4.1", e1, 0.9), DomainError);

    // Three evaluations of the merged-factor case agree.
    ApplicationParams e2;
    e2.alpha = 1.0;
    e2.beta = 1.4;
    e2.alpha1 = 0.3;
    e2.alpha2 = 0.4;
    e2.x1 = 0.25;
    e2.lambda = 1;
    const IdentityCase c = application_case("4.2", e2, 0.9);
    const Complex series = c.closed_form({}).value;
    const Complex hyper = merged_factor_lambda1(1.0, 1.4, 0.3, 0.4, 0.25, 0.9).value;
    const Complex direct = evaluate_integral_direct(std::get<EulerIntegralSpec>(c.spec)).value;
    CHECK(rel_err(series, hyper) <= 1e-9);
    CHECK(rel_err(series, direct) <= 1e-9);
    CHECK(rel_err(hyper, direct) <= 1e-9);

    CHECK_THROWS_AS(application_case("4.9", e2, 0.9), DomainError);
}

TEST_CASE("generating integral closed form")
{
    // t = 0, p = 0: B(r, s - r)
    GeneratingIntegralSpec spec{BinomialGenerator{0.7, 1.0}, 0.8, 2.1, 1, 1, 1.0, 0.0, 0.0, {}};
    CHECK(rel_err(generating_integral_closed_form(spec).value, oracle::beta(0.8, 1.3)) <= 1e-14);

    spec.p = 0.6;
    spec.t = 0.3;
    const Complex binomial = generating_integral_closed_form(spec).value;
    const Complex want = oracle::beta_weighted(0.8, 1.3, [](double u) {
        return std::pow(1 - 0.3 * u * (1 - u), -0.7) * std::exp(0.6 * u * (1 - u));
    });
    CHECK(rel_err(binomial, want) <= 1e-10);

    // Gegenbauer at x = 1 has the binomial stream with a -> 2a.
    GeneratingIntegralSpec geg = spec;
    geg.generator = GegenbauerGenerator{0.35, 1.0};
    CHECK(rel_err(generating_integral_closed_form(geg).value, binomial) <= 1e-12);

    // A custom stream equal to the binomial one.
    GeneratingIntegralSpec custom = spec;
    custom.generator = CustomGenerator{[](long n) { return Complex(oracle::poch(0.7, static_cast<int>(n)) / oracle::factorial(static_cast<int>(n))); }};
    CHECK(rel_err(generating_integral_closed_form(custom).value, binomial) <= 1e-12);
    CHECK(rel_err(generator_value(custom.generator, 0.3), std::pow(0.7, -0.7)) <= 1e-12);
}

TEST_CASE("generating integral with product factors")
{
    GeneratingIntegralSpec spec{BinomialGenerator{0.7, 1.0}, 0.8, 2.1, 1, 1, 2.0, 0.6, 0.3,
                                {{0.4, 0.3}, {0.2, -0.5}}};
    const Complex want = oracle::beta_weighted(0.8, 1.3, [](double u) {
        return std::pow(1 - 0.3 * u * (1 - u), -0.7) * std::pow(1 - 0.3 * u, -0.4) * std::pow(1 + 0.5 * u, -0.2)
            * std::cosh(std::sqrt(0.6 * u * (1 - u)));
    });
    CHECK(rel_err(generating_integral_closed_form(spec).value, want) <= 1e-10);
    spec.factors[0].x = 1.2;
    CHECK_THROWS_AS(generating_integral_closed_form(spec), DomainError);
}

TEST_CASE("generating integral validity gates")
{
    GeneratingIntegralSpec spec{BinomialGenerator{0.7, 1.0}, 2.1, 0.8, 1, 1, 1.0, 0.6, 0.3, {}};
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = {BinomialGenerator{0.7, 1.0}, 0.8, 2.1, 0, 0, 1.0, 0.6, 0.3, {}};
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = {BinomialGenerator{0.7, 1.0}, 0.8, 2.1, 1, 1, 1.0, 0.6, 1.3, {}};
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = {GegenbauerGenerator{0.7, 1.5}, 0.8, 2.1, 1, 1, 1.0, 0.6, 0.3, {}};
    CHECK_THROWS_AS(spec.validate(), DomainError);
}

TEST_CASE("generating integral with s = 2r and delta = omega")
{
    GeneratingIntegralSpec spec{BinomialGenerator{0.7, 1.0}, 1.5, 3.0, 0.5, 0.5, 1.0, 0.6, -0.4, {}};
    CHECK(rel_err(generating_integral_closed_form(spec).value, evaluate_generating_integral_direct(spec).value)
          <= 1e-8);
}

TEST_CASE("pair cancellation at lambda one")
{
    // raw 3Ψ2[(a1,1),(a2,1),(1,1);(c,2),(1,1);p] = 2Ψ1[(a1,1),(a2,1);(c,2);p]
    oracle::Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        const double a1 = rng.uniform(0.3, 4);
        const double a2 = rng.uniform(0.3, 4);
        const double c = rng.uniform(0.5, 6);
        const Complex p = rng.disk(2.0);
        const WrightSpec two({{a1, 1}, {a2, 1}}, {{c, 2}});
        REQUIRE(rel_err(euler_kernel(a1, a2, c, 1.0, p, Normalization::raw).value, wright_psi(two, p).value)
                <= 1e-13);
    }
}

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(theorem1_spec(1, 1, 0.5, 0.5, 1.5, 0.2, 1, 0.5).validate(), DomainError);
    CHECK_THROWS_AS(theorem1_spec(-1, 1, 0.5, 0.5, 0.5, 0.2, 1, 0.5).validate(), DomainError);
    CHECK_THROWS_AS(theorem1_spec(1, 1, 0.5, 0.5, 0.5, 0.2, -1, 0.5).validate(), DomainError);
    CHECK_THROWS_AS(theorem3_spec(1, 1, 0.5, 1, 0, 0.2, 1, 1, 0.5).validate(), DomainError);
    CHECK_THROWS_AS(theorem3_spec(1, 1, 0.5, 0, 1, -2, 1, 1, 0.5).validate(), DomainError);
    CHECK_NOTHROW(theorem4_spec(1, 1, 0, 1, 0.5, 0.5, 1, 0.5).validate());
    CHECK(theorem4_spec(1, 1, 0, 1, 0.0, 0.0, 1, 0.5).xi_max() == doctest::Approx(0.25));
}
