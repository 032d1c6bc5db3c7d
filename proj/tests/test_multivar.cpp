#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wrightlab/errors.hpp"
#include "wrightlab/multivar.hpp"
#include "wrightlab/quadrature.hpp"
#include "wrightlab/series.hpp"

using namespace wrightlab;
using oracle::rel_err;

namespace {

Complex f21(double a, double b, double c, Complex z)
{
    return oracle::pfq({a, b}, {c}, z, 2000);
}

} // namespace

TEST_CASE("Appell F1 examples")
{
    CHECK(appell_f1(0.7, 0.4, 1.1, 2.0, 0.0, 0.0).value == Complex(1.0));
    const Complex x{0.3, 0.1};
    CHECK(rel_err(appell_f1(0.7, 0.4, 0.0, 2.0, x, -0.6).value, f21(0.7, 0.4, 2.0, x)) <= 1e-13);

    // Euler integral: B(α,γ-α) F1 = ∫ t^(α-1)(1-t)^(γ-α-1)(1-xt)^(-β)(1-yt)^(-β') dt
    const double a = 0.7;
    const double b1 = 0.4;
    const double b2 = 1.1;
    const double g = 2.0;
    const Complex integral = oracle::beta_weighted(a, g - a, [&](double t) {
        return Complex(std::pow(1 - 0.3 * t, -b1) * std::pow(1 + 0.2 * t, -b2));
    });
    CHECK(rel_err(appell_f1(a, b1, b2, g, 0.3, -0.2).value, integral / oracle::beta(a, g - a)) <= 1e-12);
}

TEST_CASE("Appell F3 examples")
{
    CHECK(appell_f3(0.9, 0.6, 0.5, 1.2, 2.5, 0.0, 0.0).value == Complex(1.0));
    CHECK(rel_err(appell_f3(0.9, 0.6, 0.5, 0.0, 2.5, 0.4, 0.7).value, f21(0.9, 0.5, 2.5, 0.4)) <= 1e-13);
    // F3 integral over the simplex:
    // B(α,β) F3(α,β,α1,α2;α+β;x1,x2) = ∫ t^(α-1)(1-t)^(β-1)(1-x1 t)^(-α1)(1-x2(1-t))^(-α2) dt
    const double al = 0.9;
    const double be = 0.6;
    const double a1 = 0.5;
    const double a2 = 1.2;
    const Complex integral = oracle::beta_weighted(al, be, [&](double t) {
        return Complex(std::pow(1 - 0.25 * t, -a1) * std::pow(1 - 0.35 * (1 - t), -a2));
    });
    CHECK(rel_err(appell_f3(al, be, a1, a2, al + be, 0.25, 0.35).value, integral / oracle::beta(al, be)) <= 1e-12);
    CHECK(rel_err(appell_f3(al, 0.6, a1, a2, 2.5, 0.25, 0.35).value,
                  oracle::appell_f3(al, 0.6, a1, a2, 2.5, 0.25, 0.35, 90))
          <= 1e-12);
}

TEST_CASE("Humbert Phi2 examples")
{
    CHECK(humbert_phi2(0.8, 0.8, 1.5, 0.0, 0.0).value == Complex(1.0));
    CHECK(rel_err(humbert_phi2(0.8, 0.0, 1.5, 0.4, 3.0).value, oracle::pfq({0.8}, {1.5}, 0.4)) <= 1e-14);
    // Φ2[a,a;b;x,t] = Σ_n (a)_n/(b)_n 1F1(a;b+n;x) t^n/n!
    const double a = 0.8;
    const double b = 1.5;
    Complex want = 0.0;
    for (int n = 0; n < 60; ++n) {
        want += oracle::poch(a, n) / oracle::poch(b, n) * oracle::pfq({a}, {b + n}, 0.4) * std::pow(0.7, n)
            / oracle::factorial(n);
    }
    CHECK(rel_err(humbert_phi2(a, a, b, 0.4, 0.7).value, want) <= 1e-13);
    // entire: large arguments are allowed
    CHECK(rel_err(humbert_phi2(0.8, 1.3, 1.5, {3.0, 1.0}, -4.0).value,
                  oracle::humbert_phi2(0.8, 1.3, 1.5, {3.0, 1.0}, -4.0, 80))
          <= 1e-11);
}

TEST_CASE("Lauricella FD examples")
{
    const double one[] = {0.4};
    const Complex x1[] = {{0.3, -0.2}};
    CHECK(rel_err(lauricella_fd(0.6, one, 2.2, x1).value, f21(0.6, 0.4, 2.2, x1[0])) <= 1e-13);

    const double two[] = {0.4, 1.1};
    const Complex x2[] = {0.3, -0.2};
    CHECK(rel_err(lauricella_fd(0.7, two, 2.0, x2).value, appell_f1(0.7, 0.4, 1.1, 2.0, 0.3, -0.2).value) <= 1e-14);

    const double three[] = {0.3, 0.5, 0.7};
    const Complex x3[] = {0.2, -0.15, 0.3};
    const Complex fd = lauricella_fd(0.6, three, 2.2, x3).value;
    CHECK(rel_err(fd, oracle::lauricella_fd3(0.6, {0.3, 0.5, 0.7}, 2.2, {0.2, -0.15, 0.3})) <= 1e-12);
    const Complex integral = oracle::beta_weighted(0.6, 1.6, [](double t) {
        return Complex(std::pow(1 - 0.2 * t, -0.3) * std::pow(1 + 0.15 * t, -0.5) * std::pow(1 - 0.3 * t, -0.7));
    });
    CHECK(rel_err(fd, integral / oracle::beta(0.6, 1.6)) <= 1e-12);
}

TEST_CASE("multivariate domain and pole errors")
{
    CHECK_THROWS_AS(appell_f1(0.7, 0.4, 1.1, 2.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(appell_f3(0.7, 0.4, 1.1, 0.3, 2.0, 0.2, {0.0, -1.2}), DomainError);
    CHECK_THROWS_AS(appell_f1(0.7, 0.4, 1.1, -2.0, 0.1, 0.0), PoleError);
    CHECK_THROWS_AS(humbert_phi2(0.7, 0.4, 0.0, 0.1, 0.1), PoleError);
    const double alphas[] = {0.3, 0.5};
    const Complex xs[] = {0.2};
    CHECK_THROWS_AS(lauricella_fd(0.6, alphas, 2.2, xs), DomainError);
}

TEST_CASE("F1 argument symmetry")
{
    oracle::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(0.2, 3.0);
        const double b1 = rng.uniform(0.2, 3.0);
        const double b2 = rng.uniform(0.2, 3.0);
        const double c = rng.uniform(0.5, 4.0);
        const Complex x = rng.disk(0.7);
        const Complex y = rng.disk(0.7);
        REQUIRE(rel_err(appell_f1(a, b1, b2, c, x, y).value, appell_f1(a, b2, b1, c, y, x).value) <= 1e-12);
    }
}

TEST_CASE("diagonal summation equals rectangular summation")
{
    oracle::Rng rng(32);
    for (int i = 0; i < 30; ++i) {
        const double a = rng.uniform(0.2, 2.0);
        const double a2 = rng.uniform(0.2, 2.0);
        const double b1 = rng.uniform(0.2, 2.0);
        const double b2 = rng.uniform(0.2, 2.0);
        const double c = rng.uniform(0.5, 3.0);
        const Complex x = rng.disk(0.5);
        const Complex y = rng.disk(0.5);
        REQUIRE(rel_err(appell_f1(a, b1, b2, c, x, y).value, oracle::appell_f1(a, b1, b2, c, x, y)) <= 1e-11);
        REQUIRE(rel_err(appell_f3(a, a2, b1, b2, c, x, y).value, oracle::appell_f3(a, a2, b1, b2, c, x, y))
                <= 1e-11);
        REQUIRE(rel_err(humbert_phi2(b1, b2, c, x, y).value, oracle::humbert_phi2(b1, b2, c, x, y)) <= 1e-11);
    }
}

TEST_CASE("Lauricella degeneracy ladder")
{
    const double alphas[] = {0.3, 0.0, 0.7};
    const Complex zeros[] = {0.0, 0.0, 0.0};
    CHECK(lauricella_fd(0.6, alphas, 2.2, zeros).value == Complex(1.0));
    const Complex xa[] = {0.2, -0.15, 0.3};
    const Complex xb[] = {0.2, 0.85, 0.3};
    const Complex va = lauricella_fd(0.6, alphas, 2.2, xa).value;
    const Complex vb = lauricella_fd(0.6, alphas, 2.2, xb).value;
    CHECK(rel_err(va, vb) <= 1e-13);
    const double two[] = {0.3, 0.7};
    const Complex x2[] = {0.2, 0.3};
    CHECK(rel_err(va, lauricella_fd(0.6, two, 2.2, x2).value) <= 1e-13);
}

TEST_CASE("Gegenbauer values")
{
    CHECK(gegenbauer(0, 1.7, 0.4) == 1.0);
    CHECK(gegenbauer(1, 1.5, 0.3) == doctest::Approx(0.9).epsilon(1e-15));
    // C_2^(a)(x) = 2a(a+1)x² - a
    CHECK(gegenbauer(2, 0.6, 0.3) == doctest::Approx(2 * 0.6 * 1.6 * 0.09 - 0.6).epsilon(1e-14));
    for (unsigned n = 0; n < 40; ++n) {
        REQUIRE(rel_err(gegenbauer(n, 0.6, 1.0), oracle::poch(1.2, static_cast<int>(n)) / oracle::factorial(static_cast<int>(n)))
                <= 1e-13);
    }
}

TEST_CASE("Gegenbauer generating function")
{
    oracle::Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        const double a = rng.uniform(0.3, 2.0);
        const double x = rng.uniform(-1.0, 1.0);
        const double t = rng.uniform(-0.4, 0.4);
        double sum = 0.0;
        double tn = 1.0;
        for (unsigned n = 0; n < 200; ++n) {
            sum += gegenbauer(n, a, x) * tn;
            tn *= t;
        }
        REQUIRE(rel_err(sum, std::pow(1 - 2 * x * t + t * t, -a)) <= 1e-10);
    }
}
