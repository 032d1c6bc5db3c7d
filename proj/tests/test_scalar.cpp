#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wrightlab/errors.hpp"
#include "wrightlab/scalar.hpp"

using namespace wrightlab;

namespace {
const double kSqrtPi = std::sqrt(M_PI);
}

TEST_CASE("log_gamma at integers and one half")
{
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log_gamma(0.5) == doctest::Approx(std::log(kSqrtPi)).epsilon(1e-15));
    CHECK(log_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-15));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("gamma_fn values and reflection")
{
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-15));
    CHECK(gamma_fn(0.5) == doctest::Approx(kSqrtPi).epsilon(1e-15));
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * kSqrtPi).epsilon(1e-15));
    CHECK(gamma_fn(-1.5) == doctest::Approx(4.0 * kSqrtPi / 3.0).epsilon(1e-15));
}

TEST_CASE("gamma poles and overflow")
{
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-2.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(200.0), OverflowError);
    CHECK(std::isfinite(log_gamma(200.0)));
    CHECK(is_nonpositive_integer(-4.0));
    CHECK_FALSE(is_nonpositive_integer(-4.5));
    CHECK_FALSE(is_nonpositive_integer(1.0));
}

TEST_CASE("log_gamma_signed tracks the sign on the negative axis")
{
    const SignedLog a = log_gamma_signed(-0.5);
    CHECK(a.sign == -1);
    CHECK(a.log_abs == doctest::Approx(std::log(2.0 * kSqrtPi)).epsilon(1e-15));
    const SignedLog b = log_gamma_signed(-1.5);
    CHECK(b.sign == 1);
    CHECK(log_gamma_signed(3.2).sign == 1);
}

TEST_CASE("pochhammer examples")
{
    CHECK(pochhammer(3.0, 4) == doctest::Approx(360.0).epsilon(1e-15));
    CHECK(pochhammer(1.0, 6) == doctest::Approx(720.0).epsilon(1e-15));
    for (double a : {-3.0, 0.0, 0.7, 12.5}) {
        CHECK(pochhammer(a, 0) == 1.0);
    }
    CHECK(pochhammer(-3.0, 4) == 0.0);
    CHECK(pochhammer(-3.0, 3) == doctest::Approx(-6.0).epsilon(1e-15));
    const SignedLog z = log_pochhammer_signed(-2.0, 5);
    CHECK(z.sign == 0);
    const SignedLog n = log_pochhammer_signed(-2.5, 3); // (-2.5)(-1.5)(-0.5)
    CHECK(n.sign == -1);
    CHECK(std::exp(n.log_abs) == doctest::Approx(1.875).epsilon(1e-15));
}

TEST_CASE("beta_fn examples")
{
    CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(beta_fn(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK_THROWS_AS(beta_fn(-1.0, 2.0), PoleError);
}

TEST_CASE("beta symmetry on random pairs")
{
    oracle::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(0.1, 20.0);
        const double y = rng.uniform(0.1, 20.0);
        const double l = beta_fn(x, y);
        const double r = beta_fn(y, x);
        REQUIRE(std::abs(l - r) <= 1e-14 * std::abs(r));
        REQUIRE(oracle::rel_err(l, oracle::beta(x, y)) <= 1e-12);
    }
}

TEST_CASE("gamma recurrence")
{
    oracle::Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(0.1, 50.0);
        REQUIRE(oracle::rel_err(gamma_fn(x + 1.0), x * gamma_fn(x)) <= 1e-13);
        REQUIRE(oracle::rel_err(gamma_fn(x), std::tgamma(x)) <= 1e-13);
    }
}

TEST_CASE("pochhammer splitting")
{
    oracle::Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.uniform(-10.0, 10.0);
        const unsigned m = static_cast<unsigned>(rng.integer(0, 15));
        const unsigned n = static_cast<unsigned>(rng.integer(0, 15));
        const double whole = pochhammer(a, m + n);
        const double parts = pochhammer(a, m) * pochhammer(a + m, n);
        REQUIRE(std::abs(whole - parts) <= 1e-13 * std::abs(whole));
        REQUIRE(oracle::rel_err(pochhammer(a, m), oracle::poch(a, static_cast<int>(m))) <= 1e-13);
    }
}

TEST_CASE("log_gamma agrees with the log of gamma_fn")
{
    oracle::Rng rng(14);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(-20.0, 170.0);
        if (is_nonpositive_integer(x)) {
            continue;
        }
        const double direct = std::log(std::abs(gamma_fn(x)));
        const double lg = log_gamma(x);
        REQUIRE(std::abs(lg - direct) <= 1e-13 * std::max(1.0, std::abs(direct)));
    }
}
