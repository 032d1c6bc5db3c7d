#include "wrightlab/series.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "detail/ext_math.hpp"
#include "detail/series_sum.hpp"
#include "wrightlab/errors.hpp"

namespace wrightlab {

using detail::ComplexL;
using detail::LogPower;
using detail::LogTerm;
using detail::Real;

void SeriesPolicy::validate() const
{
    if (!(rel_tol > 0) || !(abs_tol >= 0) || consecutive_small < 1 || max_terms < 1
        || !(divergence_growth_limit > 0)) {
        throw DomainError("invalid SeriesPolicy");
    }
}

SeriesPolicy SeriesPolicy::from_environment()
{
    SeriesPolicy policy;
    if (const char* env = std::getenv("WRIGHTLAB_MAX_TERMS"); env != nullptr && *env != '\0') {
        const std::string text(env);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
            throw DomainError("WRIGHTLAB_MAX_TERMS must be a positive integer, got '" + text + "'");
        }
        policy.max_terms = value;
    }
    return policy;
}

WrightSpec::WrightSpec(std::vector<WeightedParam> upper, std::vector<WeightedParam> lower)
    : upper_(std::move(upper))
    , lower_(std::move(lower))
{
    for (const auto* group : {&upper_, &lower_}) {
        for (const auto& p : *group) {
            if (!std::isfinite(p.value) || !std::isfinite(p.weight) || !(p.weight > 0)) {
                throw DomainError("Wright parameter weights must be finite and positive");
            }
        }
    }
    // Allow rounding noise so that margins which are exactly zero in exact
    // arithmetic (e.g. λ = 0 in 3Ψ2) still pass.
    if (convergence_margin() < -1e-12) {
        throw DomainError("Wright series diverges: 1 + sum(B) - sum(A) = "
                          + std::to_string(convergence_margin()) + " < 0");
    }
}

double WrightSpec::convergence_margin() const
{
    double margin = 1.0;
    for (const auto& p : lower_) {
        margin += p.weight;
    }
    for (const auto& p : upper_) {
        margin -= p.weight;
    }
    return margin;
}

SeriesSummer::SeriesSummer(const SeriesPolicy& policy)
    : policy_(policy)
{
    policy_.validate();
}

bool SeriesSummer::add(ComplexL term)
{
    const Real mag = std::abs(term);
    if (!std::isfinite(mag)) {
        throw DivergenceError("non-finite series term at index " + std::to_string(terms_));
    }
    if (terms_ > 50 && mag > static_cast<Real>(policy_.divergence_growth_limit) * max_partial_) {
        throw DivergenceError("series terms grow without bound (index " + std::to_string(terms_) + ")");
    }
    partial_ += term;
    ++terms_;
    const Real partial_mag = std::abs(partial_);
    if (partial_mag > max_partial_) {
        max_partial_ = partial_mag;
    }
    last_small_ = mag;
    if (mag <= static_cast<Real>(policy_.rel_tol) * partial_mag + static_cast<Real>(policy_.abs_tol)) {
        ++small_run_;
    } else {
        small_run_ = 0;
    }
    return small_run_ >= policy_.consecutive_small;
}

SeriesResult SeriesSummer::result() const
{
    const Complex value = detail::narrow(partial_);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw OverflowError("series value exceeds double range");
    }
    return {value, terms_, static_cast<double>(last_small_) * policy_.consecutive_small};
}

namespace {

LogTerm wright_coefficient(const WrightSpec& spec, long k)
{
    LogTerm c{-detail::log_factorial(k), 1};
    const Real kk = static_cast<Real>(k);
    for (const auto& p : spec.upper()) {
        c += detail::lgamma_ext(static_cast<Real>(p.value) + static_cast<Real>(p.weight) * kk);
    }
    for (const auto& p : spec.lower()) {
        c -= detail::lgamma_ext(static_cast<Real>(p.value) + static_cast<Real>(p.weight) * kk);
    }
    return c;
}

SeriesResult sum_wright(const WrightSpec& spec, Complex z, const SeriesPolicy& policy, const LogTerm& norm,
                        const char* what)
{
    const LogPower power(z);
    return detail::sum_series(
        [&](long k) -> ComplexL {
            if (power.is_zero() && k > 0) {
                return {0, 0};
            }
            LogTerm c = wright_coefficient(spec, k);
            c -= norm;
            return power.apply(c, k);
        },
        policy, what);
}

} // namespace

SeriesResult wright_psi(const WrightSpec& spec, Complex z, const SeriesPolicy& policy)
{
    return sum_wright(spec, z, policy, LogTerm{0, 1}, "wright_psi");
}

SeriesResult wright_psi_normalized(const WrightSpec& spec, Complex z, const SeriesPolicy& policy)
{
    LogTerm norm{0, 1};
    for (const auto& p : spec.upper()) {
        norm += detail::lgamma_ext(p.value);
    }
    for (const auto& p : spec.lower()) {
        norm -= detail::lgamma_ext(p.value);
    }
    return sum_wright(spec, z, policy, norm, "wright_psi_normalized");
}

SeriesResult hyper_pfq(std::span<const double> num, std::span<const double> den, Complex z,
                       const SeriesPolicy& policy)
{
    for (const double b : den) {
        if (detail::on_pole(b)) {
            throw PoleError("pFq denominator parameter " + std::to_string(b) + " is a nonpositive integer");
        }
    }
    const LogPower power(z);
    return detail::sum_series(
        [&](long k) -> ComplexL {
            if (power.is_zero() && k > 0) {
                return {0, 0};
            }
            LogTerm c{-detail::log_factorial(k), 1};
            for (const double a : num) {
                c += detail::log_pochhammer_ext(a, k);
            }
            for (const double b : den) {
                c -= detail::log_pochhammer_ext(b, k);
            }
            return power.apply(c, k);
        },
        policy, "hyper_pfq");
}

SeriesResult mittag_leffler(double lambda, Complex z, const SeriesPolicy& policy)
{
    if (!(lambda >= 0) || !std::isfinite(lambda)) {
        throw DomainError("Mittag-Leffler order must be >= 0");
    }
    if (lambda == 0 && !(std::abs(z) < 1)) {
        throw DomainError("E_0(z) = 1/(1-z) needs |z| < 1");
    }
    const LogPower power(z);
    return detail::sum_series(
        [&](long k) -> ComplexL {
            if (power.is_zero() && k > 0) {
                return {0, 0};
            }
            LogTerm c{0, 1};
            c -= detail::lgamma_ext(static_cast<Real>(lambda) * static_cast<Real>(k) + 1);
            return power.apply(c, k);
        },
        policy, "mittag_leffler");
}

Complex mittag_leffler_fast(double lambda, Complex z, const SeriesPolicy& policy)
{
    if (lambda == 0) {
        if (!(std::abs(z) < 1)) {
            throw DomainError("E_0(z) = 1/(1-z) needs |z| < 1");
        }
        return 1.0 / (1.0 - z);
    }
    if (lambda == 1) {
        return std::exp(z);
    }
    if (lambda == 2) {
        return std::cosh(std::sqrt(z));
    }
    return mittag_leffler(lambda, z, policy).value;
}

} // namespace wrightlab
