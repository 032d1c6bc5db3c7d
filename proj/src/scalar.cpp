#include "wrightlab/scalar.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "detail/ext_math.hpp"
#include "wrightlab/errors.hpp"

namespace wrightlab {

using detail::Real;

bool is_nonpositive_integer(double x)
{
    return detail::on_pole(x);
}

double log_gamma(double x)
{
    return log_gamma_signed(x).log_abs;
}

SignedLog log_gamma_signed(double x)
{
    const auto r = detail::lgamma_ext(x);
    return {static_cast<double>(r.log_abs), r.sign};
}

double gamma_fn(double x)
{
    if (detail::on_pole(x)) {
        throw PoleError("gamma pole at " + std::to_string(x));
    }
    const Real v = std::tgamma(static_cast<Real>(x));
    if (!std::isfinite(v) || std::fabs(v) > DBL_MAX) {
        throw OverflowError("|gamma(" + std::to_string(x) + ")| exceeds double range");
    }
    return static_cast<double>(v);
}

double pochhammer(double a, unsigned n)
{
    Real p = 1;
    for (unsigned k = 0; k < n; ++k) {
        p *= static_cast<Real>(a) + k;
        if (p == 0) {
            return 0.0;
        }
    }
    if (std::fabs(p) > DBL_MAX) {
        throw OverflowError("pochhammer(" + std::to_string(a) + ", " + std::to_string(n)
                            + ") exceeds double range; use log_pochhammer_signed");
    }
    return static_cast<double>(p);
}

SignedLog log_pochhammer_signed(double a, unsigned n)
{
    const auto r = detail::log_pochhammer_ext(a, n);
    return {static_cast<double>(r.log_abs), r.sign};
}

double beta_fn(double x, double y)
{
    auto r = detail::lgamma_ext(x);
    r += detail::lgamma_ext(y);
    r -= detail::lgamma_ext(static_cast<Real>(x) + y);
    const Real v = r.sign * std::exp(r.log_abs);
    if (std::fabs(v) > DBL_MAX) {
        throw OverflowError("beta(" + std::to_string(x) + ", " + std::to_string(y) + ") exceeds double range");
    }
    return static_cast<double>(v);
}

} // namespace wrightlab
