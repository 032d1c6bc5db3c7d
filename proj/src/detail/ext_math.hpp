// Extended-precision kernels shared by the series modules. Every series
// coefficient is assembled as sign * exp(sum of log-gammas) in long double and
// only rounded to double once the partial sum is final.
#ifndef WRIGHTLAB_DETAIL_EXT_MATH_HPP
#define WRIGHTLAB_DETAIL_EXT_MATH_HPP

#include <cmath>
#include <complex>
#include <string>

#include "wrightlab/errors.hpp"
#include "wrightlab/scalar.hpp"

namespace wrightlab::detail {

using Real = long double;
using ComplexL = std::complex<long double>;

/// log|v| and sign(v). sign == 0 encodes an exact zero.
struct LogTerm {
    Real log_abs = 0;
    int sign = 1;

    LogTerm& operator+=(const LogTerm& o)
    {
        log_abs += o.log_abs;
        sign *= o.sign;
        return *this;
    }
    LogTerm& operator-=(const LogTerm& o)
    {
        if (o.sign == 0) {
            throw PoleError("division by an exact zero factor");
        }
        log_abs -= o.log_abs;
        sign *= o.sign;
        return *this;
    }
};

inline bool on_pole(Real x)
{
    return x <= 0 && x == std::floor(x);
}

/// ln|Γ(x)| with sign; throws PoleError on nonpositive integers.
inline LogTerm lgamma_ext(Real x)
{
    if (on_pole(x)) {
        throw PoleError("gamma pole at " + std::to_string(static_cast<double>(x)));
    }
    int sign = 1;
    const Real v = ::lgammal_r(x, &sign);
    return {v, sign};
}

/// ln|(a)_n| with sign, finite for every real a (nonpositive integers give
/// exact zeros once n passes -a).
inline LogTerm log_pochhammer_ext(Real a, long n)
{
    if (n == 0) {
        return {0, 1};
    }
    if (on_pole(a)) {
        if (static_cast<Real>(n) > -a) {
            return {0, 0};
        }
        // (a)_n = (-1)^n (-a)!/(-a-n)! for a = -N, n <= N.
        LogTerm r = lgamma_ext(1 - a);
        r -= lgamma_ext(1 - a - static_cast<Real>(n));
        if (n % 2 != 0) {
            r.sign = -r.sign;
        }
        return r;
    }
    LogTerm r = lgamma_ext(a + static_cast<Real>(n));
    r -= lgamma_ext(a);
    return r;
}

/// ln k!
inline Real log_factorial(long k)
{
    int s = 1;
    return ::lgammal_r(static_cast<Real>(k) + 1, &s);
}

/// Multiplies coefficients by z^k with the power kept in log form.
class LogPower {
public:
    explicit LogPower(Complex z)
        : zero_(z == Complex{0, 0})
        , real_(z.imag() == 0)
        , negative_(z.imag() == 0 && z.real() < 0)
        , log_abs_(zero_ ? Real(0) : std::log(std::abs(std::complex<Real>(z.real(), z.imag()))))
        , arg_(zero_ ? Real(0) : std::atan2(static_cast<Real>(z.imag()), static_cast<Real>(z.real())))
    {
    }

    bool is_zero() const { return zero_; }

    /// coef * z^k
    ComplexL apply(const LogTerm& coef, long k) const
    {
        if (coef.sign == 0 || (zero_ && k > 0)) {
            return {0, 0};
        }
        const Real mag = std::exp(coef.log_abs + static_cast<Real>(k) * log_abs_);
        Real s = static_cast<Real>(coef.sign);
        if (real_) {
            if (negative_ && (k % 2 != 0)) {
                s = -s;
            }
            return {s * mag, 0};
        }
        const Real phase = static_cast<Real>(k) * arg_;
        return {s * mag * std::cos(phase), s * mag * std::sin(phase)};
    }

private:
    bool zero_;
    bool real_;
    bool negative_;
    Real log_abs_;
    Real arg_;
};

inline ComplexL widen(Complex z)
{
    return {z.real(), z.imag()};
}

inline Complex narrow(ComplexL z)
{
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline ComplexL to_linear(const LogTerm& t)
{
    if (t.sign == 0) {
        return {0, 0};
    }
    return {static_cast<Real>(t.sign) * std::exp(t.log_abs), 0};
}

} // namespace wrightlab::detail

#endif
