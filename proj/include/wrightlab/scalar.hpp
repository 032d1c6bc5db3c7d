#ifndef WRIGHTLAB_SCALAR_HPP
#define WRIGHTLAB_SCALAR_HPP

#include <complex>

namespace wrightlab {

using Complex = std::complex<double>;

/// ln|x| together with the sign of x.
struct SignedLog {
    double log_abs;
    int sign;
};

bool is_nonpositive_integer(double x);

/// ln Γ(x) for x > 0, ln|Γ(x)| for negative non-integer x.
/// Throws PoleError at x = 0, -1, -2, ...
double log_gamma(double x);

/// (ln|Γ(x)|, sign Γ(x)).
SignedLog log_gamma_signed(double x);

/// Γ(x), reflection for negative arguments. Throws PoleError / OverflowError.
double gamma_fn(double x);

/// Rising factorial a(a+1)...(a+n-1), with (a)_0 = 1 for every a.
double pochhammer(double a, unsigned n);

/// ln|(a)_n| with sign; sign is 0 when the product is exactly zero.
SignedLog log_pochhammer_signed(double a, unsigned n);

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y), assembled in log space.
double beta_fn(double x, double y);

} // namespace wrightlab

#endif
