#ifndef WRIGHTLAB_MULTIVAR_HPP
#define WRIGHTLAB_MULTIVAR_HPP

#include <span>

#include "wrightlab/series.hpp"

namespace wrightlab {

// Multiple series are summed by total degree; the SeriesPolicy stopping rule
// sees one term per degree (the whole diagonal), and max_terms caps the degree.

/// Appell F1(α; β, β'; γ; x, y), |x|, |y| < 1.
SeriesResult appell_f1(double alpha, double beta, double beta_prime, double gamma, Complex x, Complex y,
                       const SeriesPolicy& policy = {});

/// Appell F3(α, α'; β, β'; γ; x, y), |x|, |y| < 1.
SeriesResult appell_f3(double alpha, double alpha_prime, double beta, double beta_prime, double gamma,
                       Complex x, Complex y, const SeriesPolicy& policy = {});

/// Humbert Φ2(b1, b2; c; x, y), entire in x and y.
SeriesResult humbert_phi2(double b1, double b2, double c, Complex x, Complex y,
                          const SeriesPolicy& policy = {});

/// Lauricella F_D^(n)(α; α_1..α_n; γ; x_1..x_n), max |x_i| < 1.
SeriesResult lauricella_fd(double alpha, std::span<const double> alphas, double gamma,
                           std::span<const Complex> xs, const SeriesPolicy& policy = {});

/// Gegenbauer polynomial C_n^(a)(x) by three-term recurrence.
double gegenbauer(unsigned n, double a, double x);

} // namespace wrightlab

#endif
