#ifndef WRIGHTLAB_QUADRATURE_HPP
#define WRIGHTLAB_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "wrightlab/scalar.hpp"

namespace wrightlab {

struct QuadraturePolicy {
    double target_abs_tol = 1e-12;
    int max_levels = 12;
    int min_levels = 3;

    void validate() const;
};

struct QuadratureResult {
    Complex value;
    double err_estimate = 0.0;
    long evaluations = 0;
    int levels = 0;
    /// |S_L - S_{L-1}| for L = 1 .. levels.
    std::vector<double> level_errors;
};

/// A quadrature node with its distances to both endpoints, computed without
/// cancellation so that (t-a)^s and (b-t)^s stay accurate near the ends.
struct Abscissa {
    double t;
    double from_a;
    double to_b;
};

using Integrand = std::function<Complex(double)>;
using OffsetIntegrand = std::function<Complex(const Abscissa&)>;

/// Doubling-level tanh-sinh rule on (a, b). Stops once
/// |S_L - S_{L-1}| <= target_abs_tol * max(1, |S_L|) with L >= min_levels.
/// Throws NonConvergenceError after max_levels, EvaluationError on a
/// non-finite integrand value.
QuadratureResult tanh_sinh_integrate(const Integrand& f, double a, double b, const QuadraturePolicy& policy = {});

/// Same rule, handing the integrand the endpoint distances of each node.
QuadratureResult tanh_sinh_integrate_offsets(const OffsetIntegrand& f, double a, double b,
                                             const QuadraturePolicy& policy = {});

} // namespace wrightlab

#endif
