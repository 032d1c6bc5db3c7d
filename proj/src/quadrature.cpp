#include "wrightlab/quadrature.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "wrightlab/errors.hpp"

namespace wrightlab {

namespace {

using ComplexL = std::complex<long double>;

// sinh(6.1) * pi/2 ~ 350: nodes beyond sit within ~1e-300 of an endpoint.
constexpr double kMaxAbscissa = 6.1;

class TanhSinh {
public:
    TanhSinh(const OffsetIntegrand& f, double a, double b)
        : f_(f)
        , a_(a)
        , b_(b)
        , half_width_(0.5 * (b - a))
    {
    }

    /// Adds the symmetric pair of nodes at ±tau (or the centre when tau = 0).
    void add(double tau)
    {
        constexpr double half_pi = 0.5 * std::numbers::pi;
        const double y = half_pi * std::sinh(tau);
        const double cy = std::cosh(y);
        const double weight = half_width_ * half_pi * std::cosh(tau) / (cy * cy);
        if (weight == 0.0) {
            return;
        }
        const double gap = half_width_ * std::exp(-std::fabs(y)) / cy;
        if (tau == 0.0) {
            accumulate(weight, {a_ + half_width_, half_width_, half_width_});
            return;
        }
        accumulate(weight, {b_ - gap, (b_ - a_) - gap, gap});
        accumulate(weight, {a_ + gap, gap, (b_ - a_) - gap});
    }

    ComplexL sum() const { return sum_; }
    long evaluations() const { return evaluations_; }

private:
    void accumulate(double weight, const Abscissa& node)
    {
        const Complex v = f_(node);
        ++evaluations_;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw EvaluationError("integrand is not finite at t = " + std::to_string(node.t));
        }
        sum_ += ComplexL(v.real(), v.imag()) * static_cast<long double>(weight);
    }

    const OffsetIntegrand& f_;
    double a_;
    double b_;
    double half_width_;
    ComplexL sum_{0, 0};
    long evaluations_ = 0;
};

Complex to_double(ComplexL v)
{
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

} // namespace

void QuadraturePolicy::validate() const
{
    if (!(target_abs_tol > 0) || min_levels < 1 || max_levels < min_levels) {
        throw DomainError("invalid QuadraturePolicy");
    }
}

QuadratureResult tanh_sinh_integrate_offsets(const OffsetIntegrand& f, double a, double b,
                                             const QuadraturePolicy& policy)
{
    policy.validate();
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("tanh_sinh_integrate needs finite a < b");
    }
    TanhSinh rule(f, a, b);
    double h = 1.0;
    for (int k = 0; k * h <= kMaxAbscissa; ++k) {
        rule.add(k * h);
    }
    QuadratureResult result;
    Complex previous = to_double(rule.sum() * static_cast<long double>(h));
    for (int level = 1; level <= policy.max_levels; ++level) {
        h *= 0.5;
        for (int j = 1; j * h <= kMaxAbscissa; j += 2) {
            rule.add(j * h);
        }
        const Complex current = to_double(rule.sum() * static_cast<long double>(h));
        const double err = std::abs(current - previous);
        result.level_errors.push_back(err);
        result.value = current;
        result.err_estimate = err;
        result.levels = level;
        result.evaluations = rule.evaluations();
        if (level >= policy.min_levels && err <= policy.target_abs_tol * std::fmax(1.0, std::abs(current))) {
            return result;
        }
        previous = current;
    }
    throw NonConvergenceError("tanh-sinh level difference " + std::to_string(result.err_estimate)
                              + " still above tolerance after " + std::to_string(policy.max_levels)
                              + " levels");
}

QuadratureResult tanh_sinh_integrate(const Integrand& f, double a, double b, const QuadraturePolicy& policy)
{
    const OffsetIntegrand wrapped = [&](const Abscissa& node) -> Complex {
        // Nodes that round onto an endpoint carry negligible weight.
        if (node.t <= a || node.t >= b) {
            return {0.0, 0.0};
        }
        return f(node.t);
    };
    return tanh_sinh_integrate_offsets(wrapped, a, b, policy);
}

} // namespace wrightlab
