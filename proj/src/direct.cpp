#include "wrightlab/direct.hpp"

#include <cmath>

#include "detail/overloaded.hpp"
#include "wrightlab/euler.hpp"

namespace wrightlab {

namespace {

/// χ(t)^γ and ξ(t) at one node.
struct ChiXi {
    double chi_power;
    double xi;
};

ChiXi chi_xi(const EulerIntegralSpec& spec, const Abscissa& node)
{
    const double t = node.t;
    const double xi = node.from_a * node.to_b;
    return std::visit(
        detail::overloaded{
            [&](const ProductChi& f) -> ChiXi {
                return {std::pow(1.0 - f.x1 * t, -f.alpha1) * std::pow(1.0 - f.x2 * t, -f.alpha2), xi};
            },
            [&](const ReflectedProductChi& f) -> ChiXi {
                return {std::pow(1.0 - f.x1 * t, -f.alpha1) * std::pow(1.0 - f.x2 * node.to_b, -f.alpha2), xi};
            },
            [&](const LinearChi& f) -> ChiXi {
                const double chi = (spec.a * f.u + f.v) + f.u * node.from_a;
                return {std::pow(chi, spec.gamma), xi};
            },
            [&](const RationalChi& f) -> ChiXi {
                const double chi = (spec.b - spec.a) + f.nu * node.from_a + f.mu * node.to_b;
                return {std::pow(chi, spec.gamma), xi / (chi * chi)};
            },
            [&](const MultiProductChi& f) -> ChiXi {
                double chi = 1.0;
                for (std::size_t i = 0; i < f.xs.size(); ++i) {
                    chi *= std::pow(1.0 - f.xs[i] * t, -f.alphas[i]);
                }
                return {chi, xi};
            },
        },
        spec.family);
}

} // namespace

QuadratureResult evaluate_integral_direct(const EulerIntegralSpec& spec, const QuadraturePolicy& qpolicy,
                                          const SeriesPolicy& spolicy)
{
    spec.validate();
    const OffsetIntegrand integrand = [&](const Abscissa& node) -> Complex {
        const auto [chi_power, xi] = chi_xi(spec, node);
        const double weight = std::pow(node.from_a, spec.alpha - 1.0) * std::pow(node.to_b, spec.beta - 1.0);
        return weight * chi_power * mittag_leffler_fast(spec.lambda, spec.p * xi, spolicy);
    };
    QuadratureResult r = tanh_sinh_integrate_offsets(integrand, spec.a, spec.b, qpolicy);
    const double norm = beta_fn(spec.alpha, spec.beta);
    r.value /= norm;
    r.err_estimate /= norm;
    return r;
}

QuadratureResult evaluate_generating_integral_direct(const GeneratingIntegralSpec& spec,
                                                     const QuadraturePolicy& qpolicy, const SeriesPolicy& spolicy)
{
    spec.validate();
    const OffsetIntegrand integrand = [&](const Abscissa& node) -> Complex {
        const double u = node.from_a;
        const double v = node.to_b;
        double weight = std::pow(u, spec.r - 1.0) * std::pow(v, spec.s - spec.r - 1.0);
        for (const auto& f : spec.factors) {
            weight *= std::pow(1.0 - f.x * u, -f.alpha);
        }
        const Complex tau = spec.t * (std::pow(u, spec.delta) * std::pow(v, spec.omega));
        return weight * generator_value(spec.generator, tau, spolicy)
            * mittag_leffler_fast(spec.lambda, spec.p * (u * v), spolicy);
    };
    return tanh_sinh_integrate_offsets(integrand, 0.0, 1.0, qpolicy);
}

} // namespace wrightlab
