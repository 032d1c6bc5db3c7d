#include "wrightlab/euler.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "detail/degree_sum.hpp"
#include "detail/ext_math.hpp"
#include "detail/overloaded.hpp"
#include "detail/series_sum.hpp"
#include "wrightlab/errors.hpp"

namespace wrightlab {

using detail::CoefficientStream;
using detail::ComplexL;
using detail::DegreeConvolution;
using detail::LogTerm;
using detail::Real;

namespace {

ComplexL kernel_l(double a1, double a2, double c, double lambda, Complex p, Normalization norm,
                  const SeriesPolicy& policy)
{
    return detail::widen(euler_kernel(a1, a2, c, lambda, p, norm, policy).value);
}

/// 1 / (c)_n as a linear long double.
Real inverse_pochhammer(double c, long n)
{
    LogTerm t{0, 1};
    t -= detail::log_pochhammer_ext(c, n);
    return static_cast<Real>(t.sign) * std::exp(t.log_abs);
}

SeriesResult scaled(SeriesResult r, Complex factor)
{
    r.value *= factor;
    r.tail_estimate *= std::abs(factor);
    return r;
}

} // namespace

SeriesResult euler_kernel(double a1, double a2, double c, double lambda, Complex p, Normalization norm,
                          const SeriesPolicy& policy)
{
    std::vector<WeightedParam> lower{{c, 2.0}};
    // Γ(1 + 0·k) = 1, so the (1, λ) pair drops out at λ = 0.
    if (lambda > 0) {
        lower.push_back({1.0, lambda});
    }
    const WrightSpec spec({{a1, 1.0}, {a2, 1.0}, {1.0, 1.0}}, std::move(lower));
    return norm == Normalization::normalized ? wright_psi_normalized(spec, p, policy) : wright_psi(spec, p, policy);
}

SeriesResult closed_form_theorem1(double alpha, double beta, double alpha1, double alpha2, double x1, double x2,
                                  double lambda, Complex p, const SeriesPolicy& policy)
{
    theorem1_spec(alpha, beta, alpha1, alpha2, x1, x2, lambda, p);
    DegreeConvolution diagonals({CoefficientStream({alpha1}, x1), CoefficientStream({alpha2}, x2)});
    return detail::sum_series(
        [&](long m) -> ComplexL {
            const ComplexL d = diagonals.next();
            if (d == ComplexL{0, 0}) {
                return d;
            }
            LogTerm w = detail::log_pochhammer_ext(alpha, m);
            w -= detail::log_pochhammer_ext(alpha + beta, m);
            const double shift = static_cast<double>(m);
            return detail::to_linear(w) * d
                * kernel_l(alpha + shift, beta, alpha + beta + shift, lambda, p, Normalization::normalized, policy);
        },
        policy, "closed_form_theorem1");
}

SeriesResult closed_form_theorem2(double alpha, double beta, double alpha1, double alpha2, double x1, double x2,
                                  double lambda, Complex p, const SeriesPolicy& policy)
{
    theorem2_spec(alpha, beta, alpha1, alpha2, x1, x2, lambda, p);
    CoefficientStream first({alpha, alpha1}, x1);
    CoefficientStream second({beta, alpha2}, x2);
    return detail::sum_series(
        [&](long degree) -> ComplexL {
            ComplexL diagonal{0, 0};
            for (long m = 0; m <= degree; ++m) {
                const long n = degree - m;
                const ComplexL w = first.at(m) * second.at(n);
                if (w == ComplexL{0, 0}) {
                    continue;
                }
                diagonal += w
                    * kernel_l(alpha + m, beta + n, alpha + beta + degree, lambda, p, Normalization::normalized,
                               policy);
            }
            return diagonal * inverse_pochhammer(alpha + beta, degree);
        },
        policy, "closed_form_theorem2");
}

SeriesResult single_factor_sum(double alpha, double beta, double c, Complex z, double lambda, Complex p,
                               const SeriesPolicy& policy)
{
    CoefficientStream stream({alpha, c}, z);
    return detail::sum_series(
        [&](long m) -> ComplexL {
            const ComplexL w = stream.at(m);
            if (w == ComplexL{0, 0}) {
                return w;
            }
            const double shift = static_cast<double>(m);
            return w * inverse_pochhammer(alpha + beta, m)
                * kernel_l(alpha + shift, beta, alpha + beta + shift, lambda, p, Normalization::normalized, policy);
        },
        policy, "single_factor_sum");
}

SeriesResult closed_form_theorem3(double alpha, double beta, double gamma, double a, double b, double u, double v,
                                  double lambda, Complex p, const SeriesPolicy& policy)
{
    theorem3_spec(alpha, beta, gamma, a, b, u, v, lambda, p);
    const double base = a * u + v;
    const double width = b - a;
    const double z = -u * width / base;
    const bool terminates = gamma >= 0 && gamma == std::floor(gamma);
    if (!terminates && !(std::fabs(z) < 1)) {
        throw DivergenceError("linear chi: |u(b-a)/(au+v)| = " + std::to_string(std::fabs(z))
                              + " >= 1 and gamma is not a nonnegative integer");
    }
    const double prefactor = std::pow(width, alpha + beta - 1.0) * std::pow(base, gamma);
    return scaled(single_factor_sum(alpha, beta, -gamma, z, lambda, p * (width * width), policy), prefactor);
}

SeriesResult closed_form_theorem4(double alpha, double beta, double a, double b, double nu, double mu,
                                  double lambda, Complex p, const SeriesPolicy& policy)
{
    theorem4_spec(alpha, beta, a, b, nu, mu, lambda, p);
    const double prefactor = std::pow(nu + 1.0, -alpha) * std::pow(mu + 1.0, -beta) / (b - a);
    const Complex arg = p / ((nu + 1.0) * (mu + 1.0));
    return scaled(euler_kernel(alpha, beta, alpha + beta, lambda, arg, Normalization::normalized, policy), prefactor);
}

SeriesResult closed_form_lauricella(double alpha, double beta, std::span<const double> alphas,
                                    std::span<const double> xs, double lambda, Complex p,
                                    const SeriesPolicy& policy)
{
    if (alphas.size() > 4) {
        throw DomainError("closed_form_lauricella supports at most 4 variables");
    }
    lauricella_spec(alpha, beta, {alphas.begin(), alphas.end()}, {xs.begin(), xs.end()}, lambda, p);
    std::vector<CoefficientStream> streams;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        streams.emplace_back(std::vector<double>{alphas[i]}, xs[i]);
    }
    DegreeConvolution diagonals(std::move(streams));
    const SeriesResult sum = detail::sum_series(
        [&](long m) -> ComplexL {
            const ComplexL d = diagonals.next();
            if (d == ComplexL{0, 0}) {
                return d;
            }
            const double shift = static_cast<double>(m);
            return d * kernel_l(alpha + shift, beta, alpha + beta + shift, lambda, p, Normalization::raw, policy);
        },
        policy, "closed_form_lauricella");
    return scaled(sum, 1.0 / beta_fn(alpha, beta));
}

SeriesResult closed_form(const EulerIntegralSpec& spec, const SeriesPolicy& policy)
{
    spec.validate();
    return std::visit(
        detail::overloaded{
            [&](const ProductChi& f) {
                return closed_form_theorem1(spec.alpha, spec.beta, f.alpha1, f.alpha2, f.x1, f.x2, spec.lambda, spec.p,
                                            policy);
            },
            [&](const ReflectedProductChi& f) {
                return closed_form_theorem2(spec.alpha, spec.beta, f.alpha1, f.alpha2, f.x1, f.x2, spec.lambda, spec.p,
                                            policy);
            },
            [&](const LinearChi& f) {
                return closed_form_theorem3(spec.alpha, spec.beta, spec.gamma, spec.a, spec.b, f.u, f.v, spec.lambda,
                                            spec.p, policy);
            },
            [&](const RationalChi& f) {
                return closed_form_theorem4(spec.alpha, spec.beta, spec.a, spec.b, f.nu, f.mu, spec.lambda, spec.p,
                                            policy);
            },
            [&](const MultiProductChi& f) {
                return closed_form_lauricella(spec.alpha, spec.beta, f.alphas, f.xs, spec.lambda, spec.p, policy);
            },
        },
        spec.family);
}

SeriesResult reduce_lambda1(double alpha, double beta, Complex p, const SeriesPolicy& policy)
{
    const double num[] = {alpha, beta};
    const double den[] = {0.5 * (alpha + beta), 0.5 * (alpha + beta + 1.0)};
    return hyper_pfq(num, den, p / 4.0, policy);
}

SeriesResult merged_factor_lambda1(double alpha, double beta, double alpha1, double alpha2, double x1, Complex p,
                                   const SeriesPolicy& policy)
{
    if (!(std::fabs(x1) < 1)) {
        throw DomainError("need |x1| < 1");
    }
    CoefficientStream stream({alpha, alpha1 + alpha2}, x1);
    const SeriesResult sum = detail::sum_series(
        [&](long m) -> ComplexL {
            const ComplexL w = stream.at(m);
            if (w == ComplexL{0, 0}) {
                return w;
            }
            const double am = alpha + static_cast<double>(m);
            const double num[] = {am, beta};
            const double den[] = {0.5 * (am + beta), 0.5 * (am + beta + 1.0)};
            return w * inverse_pochhammer(alpha + beta, m) * detail::widen(hyper_pfq(num, den, p / 4.0, policy).value);
        },
        policy, "merged_factor_lambda1");
    return scaled(sum, std::pow(1.0 - x1, alpha2));
}

SeriesResult symmetric_rational_lambda1(double alpha, double nu, double mu, Complex p, const SeriesPolicy& policy)
{
    if (!(nu > -1 && mu > -1)) {
        throw DomainError("need nu > -1 and mu > -1");
    }
    const double scale = (nu + 1.0) * (mu + 1.0);
    const double num[] = {alpha};
    const double den[] = {alpha + 0.5};
    return scaled(hyper_pfq(num, den, p / (4.0 * scale), policy), std::pow(scale, -alpha));
}

IdentityCase application_case(std::string_view id, const ApplicationParams& q, Complex p)
{
    if (id == "4.1") {
        if (!(q.x1 < 0.5)) {
            throw DomainError("equal-factor specialization needs x1 < 1/2 so that |x1/(x1-1)| < 1");
        }
        const double x2 = q.x1 / (q.x1 - 1.0);
        auto spec = theorem1_spec(q.alpha, q.alpha, q.alpha1, q.alpha1, q.x1, x2, q.lambda, p);
        return {"example4.1", spec,
                [q, x2, p](const SeriesPolicy& policy) {
                    return closed_form_theorem1(q.alpha, q.alpha, q.alpha1, q.alpha1, q.x1, x2, q.lambda, p, policy);
                },
                "alpha = beta > 0, alpha1 = alpha2, x2 = x1/(x1-1), |x1| < 1, x1 < 1/2, lambda >= 0"};
    }
    if (id == "4.2") {
        if (!(q.x1 < 0.5)) {
            throw DomainError("merged-factor specialization needs x1 < 1/2 so that |x1/(x1-1)| < 1");
        }
        auto spec = theorem2_spec(q.alpha, q.beta, q.alpha1, q.alpha2, q.x1, q.x1 / (q.x1 - 1.0), q.lambda, p);
        return {"example4.2", spec,
                [q, p](const SeriesPolicy& policy) {
                    return scaled(single_factor_sum(q.alpha, q.beta, q.alpha1 + q.alpha2, q.x1, q.lambda, p, policy),
                                  std::pow(1.0 - q.x1, q.alpha2));
                },
                "alpha, beta > 0, x2 = x1/(x1-1), |x1| < 1, x1 < 1/2, lambda >= 0"};
    }
    if (id == "4.3") {
        auto spec = theorem3_spec(q.alpha, q.beta, -q.alpha1, 0.0, 1.0, -q.x1, 1.0, q.lambda, p);
        if (!(std::fabs(q.x1) < 1)) {
            throw DomainError("need |x1| < 1");
        }
        return {"example4.3", spec,
                [q, p](const SeriesPolicy& policy) {
                    return single_factor_sum(q.alpha, q.beta, q.alpha1, q.x1, q.lambda, p, policy);
                },
                "alpha, beta > 0, gamma = -alpha1, u = -x1, v = 1, (a,b) = (0,1), |x1| < 1, lambda >= 0"};
    }
    if (id == "4.4") {
        auto spec = theorem4_spec(q.alpha, q.beta, q.a, q.b, 0.0, 0.0, q.lambda, p);
        return {"example4.4", spec,
                [q, p](const SeriesPolicy& policy) {
                    return scaled(euler_kernel(q.alpha, q.beta, q.alpha + q.beta, q.lambda, p,
                                               Normalization::normalized, policy),
                                  1.0 / (q.b - q.a));
                },
                "alpha, beta > 0, nu = mu = 0, a < b, lambda >= 0"};
    }
    if (id == "4.5") {
        auto spec = theorem4_spec(q.alpha, q.alpha, 0.0, 1.0, q.nu, q.mu, q.lambda, p);
        return {"example4.5", spec,
                [q, p](const SeriesPolicy& policy) {
                    const double scale = (q.nu + 1.0) * (q.mu + 1.0);
                    return scaled(euler_kernel(q.alpha, q.alpha, 2.0 * q.alpha, q.lambda, p / scale,
                                               Normalization::normalized, policy),
                                  std::pow(scale, -q.alpha));
                },
                "alpha = beta > 0, (a,b) = (0,1), nu, mu > -1, lambda >= 0"};
    }
    throw DomainError("unknown application case '" + std::string(id) + "'");
}

} // namespace wrightlab
