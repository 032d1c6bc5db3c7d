#ifndef WRIGHTLAB_EULER_HPP
#define WRIGHTLAB_EULER_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "wrightlab/integral_spec.hpp"
#include "wrightlab/series.hpp"

namespace wrightlab {

// Closed-form (series side) evaluators of the Euler-type integrals. Every
// evaluator reduces to a sum of 3Ψ2 kernels
//
//   3Ψ2[(a1,1), (a2,1), (1,1); (c,2), (1,λ); p]
//
// taken either normalized (value 1 at p = 0) or raw.

enum class Normalization { raw, normalized };

SeriesResult euler_kernel(double a1, double a2, double c, double lambda, Complex p, Normalization norm,
                          const SeriesPolicy& policy = {});

SeriesResult closed_form_theorem1(double alpha, double beta, double alpha1, double alpha2, double x1, double x2,
                                  double lambda, Complex p, const SeriesPolicy& policy = {});

SeriesResult closed_form_theorem2(double alpha, double beta, double alpha1, double alpha2, double x1, double x2,
                                  double lambda, Complex p, const SeriesPolicy& policy = {});

/// Linear χ = ut + v on a general interval. Includes the factors
/// (b-a)^(α+β-1) (au+v)^γ and evaluates the kernels at p (b-a)².
SeriesResult closed_form_theorem3(double alpha, double beta, double gamma, double a, double b, double u, double v,
                                  double lambda, Complex p, const SeriesPolicy& policy = {});

SeriesResult closed_form_theorem4(double alpha, double beta, double a, double b, double nu, double mu,
                                  double lambda, Complex p, const SeriesPolicy& policy = {});

/// n-variable product χ, written as 1/B(α,β) times raw kernels over the
/// multi-index; reduces to closed_form_theorem1 at n = 2. n <= 4.
SeriesResult closed_form_lauricella(double alpha, double beta, std::span<const double> alphas,
                                    std::span<const double> xs, double lambda, Complex p,
                                    const SeriesPolicy& policy = {});

/// Dispatches on the spec's family.
SeriesResult closed_form(const EulerIntegralSpec& spec, const SeriesPolicy& policy = {});

/// c_n g_n(x) for the generator.
Complex generator_coefficient(const GeneratorSpec& gen, long n, const SeriesPolicy& policy = {});

/// G(x, tau) in closed form where one exists, summed from the coefficients otherwise.
Complex generator_value(const GeneratorSpec& gen, Complex tau, const SeriesPolicy& policy = {});

/// Σ_n c_n g_n(x) t^n 3Ψ2[(r+δn,1), (s-r+ωn,1), (1,1); (s+δn+ωn,2), (1,λ); p], with the
/// multi-index extension over the product factors when present.
SeriesResult generating_integral_closed_form(const GeneratingIntegralSpec& spec, const SeriesPolicy& policy = {});

/// 2F2[α, β; (α+β)/2, (α+β+1)/2; p/4], the λ = 1 form of the normalized kernel
/// 3Ψ2[(α,1),(β,1),(1,1);(α+β,2),(1,1); p].
SeriesResult reduce_lambda1(double alpha, double beta, Complex p, const SeriesPolicy& policy = {});

/// Σ_m (α)_m (c)_m z^m / ((α+β)_m m!) · normalized kernel(α+m, β, α+β+m; p);
/// the single-factor sum shared by several specializations.
SeriesResult single_factor_sum(double alpha, double beta, double c, Complex z, double lambda, Complex p,
                               const SeriesPolicy& policy = {});

using IdentitySpec = std::variant<EulerIntegralSpec, GeneratingIntegralSpec>;

/// A named identity instance: the integral it describes plus its series side.
struct IdentityCase {
    std::string name;
    IdentitySpec spec;
    std::function<SeriesResult(const SeriesPolicy&)> closed_form;
    std::string validity_note;
};

/// Role-specific parameters of the application examples; each id reads the
/// fields it needs.
struct ApplicationParams {
    double alpha = 1.0;
    double beta = 1.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double x1 = 0.0;
    double a = 0.0;
    double b = 1.0;
    double nu = 0.0;
    double mu = 0.0;
    double lambda = 1.0;
};

/// id is one of "4.1" .. "4.5":
///   4.1  product χ with α = β, α1 = α2, x2 = x1/(x1-1)        (alpha, alpha1, x1, lambda)
///   4.2  reflected product χ with x2 = x1/(x1-1)                (alpha, beta, alpha1, alpha2, x1, lambda)
///   4.3  χ = 1 - x1 t, γ = -α1 on (0,1)                        (alpha, beta, alpha1, x1, lambda)
///   4.4  rational χ with ν = μ = 0                              (alpha, beta, a, b, lambda)
///   4.5  rational χ with α = β on (0,1)                         (alpha, nu, mu, lambda)
IdentityCase application_case(std::string_view id, const ApplicationParams& params, Complex p);

/// (1-x1)^α2 Σ_m (α)_m (α1+α2)_m x1^m / ((α+β)_m m!) 2F2[α+m, β; (α+β+m)/2, (α+β+m+1)/2; p/4],
/// the λ = 1 closed form of application "4.2".
SeriesResult merged_factor_lambda1(double alpha, double beta, double alpha1, double alpha2, double x1, Complex p,
                               const SeriesPolicy& policy = {});

/// [(ν+1)(μ+1)]^(-α) 1F1[α; α+1/2; p/(4(ν+1)(μ+1))], the λ = 1 closed form of application "4.5".
SeriesResult symmetric_rational_lambda1(double alpha, double nu, double mu, Complex p, const SeriesPolicy& policy = {});

} // namespace wrightlab

#endif
