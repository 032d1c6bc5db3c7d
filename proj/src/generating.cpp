#include <cmath>
#include <vector>

#include "detail/degree_sum.hpp"
#include "detail/ext_math.hpp"
#include "detail/overloaded.hpp"
#include "detail/series_sum.hpp"
#include "wrightlab/euler.hpp"
#include "wrightlab/multivar.hpp"

namespace wrightlab {

using detail::ComplexL;
using detail::LogTerm;

Complex generator_coefficient(const GeneratorSpec& gen, long n, const SeriesPolicy& policy)
{
    return std::visit(
        detail::overloaded{
            [&](const BinomialGenerator& g) -> Complex {
                LogTerm c = detail::log_pochhammer_ext(g.a, n);
                c.log_abs -= detail::log_factorial(n);
                return detail::narrow(detail::LogPower(g.x).apply(c, n));
            },
            [&](const HumbertGenerator& g) -> Complex {
                LogTerm c = detail::log_pochhammer_ext(g.a, n);
                c -= detail::log_pochhammer_ext(g.b, n);
                c.log_abs -= detail::log_factorial(n);
                const double num[] = {g.a};
                const double den[] = {g.b + static_cast<double>(n)};
                return detail::narrow(detail::to_linear(c)) * hyper_pfq(num, den, g.x, policy).value;
            },
            [&](const GegenbauerGenerator& g) -> Complex {
                return gegenbauer(static_cast<unsigned>(n), g.a, g.x);
            },
            [&](const CustomGenerator& g) -> Complex { return g.coefficient(n); },
        },
        gen);
}

Complex generator_value(const GeneratorSpec& gen, Complex tau, const SeriesPolicy& policy)
{
    return std::visit(
        detail::overloaded{
            [&](const BinomialGenerator& g) -> Complex { return std::pow(1.0 - g.x * tau, -g.a); },
            [&](const HumbertGenerator& g) -> Complex {
                return humbert_phi2(g.a, g.a, g.b, g.x, tau, policy).value;
            },
            [&](const GegenbauerGenerator& g) -> Complex {
                return std::pow(1.0 - 2.0 * g.x * tau + tau * tau, -g.a);
            },
            [&](const CustomGenerator& g) -> Complex {
                ComplexL power{1, 0};
                const ComplexL step = detail::widen(tau);
                return detail::sum_series(
                           [&](long n) -> ComplexL {
                               const ComplexL term = detail::widen(g.coefficient(n)) * power;
                               power *= step;
                               return term;
                           },
                           policy, "generator_value")
                    .value;
            },
        },
        gen);
}

SeriesResult generating_integral_closed_form(const GeneratingIntegralSpec& spec, const SeriesPolicy& policy)
{
    spec.validate();
    const double r = spec.r;
    const double s = spec.s;
    const double delta = spec.delta;
    const double omega = spec.omega;

    // c_n g_n(x) t^n, cached by n.
    std::vector<ComplexL> weights;
    ComplexL t_power{1, 0};
    auto weight = [&](long n) -> const ComplexL& {
        while (static_cast<long>(weights.size()) <= n) {
            const long k = static_cast<long>(weights.size());
            weights.push_back(detail::widen(generator_coefficient(spec.generator, k, policy)) * t_power);
            t_power *= detail::widen(spec.t);
        }
        return weights[static_cast<std::size_t>(n)];
    };
    auto kernel = [&](long n, long m) -> ComplexL {
        const double dn = static_cast<double>(n);
        const double dm = static_cast<double>(m);
        return detail::widen(euler_kernel(r + delta * dn + dm, s - r + omega * dn, s + (delta + omega) * dn + dm,
                                          spec.lambda, spec.p, Normalization::raw, policy)
                                 .value);
    };

    if (spec.factors.empty()) {
        return detail::sum_series(
            [&](long n) -> ComplexL {
                const ComplexL w = weight(n);
                return w == ComplexL{0, 0} ? w : w * kernel(n, 0);
            },
            policy, "generating_integral_closed_form");
    }

    std::vector<detail::CoefficientStream> streams;
    for (const auto& f : spec.factors) {
        streams.emplace_back(std::vector<double>{f.alpha}, f.x);
    }
    detail::DegreeConvolution convolution(std::move(streams));
    std::vector<ComplexL> factor_diagonals;
    // Diagonal d collects generator index n and factor degree m = d - n.
    return detail::sum_series(
        [&](long d) -> ComplexL {
            factor_diagonals.push_back(convolution.next());
            ComplexL total{0, 0};
            for (long n = 0; n <= d; ++n) {
                const ComplexL w = weight(n) * factor_diagonals[static_cast<std::size_t>(d - n)];
                if (w != ComplexL{0, 0}) {
                    total += w * kernel(n, d - n);
                }
            }
            return total;
        },
        policy, "generating_integral_closed_form");
}

} // namespace wrightlab
