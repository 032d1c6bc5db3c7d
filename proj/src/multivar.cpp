#include "wrightlab/multivar.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "detail/degree_sum.hpp"
#include "detail/series_sum.hpp"
#include "wrightlab/errors.hpp"

namespace wrightlab {

using detail::CoefficientStream;
using detail::ComplexL;
using detail::DegreeConvolution;
using detail::LogTerm;

namespace {

void require_unit_disk(Complex v, const char* what)
{
    if (!(std::abs(v) < 1)) {
        throw DomainError(std::string(what) + ": arguments must satisfy |x| < 1");
    }
}

void require_no_pole(double c, const char* what)
{
    if (detail::on_pole(c)) {
        throw PoleError(std::string(what) + ": denominator parameter " + std::to_string(c)
                        + " is a nonpositive integer");
    }
}

/// Σ_M prefactor(M) · D[M]
template <class Prefactor>
SeriesResult sum_diagonals(std::vector<CoefficientStream> streams, Prefactor&& prefactor,
                           const SeriesPolicy& policy, const char* what)
{
    DegreeConvolution diagonals(std::move(streams));
    return detail::sum_series(
        [&](long degree) -> ComplexL {
            const ComplexL d = diagonals.next();
            if (d == ComplexL{0, 0}) {
                return d;
            }
            return detail::to_linear(prefactor(degree)) * d;
        },
        policy, what);
}

} // namespace

SeriesResult appell_f1(double alpha, double beta, double beta_prime, double gamma, Complex x, Complex y,
                       const SeriesPolicy& policy)
{
    require_no_pole(gamma, "appell_f1");
    require_unit_disk(x, "appell_f1");
    require_unit_disk(y, "appell_f1");
    std::vector<CoefficientStream> streams{{{beta}, x}, {{beta_prime}, y}};
    return sum_diagonals(
        std::move(streams),
        [&](long d) {
            LogTerm c = detail::log_pochhammer_ext(alpha, d);
            c -= detail::log_pochhammer_ext(gamma, d);
            return c;
        },
        policy, "appell_f1");
}

SeriesResult appell_f3(double alpha, double alpha_prime, double beta, double beta_prime, double gamma,
                       Complex x, Complex y, const SeriesPolicy& policy)
{
    require_no_pole(gamma, "appell_f3");
    require_unit_disk(x, "appell_f3");
    require_unit_disk(y, "appell_f3");
    std::vector<CoefficientStream> streams{{{alpha, beta}, x}, {{alpha_prime, beta_prime}, y}};
    return sum_diagonals(
        std::move(streams),
        [&](long d) {
            LogTerm c{0, 1};
            c -= detail::log_pochhammer_ext(gamma, d);
            return c;
        },
        policy, "appell_f3");
}

SeriesResult humbert_phi2(double b1, double b2, double c, Complex x, Complex y, const SeriesPolicy& policy)
{
    require_no_pole(c, "humbert_phi2");
    std::vector<CoefficientStream> streams{{{b1}, x}, {{b2}, y}};
    return sum_diagonals(
        std::move(streams),
        [&](long d) {
            LogTerm t{0, 1};
            t -= detail::log_pochhammer_ext(c, d);
            return t;
        },
        policy, "humbert_phi2");
}

SeriesResult lauricella_fd(double alpha, std::span<const double> alphas, double gamma,
                           std::span<const Complex> xs, const SeriesPolicy& policy)
{
    if (alphas.size() != xs.size()) {
        throw DomainError("lauricella_fd: alphas and xs differ in length");
    }
    require_no_pole(gamma, "lauricella_fd");
    std::vector<CoefficientStream> streams;
    streams.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        require_unit_disk(xs[i], "lauricella_fd");
        streams.emplace_back(std::vector<double>{alphas[i]}, xs[i]);
    }
    return sum_diagonals(
        std::move(streams),
        [&](long d) {
            LogTerm c = detail::log_pochhammer_ext(alpha, d);
            c -= detail::log_pochhammer_ext(gamma, d);
            return c;
        },
        policy, "lauricella_fd");
}

double gegenbauer(unsigned n, double a, double x)
{
    using detail::Real;
    if (n == 0) {
        return 1.0;
    }
    const Real aa = a;
    const Real xx = x;
    Real prev = 1;
    Real curr = 2 * aa * xx;
    for (unsigned k = 2; k <= n; ++k) {
        const Real kk = k;
        const Real next = (2 * xx * (kk + aa - 1) * curr - (kk + 2 * aa - 2) * prev) / kk;
        prev = curr;
        curr = next;
    }
    return static_cast<double>(curr);
}

} // namespace wrightlab
