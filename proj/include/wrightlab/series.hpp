#ifndef WRIGHTLAB_SERIES_HPP
#define WRIGHTLAB_SERIES_HPP

#include <complex>
#include <span>
#include <vector>

#include "wrightlab/scalar.hpp"

namespace wrightlab {

/// Truncation rules shared by every series in the library.
///
/// A partial sum is accepted once `consecutive_small` successive terms each
/// satisfy |term| <= rel_tol * |partial| + abs_tol. A term larger than
/// `divergence_growth_limit` times the largest partial sum seen so far (after
/// the first 50 terms) aborts with DivergenceError.
struct SeriesPolicy {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    int consecutive_small = 3;
    int max_terms = 20000;
    double divergence_growth_limit = 1e8;

    /// Throws DomainError if any field is out of range.
    void validate() const;

    /// Default policy, with max_terms taken from WRIGHTLAB_MAX_TERMS if set.
    static SeriesPolicy from_environment();
};

struct SeriesResult {
    Complex value;
    int terms_used = 0;
    double tail_estimate = 0.0;
};

/// One (parameter, weight) pair of a Wright function, e.g. (α_j, A_j).
struct WeightedParam {
    double value;
    double weight;
};

/// Parameter pairs of pΨq. Weights must be positive and the convergence
/// margin 1 + ΣB − ΣA must be nonnegative.
class WrightSpec {
public:
    WrightSpec(std::vector<WeightedParam> upper, std::vector<WeightedParam> lower);

    const std::vector<WeightedParam>& upper() const { return upper_; }
    const std::vector<WeightedParam>& lower() const { return lower_; }

    /// 1 + ΣB_j − ΣA_j
    double convergence_margin() const;

private:
    std::vector<WeightedParam> upper_;
    std::vector<WeightedParam> lower_;
};

/// Accumulates series terms and applies the SeriesPolicy stopping rule.
class SeriesSummer {
public:
    explicit SeriesSummer(const SeriesPolicy& policy);

    /// Adds one term; returns true once the partial sum is accepted.
    bool add(std::complex<long double> term);

    int terms() const { return terms_; }
    std::complex<long double> partial() const { return partial_; }
    SeriesResult result() const;

private:
    SeriesPolicy policy_;
    std::complex<long double> partial_{0, 0};
    long double max_partial_ = 0;
    long double last_small_ = 0;
    int terms_ = 0;
    int small_run_ = 0;
};

/// pΨq(z) = Σ_k Π Γ(α_j + A_j k) / Π Γ(β_j + B_j k) · z^k / k!
SeriesResult wright_psi(const WrightSpec& spec, Complex z, const SeriesPolicy& policy = {});

/// The same series with every term divided by Π Γ(α_j) / Π Γ(β_j), so the
/// value at z = 0 is 1.
SeriesResult wright_psi_normalized(const WrightSpec& spec, Complex z, const SeriesPolicy& policy = {});

/// Generalized hypergeometric pFq(num; den; z).
SeriesResult hyper_pfq(std::span<const double> num, std::span<const double> den, Complex z,
                       const SeriesPolicy& policy = {});

/// E_λ(z) = Σ z^n / Γ(λn + 1), λ >= 0 (|z| < 1 when λ = 0).
SeriesResult mittag_leffler(double lambda, Complex z, const SeriesPolicy& policy = {});

/// E_λ(z) through its elementary form when λ ∈ {0, 1, 2}, the series otherwise.
Complex mittag_leffler_fast(double lambda, Complex z, const SeriesPolicy& policy = {});

} // namespace wrightlab

#endif
