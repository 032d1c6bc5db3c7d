// Total-degree machinery for multiple hypergeometric series.
#ifndef WRIGHTLAB_DETAIL_DEGREE_SUM_HPP
#define WRIGHTLAB_DETAIL_DEGREE_SUM_HPP

#include <utility>
#include <vector>

#include "detail/ext_math.hpp"

namespace wrightlab::detail {

/// c[m] = Π_j (a_j)_m · x^m / m!, generated lazily in increasing m.
class CoefficientStream {
public:
    CoefficientStream(std::vector<double> pochhammer_params, Complex x)
        : params_(std::move(pochhammer_params))
        , power_(x)
    {
    }

    const ComplexL& at(long m)
    {
        while (static_cast<long>(values_.size()) <= m) {
            const long k = static_cast<long>(values_.size());
            LogTerm c{-log_factorial(k), 1};
            for (const double a : params_) {
                c += log_pochhammer_ext(a, k);
            }
            values_.push_back(power_.apply(c, k));
        }
        return values_[static_cast<std::size_t>(m)];
    }

private:
    std::vector<double> params_;
    LogPower power_;
    std::vector<ComplexL> values_;
};

/// D[M] = Σ_{m_1+...+m_n = M} Π_i c_i[m_i] by iterated convolution.
/// next() returns D[0], D[1], ... in order.
class DegreeConvolution {
public:
    explicit DegreeConvolution(std::vector<CoefficientStream> streams)
        : streams_(std::move(streams))
        , partial_(streams_.size())
    {
    }

    ComplexL next()
    {
        const long degree = degree_++;
        if (streams_.empty()) {
            return degree == 0 ? ComplexL{1, 0} : ComplexL{0, 0};
        }
        partial_[0].push_back(streams_[0].at(degree));
        for (std::size_t i = 1; i < streams_.size(); ++i) {
            ComplexL acc{0, 0};
            for (long j = 0; j <= degree; ++j) {
                acc += partial_[i - 1][static_cast<std::size_t>(j)] * streams_[i].at(degree - j);
            }
            partial_[i].push_back(acc);
        }
        return partial_.back().back();
    }

private:
    std::vector<CoefficientStream> streams_;
    std::vector<std::vector<ComplexL>> partial_;
    long degree_ = 0;
};

/// Calls fn(indices) for every composition of `total` into `parts` nonnegative
/// integers, in lexicographic order.
template <class Fn>
void for_each_composition(long total, std::size_t parts, Fn&& fn)
{
    if (parts == 0) {
        if (total == 0) {
            std::vector<long> empty;
            fn(empty);
        }
        return;
    }
    std::vector<long> idx(parts, 0);
    auto recurse = [&](auto&& self, std::size_t pos, long remaining) -> void {
        if (pos + 1 == parts) {
            idx[pos] = remaining;
            fn(idx);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            idx[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    recurse(recurse, 0, total);
}

} // namespace wrightlab::detail

#endif
