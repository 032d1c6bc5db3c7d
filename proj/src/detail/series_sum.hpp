#ifndef WRIGHTLAB_DETAIL_SERIES_SUM_HPP
#define WRIGHTLAB_DETAIL_SERIES_SUM_HPP

#include <string>
#include <string_view>

#include "detail/ext_math.hpp"
#include "wrightlab/errors.hpp"
#include "wrightlab/series.hpp"

namespace wrightlab::detail {

/// Sums term_at(0), term_at(1), ... under `policy`.
template <class TermFn>
SeriesResult sum_series(TermFn&& term_at, const SeriesPolicy& policy, std::string_view what)
{
    SeriesSummer summer(policy);
    for (long k = 0; k < policy.max_terms; ++k) {
        if (summer.add(term_at(k))) {
            return summer.result();
        }
    }
    throw MaxTermsError(std::string(what) + ": tolerance not reached within "
                        + std::to_string(policy.max_terms) + " terms");
}

} // namespace wrightlab::detail

#endif
