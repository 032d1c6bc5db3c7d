#ifndef WRIGHTLAB_DIRECT_HPP
#define WRIGHTLAB_DIRECT_HPP

#include "wrightlab/integral_spec.hpp"
#include "wrightlab/quadrature.hpp"
#include "wrightlab/series.hpp"

namespace wrightlab {

// Quadrature oracles: the integrals evaluated directly from their definition,
// independent of the closed-form series.

/// 1/B(α,β) ∫_a^b (t-a)^(α-1) (b-t)^(β-1) χ(t)^γ E_λ[p ξ(t)] dt.
/// E_λ is evaluated at each node (elementary forms for λ ∈ {0,1,2}).
QuadratureResult evaluate_integral_direct(const EulerIntegralSpec& spec, const QuadraturePolicy& qpolicy = {},
                                          const SeriesPolicy& spolicy = {});

/// ∫_0^1 u^(r-1) (1-u)^(s-r-1) Π(1-x_i u)^(-α_i) G(x, t u^δ (1-u)^ω) E_λ[p u(1-u)] du.
QuadratureResult evaluate_generating_integral_direct(const GeneratingIntegralSpec& spec,
                                                     const QuadraturePolicy& qpolicy = {},
                                                     const SeriesPolicy& spolicy = {});

} // namespace wrightlab

#endif
