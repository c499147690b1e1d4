#pragma once

#include <span>
#include <vector>

#include "flashhelp/exponent_value.hpp"
#include "flashhelp/pmf.hpp"

namespace flashhelp {

/// x*ln(x) with the continuity convention 0*ln(0) = 0.
double xlogx(double x);

/// ln(sum exp(x_i)); tolerates -inf entries, returns -inf for an all -inf set.
double log_sum_exp(std::span<const double> xs);

/// Shannon entropy in nats, -sum p ln p.
double shannon_entropy(const Pmf& p);

/// D(q||p) in nats. Infinite when support(q) is not contained in support(p).
/// Throws std::invalid_argument on dimension mismatch.
ExponentValue kl_divergence(const Pmf& q, const Pmf& p);

/// Renyi entropy H_order(p) = ln(sum p^order)/(1-order) in nats.
/// order == 1 returns the Shannon value (continuity), order == 0 returns
/// ln|support|. A strictly negative order on a PMF with zero entries yields
/// +infinity (returned as the double infinity value).
double renyi_entropy(const Pmf& p, double order);

}  // namespace flashhelp
