// Private maximization of a quasi-concave quality over an explicit finite
// domain. The shipped backend is the exponential mechanism; the interface
// leaves room for sparse backends that avoid materializing the domain.
#pragma once

#include <string>
#include <vector>

#include "dplf/dp.hpp"
#include "dplf/qfunc.hpp"

namespace dplf {

// r is the promised maximum the utility guarantee is stated against; the
// remaining fields are the per-call utility/privacy budget.
struct OptimizerParams {
  double r = 0.0;
  double alpha = 0.0;  // in (0, 1/2]
  double beta = 0.0;   // in (0, 1)
  double eps = 0.0;    // > 0
  double delta = 0.0;  // in [0, 1); unused by the pure-DP baseline
};

struct OptimizerResult {
  DomainElement chosen;
  long achieved_quality = 0;
  std::string backend;
};

enum class OptimizerBackend { ExpMech };

// Accepts "expmech"; throws on anything else.
OptimizerBackend parse_backend(const std::string& name);
std::string backend_name(OptimizerBackend backend);

// Samples a domain element with probability proportional to
// exp(eps * Q / 2) where Q comes from the decreasing-point list. Pure
// eps-DP in the constraint set (Q has sensitivity 1), hence also
// (eps, delta)-DP. If max Q >= p.r >= baseline_threshold(|domain|, p),
// the returned element has Q >= (1 - p.alpha) * p.r with probability
// >= 1 - p.beta.
OptimizerResult private_qc_max(const DecreasingPointList& L,
                               const std::vector<DomainElement>& domain,
                               const OptimizerParams& p, RandomSource& rng,
                               OptimizerBackend backend = OptimizerBackend::ExpMech);

// Smallest promised max r for which the mechanism's tail bound
// |domain| * exp(-eps * alpha * r / 2) <= beta holds:
// (2 / (eps * alpha)) * ln(|domain| / beta), clamped below at 0.
double baseline_threshold(long domain_size, const OptimizerParams& p);

// Reporting-only requirement of the recursive construction this backend
// substitutes for: 8^{log* n} * (12 log* n) / (alpha * eps)
//                  * ln(192 * (log* n)^2 / (beta * delta)).
double recconcave_threshold(const Int& domain_size, const OptimizerParams& p);

// Iterated ceiling-log2: 0 for n <= 1, else 1 + log_star(ceil(log2 n)).
int log_star(const Int& n);

}  // namespace dplf
