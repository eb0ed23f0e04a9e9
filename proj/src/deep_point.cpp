#include "dplf/deep_point.hpp"

#include <cmath>
#include <stdexcept>

namespace dplf {
namespace {

void validate(const ConstraintSet& S, double alpha, double beta, double eps, double delta) {
  if (S.size() == 0) throw std::invalid_argument("find_deep_point: empty constraint set");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("find_deep_point: alpha must lie in (0, 1]");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("find_deep_point: beta must lie in (0, 1]");
  if (!(eps > 0.0)) throw std::invalid_argument("find_deep_point: eps must be positive");
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("find_deep_point: delta must lie in (0, 1/2)");
}

}  // namespace

double deep_point_iteration_eps(int d, double eps, double delta) {
  return eps / (2.0 * std::sqrt(2.0 * d * std::log(2.0 / delta)));
}

double deep_point_iteration_delta(int d, double delta) { return delta / (2.0 * d); }

double deep_point_promised_max(long m, int d, double alpha, int i) {
  const double alpha_t = alpha / (2.0 * d * (d + 1));
  return std::pow(1.0 - alpha_t, i - 1) * static_cast<double>(m);
}

PrivacyParams deep_point_accounting(int d, double eps, double delta) {
  return advanced_composition(d, deep_point_iteration_eps(d, eps, delta),
                              deep_point_iteration_delta(d, delta), delta / 2.0);
}

DeepPointRun find_deep_point(const ConstraintSet& S, double alpha, double beta, double eps,
                             double delta, const RandomSource& rng, ExecPolicy policy,
                             long domain_cap, OptimizerBackend backend) {
  validate(S, alpha, beta, eps, delta);
  const int d = S.d();
  const long m = S.size();
  const double alpha_t = alpha / (2.0 * d * (d + 1));
  const double beta_t = beta / d;
  const double eps_t = deep_point_iteration_eps(d, eps, delta);
  const double delta_t = deep_point_iteration_delta(d, delta);

  DeepPointRun run;
  run.d = d;
  run.alpha = alpha;
  run.beta = beta;
  run.eps = eps;
  run.delta = delta;
  run.backend = backend_name(backend);

  for (int i = 1; i <= d; ++i) {
    const DomainSpec spec = domain_spec(d, S.X(), i, run.witness_chain.t_last());
    const auto domain = enumerate_domain(spec, domain_cap);
    const auto L =
        build_decreasing_list(S, run.witness_chain.values(), spec.max_value(), policy);

    OptimizerParams op;
    op.r = deep_point_promised_max(m, d, alpha, i);
    op.alpha = alpha_t;
    op.beta = beta_t;
    op.eps = eps_t;
    op.delta = delta_t;

    RandomSource sub = rng.fork(static_cast<std::uint64_t>(i));
    const OptimizerResult res = private_qc_max(L, domain, op, sub, backend);

    IterationRecord rec;
    rec.i = i;
    rec.r = op.r;
    rec.domain_size = static_cast<long>(domain.size());
    rec.threshold = baseline_threshold(rec.domain_size, op);
    rec.chosen = res.chosen;
    rec.achieved_q = res.achieved_quality;
    run.iterations.push_back(rec);
    run.witness_chain.chain.push_back(res.chosen);
  }

  run.point = run.witness_chain.values();
  run.accounted = deep_point_accounting(d, eps, delta);
  return run;
}

}  // namespace dplf
