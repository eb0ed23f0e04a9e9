// Private deep-point search: one coordinate at a time, each fixed by a
// private quasi-concave maximization over that coordinate's finite candidate
// domain. Privacy holds unconditionally; the utility guarantee (a point of
// depth >= (1-alpha)|S| with probability >= 1-beta) needs S realizable and
// |S| above every iteration's backend threshold.
#pragma once

#include <vector>

#include "dplf/dp.hpp"
#include "dplf/exec.hpp"
#include "dplf/geometry.hpp"
#include "dplf/optimizer.hpp"
#include "dplf/qfunc.hpp"

namespace dplf {

struct IterationRecord {
  int i = 0;  // 1-based coordinate index
  double r = 0.0;
  long domain_size = 0;
  double threshold = 0.0;  // backend threshold for this domain
  DomainElement chosen;
  long achieved_q = 0;
};

struct DeepPointRun {
  int d = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  std::vector<IterationRecord> iterations;
  Prefix witness_chain;
  RatVector point;
  PrivacyParams accounted;
  std::string backend;
};

// The run is a pure function of (S, parameters, rng identity): per-iteration
// randomness is forked from the source's (seed, stream), so independent runs
// must use distinct streams.
DeepPointRun find_deep_point(const ConstraintSet& S, double alpha, double beta, double eps,
                             double delta, const RandomSource& rng,
                             ExecPolicy policy = ExecPolicy::Parallel,
                             long domain_cap = 5'000'000,
                             OptimizerBackend backend = OptimizerBackend::ExpMech);

// Total privacy cost of the d adaptive iterations: advanced composition of
// d copies of (eps~, delta~) with slack delta/2, which collapses to
// (eps/2 + eps^2/(4 ln(2/delta)), delta) and is dominated by (eps, delta)
// whenever eps <= 1 and delta <= 1/2.
PrivacyParams deep_point_accounting(int d, double eps, double delta);

// Per-iteration schedule, exposed for tests and reports.
double deep_point_iteration_eps(int d, double eps, double delta);
double deep_point_iteration_delta(int d, double delta);
double deep_point_promised_max(long m, int d, double alpha, int i);

}  // namespace dplf
