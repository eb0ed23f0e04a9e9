// Private halfspace learning by point-halfspace duality: labeled points
// become dual constraints for each candidate offset w in {-1, 0, 1}, a deep
// point of each dual system proposes a hypothesis, and a final exponential
// mechanism picks among the three by classification count. Includes the
// noise/rescale preprocessing that puts arbitrary integer-grid data in
// general position while preserving realizability.
#pragma once

#include <utility>
#include <vector>

#include "dplf/deep_point.hpp"
#include "dplf/dp.hpp"
#include "dplf/geometry.hpp"

namespace dplf {

// Uniform noise support A = {-Delta, ..., Delta} / DeltaPrime, sized so that
// d i.i.d. draws stay shorter than half the guaranteed margin 1/X'.
struct NoiseGrid {
  Int Delta;       // ceil(d * s^d / (2 beta))
  Int DeltaPrime;  // 2 * Delta * X' * ceil(sqrt(d))
};

struct LearnerRun {
  double alpha = 0.0;
  double beta = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  Hypothesis hypothesis;  // w is one of -1, 0, 1
  long val = 0;
  Rational error;  // empirical misclassification fraction
  PrivacyParams accounted;
  std::vector<DeepPointRun> branch_runs;  // dual runs for w = -1, 0, +1
};

// Dual constraint set {(y*x, y*w)} of a labeled dataset for a fixed offset.
// Requires integral coordinates (rescale noisy data first) and no origin
// points: the dual of the origin has no normal vector.
ConstraintSet dualize(const LabeledDataset& S, int w);

// X' = 2 d^2 * d!^{d^3} * X^{d^6}: every realizable integer-grid dataset has
// a consistent halfspace at distance >= 1/X' from all points.
Int margin_bound(int d, const Int& X);

// Perturbs every coordinate by an independent uniform draw from the noise
// grid built for |S| points at failure budget beta. Noise is strictly inside
// the margin, so realizable inputs stay realizable.
std::pair<LabeledDataset, NoiseGrid> add_noise(const LabeledDataset& S, double beta,
                                               RandomSource& rng);

// Multiplies all coordinates by DeltaPrime, landing on the integer grid
// [-Xt, Xt] with Xt = DeltaPrime * (X + Delta). Returns the scaled dataset
// and Xt. Errors if any scaled coordinate is not an integer.
std::pair<LabeledDataset, Int> rescale_to_grid(const LabeledDataset& noisy,
                                               const NoiseGrid& grid, const Int& X);

// Exact misclassification fraction of h on S (empty S gives 0); satisfies
// val = |S| * (1 - error).
Rational empirical_error(const LabeledDataset& S, const Hypothesis& h);

// Runs the three dual deep-point searches at (alpha/2, beta/2, eps/4,
// delta/3) each, then selects among the three hypotheses by exponential
// mechanism with quality val at eps/4. Deterministic given the rng identity.
// The output hypothesis may be degenerate (zero normal) on adversarial
// inputs; utility requires realizable data in general position.
LearnerRun learn_halfspace(const LabeledDataset& S, double alpha, double beta, double eps,
                           double delta, const RandomSource& rng,
                           ExecPolicy policy = ExecPolicy::Parallel,
                           long domain_cap = 5'000'000,
                           OptimizerBackend backend = OptimizerBackend::ExpMech);

// Basic composition of the four stages: 3 x (eps/4, delta/3) + (eps/4, 0)
// = (eps, delta).
PrivacyParams learner_accounting(double eps, double delta);

}  // namespace dplf
