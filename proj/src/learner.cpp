#include "dplf/learner.hpp"

#include <stdexcept>

namespace dplf {
namespace {

Int ceil_sqrt(int n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), Int(n).get_mpz_t());
  if (r * r < n) r += 1;
  return r;
}

void check_label(int y) {
  if (y != 1 && y != -1) throw std::invalid_argument("labels must be +1 or -1");
}

}  // namespace

ConstraintSet dualize(const LabeledDataset& S, int w) {
  if (w < -1 || w > 1) throw std::invalid_argument("dualize: w must be -1, 0 or 1");
  ConstraintSet out(S.d(), S.X() < 1 ? Int(1) : S.X());
  for (const auto& p : S.points()) {
    check_label(p.y);
    Constraint c;
    c.a.reserve(p.x.size());
    bool all_zero = true;
    for (const auto& coord : p.x) {
      if (!coord.is_integer())
        throw std::invalid_argument("dualize: coordinates must be integral");
      Int v = coord.num();
      if (p.y < 0) v = -v;
      if (v != 0) all_zero = false;
      c.a.push_back(std::move(v));
    }
    if (all_zero)
      throw std::invalid_argument("dualize: origin point has no dual halfspace");
    c.w = Int(p.y * w);
    out.add(std::move(c));
  }
  return out;
}

Int margin_bound(int d, const Int& X) {
  if (d < 1) throw std::invalid_argument("margin_bound: dimension must be positive");
  if (X < 1) throw std::invalid_argument("margin_bound: grid bound must be positive");
  const unsigned d3 = static_cast<unsigned>(d) * static_cast<unsigned>(d) * static_cast<unsigned>(d);
  return Int(2) * Int(d) * Int(d) * ipow(factorial(static_cast<unsigned>(d)), d3) *
         ipow(X, d3 * d3);
}

std::pair<LabeledDataset, NoiseGrid> add_noise(const LabeledDataset& S, double beta,
                                               RandomSource& rng) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("add_noise: beta must lie in (0,1)");
  const int d = S.d();
  const long s = S.size();
  if (s < 1) throw std::invalid_argument("add_noise: empty dataset");

  NoiseGrid grid;
  const Rational count(Int(Int(d) * ipow(Int(s), static_cast<unsigned>(d))));
  grid.Delta = (count / (Rational(2) * Rational(mpq_class(beta)))).ceil();
  grid.DeltaPrime = Int(2) * grid.Delta * margin_bound(d, S.X()) * ceil_sqrt(d);
  if (!grid.Delta.fits_slong_p())
    throw std::overflow_error("add_noise: noise grid too large to sample");
  const long D = grid.Delta.get_si();

  LabeledDataset noisy(d, S.X());
  for (const auto& p : S.points()) {
    check_label(p.y);
    LabeledPoint q;
    q.y = p.y;
    q.x.reserve(p.x.size());
    for (const auto& coord : p.x) {
      if (!coord.is_integer())
        throw std::invalid_argument("add_noise: input must sit on the integer grid");
      q.x.push_back(coord + Rational(Int(rng.next_long(-D, D)), grid.DeltaPrime));
    }
    noisy.add(std::move(q));
  }
  return {std::move(noisy), std::move(grid)};
}

std::pair<LabeledDataset, Int> rescale_to_grid(const LabeledDataset& noisy,
                                               const NoiseGrid& grid, const Int& X) {
  const Int Xt = grid.DeltaPrime * (X + grid.Delta);
  LabeledDataset out(noisy.d(), Xt);
  const Rational scale{grid.DeltaPrime};
  for (const auto& p : noisy.points()) {
    LabeledPoint q;
    q.y = p.y;
    q.x.reserve(p.x.size());
    for (const auto& coord : p.x) {
      Rational v = coord * scale;
      if (!v.is_integer())
        throw std::invalid_argument("rescale_to_grid: coordinate off the noise grid");
      if (v > Rational(Xt) || v < Rational(Int(-Xt)))
        throw std::invalid_argument("rescale_to_grid: coordinate outside the scaled grid");
      q.x.push_back(std::move(v));
    }
    out.add(std::move(q));
  }
  return {std::move(out), Xt};
}

Rational empirical_error(const LabeledDataset& S, const Hypothesis& h) {
  const long m = S.size();
  if (m == 0) return Rational(0);
  return Rational(Int(m - val(S, h)), Int(m));
}

PrivacyParams learner_accounting(double eps, double delta) {
  const PrivacyParams branch{eps / 4.0, delta / 3.0};
  return basic_composition({branch, branch, branch, PrivacyParams{eps / 4.0, 0.0}});
}

LearnerRun learn_halfspace(const LabeledDataset& S, double alpha, double beta, double eps,
                           double delta, const RandomSource& rng, ExecPolicy policy,
                           long domain_cap, OptimizerBackend backend) {
  if (S.size() == 0) throw std::invalid_argument("learn_halfspace: empty dataset");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("learn_halfspace: alpha must lie in (0, 1]");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("learn_halfspace: beta must lie in (0, 1]");
  if (!(eps > 0.0)) throw std::invalid_argument("learn_halfspace: eps must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("learn_halfspace: delta must lie in (0, 1)");

  LearnerRun run;
  run.alpha = alpha;
  run.beta = beta;
  run.eps = eps;
  run.delta = delta;

  std::vector<Scored<Hypothesis>> candidates;
  for (int w = -1; w <= 1; ++w) {
    const ConstraintSet dual = dualize(S, w);
    RandomSource sub = rng.fork(static_cast<std::uint64_t>(w + 1));
    DeepPointRun branch = find_deep_point(dual, alpha / 2.0, beta / 2.0, eps / 4.0,
                                          delta / 3.0, sub, policy, domain_cap, backend);
    Hypothesis h{branch.point, Rational(w)};
    candidates.push_back({h, Rational(Int(val(S, h)))});
    run.branch_runs.push_back(std::move(branch));
  }

  RandomSource pick = rng.fork(7);
  const Scored<Hypothesis>& best = exponential_mechanism(candidates, Real(eps) / 4, pick);
  run.hypothesis = best.payload;
  run.val = val(S, run.hypothesis);
  run.error = empirical_error(S, run.hypothesis);
  run.accounted = learner_accounting(eps, delta);
  return run;
}

}  // namespace dplf
