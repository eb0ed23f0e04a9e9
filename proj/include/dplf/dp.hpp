// Differential-privacy primitives: seeded deterministic randomness, the
// exponential mechanism with extended-precision weights, outcome-probability
// audits, and composition accounting.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dplf/rational.hpp"

namespace dplf {

// Extended-precision float for mechanism weights (~166-bit mantissa, well
// above the 100-bit floor the probability audits assume).
using Real = boost::multiprecision::cpp_bin_float_50;

struct PrivacyParams {
  double eps = 0.0;
  double delta = 0.0;
};

// Deterministic randomness: (seed, stream) fully determines the draw
// sequence. Forked streams give independent, reproducible sub-sources so
// parallel trials never share state.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64();
  // Unbiased integer in [lo, hi] via rejection sampling (not
  // std::uniform_int_distribution, whose mapping is implementation-defined).
  long next_long(long lo, long hi);
  double next_unit_double();
  // 128 random bits mapped into [0, 1) at extended precision; used for the
  // inverse-CDF walk of the exponential mechanism.
  Real next_unit_real();

  RandomSource fork(std::uint64_t substream) const;

 private:
  std::uint64_t seed_, stream_;
  std::mt19937_64 eng_;
};

template <class T>
struct Scored {
  T payload;
  Rational quality;
};

// Index sampled with probability proportional to exp(eps * quality / 2).
// Streaming two-pass evaluation, O(1) extra memory. eps is taken at extended
// precision so analytically chosen values (e.g. 2 ln 3) can be passed exactly.
std::size_t exp_mech_index(const std::vector<Rational>& qualities, const Real& eps,
                           RandomSource& rng);

// Same mechanism for integer qualities supplied by a generator function;
// exp() results are memoized per distinct quality so huge candidate sets
// with small quality ranges stay cheap.
std::size_t exp_mech_index_int(std::size_t n, const std::function<long(std::size_t)>& quality,
                               const Real& eps, RandomSource& rng);

template <class T>
const Scored<T>& exponential_mechanism(const std::vector<Scored<T>>& cands, const Real& eps,
                                       RandomSource& rng) {
  std::vector<Rational> qs;
  qs.reserve(cands.size());
  for (const auto& c : cands) qs.push_back(c.quality);
  return cands[exp_mech_index(qs, eps, rng)];
}

// Exact outcome distribution of the mechanism (normalized weights).
std::vector<Real> exp_mech_outcome_probs(const std::vector<Rational>& qualities, const Real& eps);

struct AuditResult {
  bool pass = false;
  double max_log_ratio = 0.0;
};

// Pointwise likelihood-ratio audit of the mechanism on a neighboring pair of
// quality vectors: passes when every |log p_i - log p'_i| <= eps + slack.
AuditResult dp_ratio_audit(const std::vector<Rational>& q, const std::vector<Rational>& q_prime,
                           const Real& eps, double slack = 1e-15);

PrivacyParams basic_composition(const std::vector<PrivacyParams>& parts);

// k-fold adaptive composition of (eps0, delta0)-private steps:
// eps = sqrt(2k ln(1/delta')) * eps0 + 2k * eps0^2, delta = k*delta0 + delta'.
PrivacyParams advanced_composition(int k, double eps0, double delta0, double delta_prime);

}  // namespace dplf
