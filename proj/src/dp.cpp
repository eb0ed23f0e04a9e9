#include "dplf/dp.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace dplf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Real to_real(const Rational& q) {
  return Real(q.num().get_str()) / Real(q.den().get_str());
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::seed_seq ss{static_cast<std::uint32_t>(seed & 0xffffffffULL),
                   static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(stream & 0xffffffffULL),
                   static_cast<std::uint32_t>(stream >> 32)};
  eng_.seed(ss);
}

std::uint64_t RandomSource::next_u64() { return eng_(); }

long RandomSource::next_long(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("next_long: empty range");
  const std::uint64_t bound = static_cast<std::uint64_t>(hi - lo) + 1;
  if (bound == 0) return static_cast<long>(next_u64());  // full 64-bit range
  const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
  std::uint64_t v = next_u64();
  while (v >= limit) v = next_u64();
  return lo + static_cast<long>(v % bound);
}

double RandomSource::next_unit_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Real RandomSource::next_unit_real() {
  const std::uint64_t hi = next_u64();
  const std::uint64_t lo = next_u64();
  return ldexp(Real(hi), -64) + ldexp(Real(lo), -128);
}

RandomSource RandomSource::fork(std::uint64_t substream) const {
  return RandomSource(seed_, splitmix64(stream_ ^ splitmix64(substream + 0x51ED2701)));
}

std::vector<Real> exp_mech_outcome_probs(const std::vector<Rational>& qualities,
                                         const Real& eps) {
  if (qualities.empty()) throw std::invalid_argument("exp_mech: no candidates");
  if (eps < 0) throw std::invalid_argument("exp_mech: negative eps");
  Rational qmax = qualities[0];
  for (const auto& q : qualities) {
    if (q > qmax) qmax = q;
  }
  std::vector<Real> w(qualities.size());
  Real total = 0;
  const Real half_eps = eps / 2;
  for (std::size_t i = 0; i < qualities.size(); ++i) {
    w[i] = exp(half_eps * to_real(qualities[i] - qmax));
    total += w[i];
  }
  for (auto& x : w) x /= total;
  return w;
}

std::size_t exp_mech_index(const std::vector<Rational>& qualities, const Real& eps,
                           RandomSource& rng) {
  if (qualities.empty()) throw std::invalid_argument("exp_mech: no candidates");
  if (eps < 0) throw std::invalid_argument("exp_mech: negative eps");
  Rational qmax = qualities[0];
  for (const auto& q : qualities) {
    if (q > qmax) qmax = q;
  }
  const Real half_eps = eps / 2;
  Real total = 0;
  for (const auto& q : qualities) total += exp(half_eps * to_real(q - qmax));
  const Real target = rng.next_unit_real() * total;
  Real acc = 0;
  for (std::size_t i = 0; i < qualities.size(); ++i) {
    acc += exp(half_eps * to_real(qualities[i] - qmax));
    if (acc > target) return i;
  }
  return qualities.size() - 1;
}

std::size_t exp_mech_index_int(std::size_t n, const std::function<long(std::size_t)>& quality,
                               const Real& eps, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("exp_mech: no candidates");
  if (eps < 0) throw std::invalid_argument("exp_mech: negative eps");
  long qmax = quality(0);
  for (std::size_t i = 1; i < n; ++i) qmax = std::max(qmax, quality(i));
  const Real half_eps = eps / 2;
  std::map<long, Real> memo;
  auto weight = [&](long q) -> const Real& {
    auto it = memo.find(q);
    if (it == memo.end()) it = memo.emplace(q, exp(half_eps * Real(q - qmax))).first;
    return it->second;
  };
  Real total = 0;
  for (std::size_t i = 0; i < n; ++i) total += weight(quality(i));
  const Real target = rng.next_unit_real() * total;
  Real acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += weight(quality(i));
    if (acc > target) return i;
  }
  return n - 1;
}

AuditResult dp_ratio_audit(const std::vector<Rational>& q, const std::vector<Rational>& q_prime,
                           const Real& eps, double slack) {
  if (q.size() != q_prime.size() || q.empty()) {
    throw std::invalid_argument("dp_ratio_audit: mismatched quality vectors");
  }
  auto p = exp_mech_outcome_probs(q, eps);
  auto pp = exp_mech_outcome_probs(q_prime, eps);
  Real worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Real r = abs(log(p[i]) - log(pp[i]));
    if (r > worst) worst = r;
  }
  AuditResult res;
  res.max_log_ratio = worst.convert_to<double>();
  res.pass = worst <= eps + Real(slack);
  return res;
}

PrivacyParams basic_composition(const std::vector<PrivacyParams>& parts) {
  PrivacyParams out;
  for (const auto& p : parts) {
    out.eps += p.eps;
    out.delta += p.delta;
  }
  return out;
}

PrivacyParams advanced_composition(int k, double eps0, double delta0, double delta_prime) {
  if (k < 1) throw std::invalid_argument("advanced_composition: k must be >= 1");
  if (eps0 < 0 || delta0 < 0) throw std::invalid_argument("advanced_composition: negative params");
  if (delta_prime <= 0 || delta_prime > 1) {
    throw std::invalid_argument("advanced_composition: delta' must lie in (0,1]");
  }
  PrivacyParams out;
  out.eps = std::sqrt(2.0 * k * std::log(1.0 / delta_prime)) * eps0 + 2.0 * k * eps0 * eps0;
  out.delta = k * delta0 + delta_prime;
  return out;
}

}  // namespace dplf
