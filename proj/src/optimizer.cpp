#include "dplf/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dplf {
namespace {

void validate(const OptimizerParams& p) {
  if (!(p.alpha > 0.0 && p.alpha <= 0.5))
    throw std::invalid_argument("optimizer: alpha must lie in (0, 1/2]");
  if (!(p.beta > 0.0 && p.beta < 1.0))
    throw std::invalid_argument("optimizer: beta must lie in (0, 1)");
  if (!(p.eps > 0.0)) throw std::invalid_argument("optimizer: eps must be positive");
  if (!(p.delta >= 0.0 && p.delta < 1.0))
    throw std::invalid_argument("optimizer: delta must lie in [0, 1)");
}

}  // namespace

OptimizerBackend parse_backend(const std::string& name) {
  if (name == "expmech") return OptimizerBackend::ExpMech;
  throw std::invalid_argument("unknown optimizer backend: " + name);
}

std::string backend_name(OptimizerBackend backend) {
  switch (backend) {
    case OptimizerBackend::ExpMech:
      return "expmech";
  }
  throw std::logic_error("unreachable");
}

OptimizerResult private_qc_max(const DecreasingPointList& L,
                               const std::vector<DomainElement>& domain,
                               const OptimizerParams& p, RandomSource& rng,
                               OptimizerBackend backend) {
  validate(p);
  if (domain.empty()) throw std::invalid_argument("optimizer: empty domain");
  switch (backend) {
    case OptimizerBackend::ExpMech: {
      const std::size_t idx = exp_mech_index_int(
          domain.size(), [&](std::size_t i) { return L.eval(domain[i].value); }, p.eps, rng);
      OptimizerResult res;
      res.chosen = domain[idx];
      res.achieved_quality = L.eval(domain[idx].value);
      res.backend = backend_name(backend);
      return res;
    }
  }
  throw std::logic_error("unreachable");
}

double baseline_threshold(long domain_size, const OptimizerParams& p) {
  validate(p);
  if (domain_size < 1) throw std::invalid_argument("baseline_threshold: empty domain");
  const double t =
      (2.0 / (p.eps * p.alpha)) * std::log(static_cast<double>(domain_size) / p.beta);
  return std::max(0.0, t);
}

int log_star(const Int& n) {
  if (n <= 1) return 0;
  // ceil(log2 n) = bit length of n - 1 for n >= 2.
  const Int m = n - 1;
  const int ceil_log2 = static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 2));
  return 1 + log_star(Int(ceil_log2));
}

double recconcave_threshold(const Int& domain_size, const OptimizerParams& p) {
  validate(p);
  if (!(p.delta > 0.0)) throw std::invalid_argument("recconcave_threshold: delta must be positive");
  const int ls = log_star(domain_size);
  if (ls == 0) return 0.0;
  const double lsd = static_cast<double>(ls);
  return std::pow(8.0, lsd) * (12.0 * lsd) / (p.alpha * p.eps) *
         std::log(192.0 * lsd * lsd / (p.beta * p.delta));
}

}  // namespace dplf
