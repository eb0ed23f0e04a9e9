#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "dplf/dp.hpp"

using namespace dplf;

TEST_CASE("random source is deterministic per (seed, stream)") {
  RandomSource a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  bool stream_differs = false, seed_differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    CHECK(va == b.next_u64());
    if (va != c.next_u64()) stream_differs = true;
    if (va != d.next_u64()) seed_differs = true;
  }
  CHECK(stream_differs);
  CHECK(seed_differs);
}

TEST_CASE("fork derives reproducible independent substreams") {
  const RandomSource base(7, 0);
  RandomSource f1 = base.fork(3);
  RandomSource f2 = base.fork(3);
  RandomSource g = base.fork(4);
  bool differs = false;
  for (int i = 0; i < 64; ++i) {
    const auto v = f1.next_u64();
    CHECK(v == f2.next_u64());
    if (v != g.next_u64()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("next_long stays in range and covers small ranges") {
  RandomSource r(1);
  std::set<long> seen;
  for (int i = 0; i < 1000; ++i) {
    const long v = r.next_long(0, 9);
    CHECK(v >= 0);
    CHECK(v <= 9);
    seen.insert(v);
  }
  CHECK(seen.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(r.next_long(5, 5) == 5);
  CHECK_THROWS_AS(r.next_long(3, 2), std::invalid_argument);
  CHECK(r.next_unit_double() >= 0.0);
  CHECK(r.next_unit_double() < 1.0);
  CHECK(r.next_unit_real() >= 0);
  CHECK(r.next_unit_real() < 1);
}

TEST_CASE("outcome probabilities of the exponential mechanism") {
  const std::vector<Rational> equal{Rational(3), Rational(3), Rational(3), Rational(3)};
  for (const auto& p : exp_mech_outcome_probs(equal, Real(2))) {
    CHECK(abs(p - Real(1) / 4) < Real("1e-20"));
  }

  // Quality gap 1 at eps = 2 ln 3 weights the better outcome exactly 3x.
  const std::vector<Rational> pair{Rational(0), Rational(1)};
  const auto probs = exp_mech_outcome_probs(pair, 2 * log(Real(3)));
  CHECK(abs(probs[0] - Real(1) / 4) < Real("1e-20"));
  CHECK(abs(probs[1] - Real(3) / 4) < Real("1e-20"));

  Real total = 0;
  for (const auto& p : probs) total += p;
  CHECK(abs(total - 1) < Real("1e-20"));

  const auto single = exp_mech_outcome_probs({Rational(9)}, Real(1));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 1);

  CHECK_THROWS_AS(exp_mech_outcome_probs({}, Real(1)), std::invalid_argument);
  CHECK_THROWS_AS(exp_mech_outcome_probs(pair, Real(-1)), std::invalid_argument);
}

TEST_CASE("outcome probabilities are shift invariant") {
  const std::vector<Rational> q{Rational(-2), Rational(0), Rational(5), Rational(1, 3)};
  std::vector<Rational> shifted;
  for (const auto& v : q) shifted.push_back(v + Rational(17, 2));
  const auto p1 = exp_mech_outcome_probs(q, Real(3) / 2);
  const auto p2 = exp_mech_outcome_probs(shifted, Real(3) / 2);
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(p1[i] == p2[i]);
}

TEST_CASE("sampled frequencies match the analytic distribution") {
  const std::vector<Rational> q{Rational(0), Rational(1), Rational(2)};
  const Real eps(1);
  const auto p = exp_mech_outcome_probs(q, eps);
  RandomSource rng(2024);
  const int n = 100000;
  long counts[3] = {0, 0, 0};
  for (int i = 0; i < n; ++i) ++counts[exp_mech_index(q, eps, rng)];
  for (int i = 0; i < 3; ++i) {
    const double pi = p[static_cast<std::size_t>(i)].convert_to<double>();
    const double se = std::sqrt(n * pi * (1.0 - pi));
    CHECK(std::abs(counts[i] - n * pi) <= 3.0 * se);
  }
}

TEST_CASE("integer-quality sampler agrees with the rational one") {
  const std::vector<Rational> q{Rational(4), Rational(7), Rational(7), Rational(2)};
  const auto qfn = [](std::size_t i) { return std::vector<long>{4, 7, 7, 2}[i]; };
  for (int trial = 0; trial < 50; ++trial) {
    RandomSource a(99, static_cast<std::uint64_t>(trial));
    RandomSource b(99, static_cast<std::uint64_t>(trial));
    CHECK(exp_mech_index(q, Real(1) / 2, a) == exp_mech_index_int(4, qfn, Real(1) / 2, b));
  }
  RandomSource dummy(0);
  CHECK_THROWS_AS(exp_mech_index_int(0, qfn, Real(1), dummy), std::invalid_argument);
}

TEST_CASE("ratio audit certifies the privacy bound on neighbors") {
  const std::vector<Rational> q{Rational(0), Rational(0)};
  const std::vector<Rational> neighbor{Rational(1), Rational(0)};

  auto same = dp_ratio_audit(q, q, Real(1));
  CHECK(same.pass);
  CHECK(same.max_log_ratio == 0.0);

  // Shifting every quality changes nothing.
  const std::vector<Rational> shifted{Rational(5), Rational(5)};
  CHECK(dp_ratio_audit(q, shifted, Real(1) / 10).max_log_ratio == 0.0);

  for (const double e : {0.1, 0.5, 1.0, 5.0}) {
    const auto res = dp_ratio_audit(q, neighbor, Real(e));
    CHECK(res.pass);
    CHECK(res.max_log_ratio <= e + 1e-15);
  }

  // A jump of 3 in one quality blows the sensitivity-1 budget at eps = 1:
  // the log ratio is log((e^{3/2}+1)/2), about 1.008.
  const std::vector<Rational> far{Rational(3), Rational(0)};
  const auto bad = dp_ratio_audit(q, far, Real(1));
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_log_ratio > 1.0);
  CHECK(bad.max_log_ratio < 1.1);

  CHECK_THROWS_AS(dp_ratio_audit(q, {Rational(0)}, Real(1)), std::invalid_argument);
  CHECK_THROWS_AS(dp_ratio_audit({}, {}, Real(1)), std::invalid_argument);
}

TEST_CASE("basic composition sums both budgets") {
  const auto c = basic_composition({{0.5, 0.0}, {0.3, 1e-6}});
  CHECK(c.eps == 0.8);
  CHECK(c.delta == 1e-6);

  const auto zero = basic_composition({});
  CHECK(zero.eps == 0.0);
  CHECK(zero.delta == 0.0);

  // Dyadic parts compose without rounding at all.
  const std::vector<PrivacyParams> parts(4, {0.25, 0.0009765625});
  const auto four = basic_composition(parts);
  CHECK(four.eps == 1.0);
  CHECK(four.delta == 0.00390625);
}

TEST_CASE("advanced composition: closed form, monotonicity, validation") {
  // k=2, eps0=0.1, delta'=1/e: sqrt(2*2*1)*0.1 + 2*2*0.01 = 0.24.
  const auto r = advanced_composition(2, 0.1, 0.0, std::exp(-1.0));
  CHECK(std::abs(r.eps - 0.24) <= 1e-12);
  CHECK(r.delta == std::exp(-1.0));

  const auto one = advanced_composition(1, 0.2, 0.001, 0.3);
  CHECK(one.eps >= 0.2);  // ln(1/0.3) > 1/2, so the sqrt term alone exceeds eps0
  CHECK(one.delta == 0.001 + 0.3);

  double prev = 0.0;
  for (int k = 1; k <= 5; ++k) {
    const double e = advanced_composition(k, 0.1, 0.0, 0.01).eps;
    CHECK(e > prev);
    prev = e;
  }
  CHECK(advanced_composition(3, 0.2, 0.0, 0.01).eps >
        advanced_composition(3, 0.1, 0.0, 0.01).eps);

  CHECK_THROWS_AS(advanced_composition(0, 0.1, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(advanced_composition(2, -0.1, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(advanced_composition(2, 0.1, -0.2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(advanced_composition(2, 0.1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(advanced_composition(2, 0.1, 0.0, 1.5), std::invalid_argument);
}
