#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "dplf/qfunc.hpp"

using namespace dplf;

namespace {

Constraint row(std::vector<long> a, long w) {
  Constraint c;
  for (long v : a) c.a.emplace_back(v);
  c.w = Int(w);
  return c;
}

// Five rows on the line: x >= 0 twice, x <= 1 three times.
ConstraintSet five_rows() {
  ConstraintSet S(1, Int(10));
  S.add(row({1}, 0), 2);
  S.add(row({-1}, -1), 3);
  return S;
}

// Two half-planes meeting only at the origin: x2 >= x1 and x2 <= -x1.
ConstraintSet wedge() {
  ConstraintSet S(2, Int(1));
  S.add(row({-1, 1}, 0));
  S.add(row({-1, -1}, 0));
  return S;
}

ConstraintSet random_set(int d, long X, long m, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> coef(-X, X);
  ConstraintSet S(d, Int(X));
  for (long r = 0; r < m; ++r) {
    Constraint c;
    do {
      c.a.clear();
      for (int j = 0; j < d; ++j) c.a.emplace_back(coef(gen));
    } while (std::all_of(c.a.begin(), c.a.end(), [](const Int& v) { return sgn(v) == 0; }));
    c.w = Int(coef(gen));
    S.add(std::move(c));
  }
  return S;
}

}  // namespace

TEST_CASE("domain spec sizes") {
  const auto s1 = domain_spec(1, Int(5), 1, Int(1));
  CHECK(s1.num_bound == 5);
  CHECK(s1.den_step == 5);
  CHECK(s1.max_value() == Rational(5));

  const auto s2 = domain_spec(2, Int(2), 1, Int(1));
  CHECK(s2.num_bound == 16);
  CHECK(s2.den_step == 8);

  const auto s3 = domain_spec(2, Int(2), 2, Int(1));
  CHECK(s3.num_bound == 256);
  CHECK(s3.den_step == 8);

  CHECK_THROWS_AS(domain_spec(2, Int(2), 0, Int(1)), std::invalid_argument);
  CHECK_THROWS_AS(domain_spec(2, Int(2), 3, Int(1)), std::invalid_argument);
}

TEST_CASE("domain enumeration: values, witnesses, scaling, cap") {
  const auto tiny = enumerate_domain(domain_spec(1, Int(1), 1, Int(1)));
  REQUIRE(tiny.size() == 3);
  CHECK(tiny[0].value == Rational(-1));
  CHECK(tiny[1].value == Rational(0));
  CHECK(tiny[2].value == Rational(1));

  const auto dom = enumerate_domain(domain_spec(1, Int(2), 1, Int(1)));
  const std::vector<Rational> want{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                   Rational(1, 2), Rational(1),  Rational(2)};
  REQUIRE(dom.size() == want.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    CHECK(dom[i].value == want[i]);
    CHECK(dom[i].t > 0);
    CHECK(Rational(dom[i].s, dom[i].t) == dom[i].value);
    if (i > 0) CHECK(dom[i - 1].value < dom[i].value);
  }
  // Minimal-denominator witnesses: -1 is representable as -2/2 but must be
  // stored as -1/1; 1/2 has no smaller witness.
  CHECK(dom[1].t == 1);
  CHECK(dom[4].t == 2);

  // A previous-level witness denominator scales the whole grid.
  const auto scaled = enumerate_domain(domain_spec(1, Int(2), 1, Int(3)));
  REQUIRE(scaled.size() == want.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    CHECK(scaled[i].value == want[i] / 3);
    CHECK(scaled[i].t % 3 == 0);
  }

  CHECK_THROWS_AS(enumerate_domain(domain_spec(2, Int(2), 1, Int(1)), 10), DomainTooLarge);
}

TEST_CASE("prefix bookkeeping") {
  Prefix empty;
  CHECK(empty.t_last() == 1);
  CHECK(empty.values().empty());

  Prefix p;
  p.chain.push_back({Rational(1, 2), Int(1), Int(2)});
  p.chain.push_back({Rational(-3, 4), Int(-3), Int(4)});
  CHECK(p.t_last() == 4);
  REQUIRE(p.values().size() == 2);
  CHECK(p.values()[1] == Rational(-3, 4));
}

TEST_CASE("decreasing-point list of the five-row set") {
  const ConstraintSet S = five_rows();
  const auto L = build_decreasing_list(S, RatVector{}, Rational(10), ExecPolicy::Serial);
  REQUIRE(L.entries().size() == 4);
  CHECK(L.entries()[0].x == Rational(-10));
  CHECK(L.entries()[0].k == 3);
  CHECK(L.entries()[1].x == Rational(0));
  CHECK(L.entries()[1].k == 5);
  CHECK(L.entries()[2].x == Rational(1));
  CHECK(L.entries()[2].k == 5);
  CHECK(L.entries()[3].x == Rational(10));
  CHECK(L.entries()[3].k == 2);
  CHECK(L.global_max() == 5);
  CHECK(L.bound() == Rational(10));

  CHECK(q_eval(L, Rational(1, 2)) == 5);
  CHECK(q_eval(L, Rational(-7)) == 3);
  CHECK(q_eval(L, Rational(0)) == 5);
  CHECK(q_eval(L, Rational(10)) == 2);
  CHECK(q_eval(L, Rational(-10)) == 3);
  CHECK_THROWS_AS(q_eval(L, Rational(11)), std::out_of_range);
  CHECK_THROWS_AS(q_eval(L, Rational(-21, 2)), std::out_of_range);
}

TEST_CASE("empty set gives an all-zero list") {
  ConstraintSet S(1, Int(3));
  const auto L = build_decreasing_list(S, RatVector{}, Rational(3), ExecPolicy::Serial);
  REQUIRE(L.entries().size() == 2);
  CHECK(L.entries().front().k == 0);
  CHECK(L.entries().back().k == 0);
  CHECK(L.global_max() == 0);
  CHECK(q_eval(L, Rational(0)) == 0);
}

TEST_CASE("slice of the wedge: flat quality across the gap") {
  const ConstraintSet S = wedge();
  const RatVector prefix{Rational(1)};
  const auto L = build_decreasing_list(S, prefix, Rational(100), ExecPolicy::Serial);
  // The sliced rows are x2 >= 1 and x2 <= -1; neither region is empty, so
  // the level-1 interval spans the whole box and Q is identically 1.
  bool has_minus1 = false, has_plus1 = false;
  for (const auto& e : L.entries()) {
    CHECK(e.k == 1);
    if (e.x == Rational(-1)) has_minus1 = true;
    if (e.x == Rational(1)) has_plus1 = true;
  }
  CHECK(has_minus1);
  CHECK(has_plus1);
  CHECK(q_eval(L, Rational(0)) == 1);
  CHECK(q_definitional(S, prefix, Rational(0)) == 1);
}

TEST_CASE("windowed minimum over the candidate domain") {
  const ConstraintSet S = five_rows();
  const auto L = build_decreasing_list(S, RatVector{}, Rational(10), ExecPolicy::Serial);
  const auto dom = enumerate_domain(domain_spec(1, Int(2), 1, Int(1)));  // 7 values in [-2,2]

  long best0 = 0;
  for (const auto& e : dom) best0 = std::max(best0, q_eval(L, e.value));
  CHECK(q_interval_min(L, dom, 0) == best0);
  CHECK(best0 == 5);

  // A width-2 window inside [0,1] keeps the full quality; width 4 must leak
  // out of the three-element plateau and pick up the left shoulder.
  CHECK(q_interval_min(L, dom, 1) == 5);
  CHECK(q_interval_min(L, dom, 2) == 3);

  CHECK_THROWS_AS(q_interval_min(L, dom, 3), std::invalid_argument);  // 8 > 7 elements
  CHECK_THROWS_AS(q_interval_min(L, dom, -1), std::invalid_argument);
  CHECK_THROWS_AS(q_interval_min(L, dom, 62), std::invalid_argument);

  // On a power-of-two grid the single full-width window yields the domain
  // minimum (quasi-concavity collapses it to the two endpoints).
  const std::vector<DomainElement> grid{{Rational(-2), Int(-2), Int(1)},
                                        {Rational(0), Int(0), Int(1)},
                                        {Rational(1, 2), Int(1), Int(2)},
                                        {Rational(3), Int(3), Int(1)}};
  long lo = 1000;
  for (const auto& e : grid) lo = std::min(lo, q_eval(L, e.value));
  CHECK(q_interval_min(L, grid, 2) == lo);
  CHECK(lo == 2);
}

TEST_CASE("brute-force route matches the list on pinned probes") {
  const ConstraintSet S = five_rows();
  const auto L = build_decreasing_list(S, RatVector{}, Rational(10), ExecPolicy::Serial);
  for (const auto& x : {Rational(-1), Rational(1, 2), Rational(2)}) {
    CHECK(q_definitional(S, RatVector{}, x) == q_eval(L, x));
  }
  ConstraintSet E(1, Int(5));
  CHECK(q_definitional(E, RatVector{}, Rational(2)) == 0);
}

TEST_CASE("candidate domain always contains a maximizer") {
  const ConstraintSet S = five_rows();
  const auto L = build_decreasing_list(S, RatVector{}, Rational(10), ExecPolicy::Serial);
  const auto dom = enumerate_domain(domain_spec(1, Int(10), 1, Int(1)));
  long best = 0;
  for (const auto& e : dom) best = std::max(best, q_eval(L, e.value));
  CHECK(best == L.global_max());
  CHECK(best == q_global_max(S, RatVector{}, ExecPolicy::Serial));
}

TEST_CASE("list route equals brute force on random instances") {
  std::mt19937_64 gen(29);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(gen() % 2);
    const long X = 1 + static_cast<long>(gen() % 2);
    const long m = 1 + static_cast<long>(gen() % 6);
    const ConstraintSet S = random_set(d, X, m, gen);

    Prefix prefix;
    if (d == 2) {
      const auto dom1 = enumerate_domain(domain_spec(d, Int(X), 1, Int(1)));
      prefix.chain.push_back(dom1[gen() % dom1.size()]);
    }
    const auto L = build_decreasing_list(S, prefix, ExecPolicy::Serial);

    std::vector<Rational> probes;
    for (const auto& e : L.entries()) probes.push_back(e.x);
    for (std::size_t i = 1; i < L.entries().size(); ++i) {
      probes.push_back((L.entries()[i - 1].x + L.entries()[i].x) / 2);
    }
    for (int extra = 0; extra < 3; ++extra) {
      Rational x(num(gen), den(gen));
      if (x > L.bound()) x = L.bound();
      if (x < -L.bound()) x = -L.bound();
      probes.push_back(x);
    }
    for (const auto& x : probes) {
      CHECK(q_eval(L, x) == q_definitional(S, prefix, x));
    }
  }
}

TEST_CASE("parallel and serial list builds are identical") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    const ConstraintSet S = random_set(2, 2, 8, gen);
    const auto a = build_decreasing_list(S, RatVector{}, Rational(16), ExecPolicy::Serial);
    const auto b = build_decreasing_list(S, RatVector{}, Rational(16), ExecPolicy::Parallel);
    REQUIRE(a.entries().size() == b.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
      CHECK(a.entries()[i].x == b.entries()[i].x);
      CHECK(a.entries()[i].k == b.entries()[i].k);
    }
    CHECK(q_global_max(S, RatVector{}, ExecPolicy::Serial) ==
          q_global_max(S, RatVector{}, ExecPolicy::Parallel));
  }
}
