#include "dplf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "dplf/harness.hpp"

namespace dplf {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

ConstraintSet random_constraints(int d, long X, long m, RandomSource& rng) {
  ConstraintSet S(d, Int(X));
  for (long r = 0; r < m; ++r) {
    Constraint c;
    for (;;) {
      c.a.clear();
      bool nonzero = false;
      for (int j = 0; j < d; ++j) {
        const long v = rng.next_long(-X, X);
        if (v != 0) nonzero = true;
        c.a.emplace_back(v);
      }
      if (nonzero) break;
    }
    c.w = Int(rng.next_long(-X, X));
    S.add(std::move(c));
  }
  return S;
}

RatVector random_rational_prefix(int len, long X, RandomSource& rng) {
  RatVector p;
  p.reserve(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j)
    p.emplace_back(Rational(Int(rng.next_long(-4 * X, 4 * X)), Int(1 + rng.next_long(0, 3))));
  return p;
}

// A probe inside [-bound, bound]: half the draws sit at the constraint scale
// where the geometry lives, the rest spread over the whole interval.
Rational random_probe(const Rational& bound, long X, RandomSource& rng) {
  const long den = 1 + rng.next_long(0, 3);
  if ((rng.next_u64() & 1) != 0) {
    Rational cand(Int(rng.next_long(-4 * X * den, 4 * X * den)), Int(den));
    if (cand >= -bound && cand <= bound) return cand;
  }
  return bound * Rational(Int(rng.next_long(-64, 64)), Int(64));
}

// Both piecewise evaluators are constant between consecutive breakpoints of
// the union grid, so entries plus midpoints cover every attainable value.
std::vector<Rational> probe_grid(const std::vector<const DecreasingPointList*>& lists) {
  std::vector<Rational> xs;
  for (const auto* L : lists)
    for (const auto& e : L->entries()) xs.push_back(e.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> probes = xs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    probes.push_back((xs[i] + xs[i + 1]) / Rational(2));
  return probes;
}

// ---------------------------------------------------------------------------
// 1. Quasi-concavity of the stagewise objective, exact arithmetic.

CriterionResult crit_quasi_concavity(ExecPolicy policy) {
  const long cases = 1000;
  long violations = 0;
  long checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : violations, checked) \
    if (policy == ExecPolicy::Parallel)
  for (long case_id = 0; case_id < cases; ++case_id) {
    RandomSource rng(0xC1A11ull, static_cast<std::uint64_t>(case_id));
    const int d = static_cast<int>(1 + rng.next_long(0, 2));
    const long X = 1 + rng.next_long(0, 3);
    const long m = 1 + rng.next_long(0, 11);
    const ConstraintSet S = random_constraints(d, X, m, rng);
    const int i = static_cast<int>(1 + rng.next_long(0, d - 1));
    const RatVector prefix = random_rational_prefix(i - 1, X, rng);
    const Rational bound = domain_spec(d, Int(X), i, Int(1)).max_value();
    const DecreasingPointList L = build_decreasing_list(S, prefix, bound, ExecPolicy::Serial);

    std::vector<Rational> triple;
    for (int attempt = 0; attempt < 64 && triple.size() < 3; ++attempt) {
      Rational cand = random_probe(bound, X, rng);
      if (std::find(triple.begin(), triple.end(), cand) == triple.end())
        triple.push_back(std::move(cand));
    }
    if (triple.size() < 3) continue;
    std::sort(triple.begin(), triple.end());
    ++checked;
    const long q1 = L.eval(triple[0]);
    const long q2 = L.eval(triple[1]);
    const long q3 = L.eval(triple[2]);
    if (q2 < std::min(q1, q3)) ++violations;
  }
  CriterionResult r;
  r.name = "quasi-concavity of the stagewise objective (exact rational arithmetic)";
  r.pass = violations == 0 && checked == cases;
  r.detail = std::to_string(checked) + " ordered triples across d<=3, X<=4, m<=12, " +
             std::to_string(violations) + " violations";
  return r;
}

// ---------------------------------------------------------------------------
// 2. Unit sensitivity under single-constraint replacement.

CriterionResult crit_sensitivity(ExecPolicy policy) {
  const long pairs = 500;
  long violations = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : violations) \
    if (policy == ExecPolicy::Parallel)
  for (long case_id = 0; case_id < pairs; ++case_id) {
    RandomSource rng(0x5E4511ull, static_cast<std::uint64_t>(case_id));
    const int d = static_cast<int>(1 + rng.next_long(0, 2));
    const long X = 1 + rng.next_long(0, 3);
    const long m = 1 + rng.next_long(0, 11);
    const ConstraintSet S = random_constraints(d, X, m, rng);

    // Neighbor: same multiset with one uniformly chosen row replaced.
    const long swap_at = rng.next_long(0, m - 1);
    const ConstraintSet fresh = random_constraints(d, X, 1, rng);
    ConstraintSet T(d, Int(X));
    {
      long row = 0;
      for (const auto& [c, mult] : S.distinct())
        for (long k = 0; k < mult; ++k, ++row) {
          if (row == swap_at)
            T.add(fresh.distinct().front().first);
          else
            T.add(c);
        }
    }

    const int i = static_cast<int>(1 + rng.next_long(0, d - 1));
    const RatVector prefix = random_rational_prefix(i - 1, X, rng);
    const Rational bound = domain_spec(d, Int(X), i, Int(1)).max_value();
    const DecreasingPointList LS = build_decreasing_list(S, prefix, bound, ExecPolicy::Serial);
    const DecreasingPointList LT = build_decreasing_list(T, prefix, bound, ExecPolicy::Serial);
    for (const Rational& x : probe_grid({&LS, &LT})) {
      if (std::labs(LS.eval(x) - LT.eval(x)) > 1) {
        ++violations;
        break;
      }
    }
  }
  CriterionResult r;
  r.name = "unit sensitivity of the objective under one-row replacement";
  r.pass = violations == 0;
  r.detail = std::to_string(pairs) + " neighboring pairs, full breakpoint grids, " +
             std::to_string(violations) + " violations";
  return r;
}

// ---------------------------------------------------------------------------
// 3. Depth lower bound from hull-depth, plus the tight 1-d witness.

CriterionResult crit_depth_bound(ExecPolicy policy) {
  const long instances = 200;
  long violations = 0;
  long probes_run = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : violations, probes_run) \
    if (policy == ExecPolicy::Parallel)
  for (long case_id = 0; case_id < instances; ++case_id) {
    RandomSource rng(0xDEB7ull, static_cast<std::uint64_t>(case_id));
    const int d = static_cast<int>(1 + rng.next_long(0, 2));
    const long X = 1 + rng.next_long(0, 3);
    const long m = 1 + rng.next_long(0, 11);
    const ConstraintSet S = random_constraints(d, X, m, rng);

    std::vector<RatVector> probes;
    for (int t = 0; t < 3; ++t) {
      RatVector x;
      for (int j = 0; j < d; ++j) {
        const long den = 1 + rng.next_long(0, 3);
        x.emplace_back(Rational(Int(rng.next_long(-(X + 1) * den, (X + 1) * den)), Int(den)));
      }
      probes.push_back(std::move(x));
    }
    const auto verts = arrangement_vertices(S, ExecPolicy::Serial);
    for (int t = 0; t < 2 && !verts.empty(); ++t)
      probes.push_back(verts[static_cast<std::size_t>(
          rng.next_long(0, static_cast<long>(verts.size()) - 1))]);

    for (const auto& x : probes) {
      ++probes_run;
      const long dep = depth(S, x);
      const long cdep = cdepth_oracle(S, x, ExecPolicy::Serial);
      if (dep < (d + 1) * cdep - d * static_cast<long>(S.size())) ++violations;
    }
  }

  // Tight witness: {x >= 0, x <= 1, x >= 2}, probe 3/2. Hull-depth 2 but
  // depth 1, meeting the bound with equality: 1 = 2*2 - 1*3.
  ConstraintSet W(1, Int(2));
  W.add({{Int(1)}, Int(0)});
  W.add({{Int(-1)}, Int(-1)});
  W.add({{Int(1)}, Int(2)});
  const RatVector probe{Rational(3, 2)};
  const long wd = depth(W, probe);
  const long wc = cdepth_oracle(W, probe, policy);
  const bool witness_ok = wd == 1 && wc == 2 && wd == 2 * wc - 1 * 3;

  CriterionResult r;
  r.name = "depth >= (d+1)*hull_depth - d*|S| with tight 1-d witness";
  r.pass = violations == 0 && witness_ok;
  r.detail = std::to_string(probes_run) + " probes over " + std::to_string(instances) +
             " instances, " + std::to_string(violations) + " violations; witness depth=" +
             std::to_string(wd) + " hull_depth=" + std::to_string(wc);
  return r;
}

// ---------------------------------------------------------------------------
// 4. Fast list evaluator vs definitional oracle.

CriterionResult crit_list_vs_definitional(ExecPolicy policy) {
  const long instances = 200;
  long mismatches = 0;
  long probes_run = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : mismatches, probes_run) \
    if (policy == ExecPolicy::Parallel)
  for (long case_id = 0; case_id < instances; ++case_id) {
    RandomSource rng(0xFA57ull, static_cast<std::uint64_t>(case_id));
    const int d = static_cast<int>(1 + rng.next_long(0, 1));
    const long X = 1 + rng.next_long(0, 3);
    const long m = 1 + rng.next_long(0, 9);
    const ConstraintSet S = random_constraints(d, X, m, rng);
    const int i = static_cast<int>(1 + rng.next_long(0, d - 1));
    const RatVector prefix = random_rational_prefix(i - 1, X, rng);
    const Rational bound = domain_spec(d, Int(X), i, Int(1)).max_value();
    const DecreasingPointList L = build_decreasing_list(S, prefix, bound, ExecPolicy::Serial);

    std::vector<Rational> probes = probe_grid({&L});
    for (int t = 0; t < 5; ++t) probes.push_back(random_probe(bound, X, rng));
    for (const Rational& x : probes) {
      ++probes_run;
      if (L.eval(x) != q_definitional(S, prefix, x)) ++mismatches;
    }
  }
  CriterionResult r;
  r.name = "fast evaluator agrees with the definitional oracle on all probes";
  r.pass = mismatches == 0;
  r.detail = std::to_string(probes_run) + " probes over " + std::to_string(instances) +
             " instances (d<=2, m<=10), " + std::to_string(mismatches) + " mismatches";
  return r;
}

// ---------------------------------------------------------------------------
// 5. The discretized candidate domain attains the true maximum.

CriterionResult crit_domain_completeness(ExecPolicy policy) {
  const long instances = 200;
  long failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) \
    if (policy == ExecPolicy::Parallel)
  for (long case_id = 0; case_id < instances; ++case_id) {
    RandomSource rng(0xD0Dull, static_cast<std::uint64_t>(case_id));
    const int d = static_cast<int>(1 + rng.next_long(0, 1));
    const long X = 1 + rng.next_long(0, 1);
    const long m = 1 + rng.next_long(0, 9);
    const ConstraintSet S = random_constraints(d, X, m, rng);

    Prefix pre;
    bool ok = true;
    for (int i = 1; i <= d && ok; ++i) {
      const auto spec = domain_spec(d, Int(X), i, pre.t_last());
      const auto domain = enumerate_domain(spec);
      const DecreasingPointList L = build_decreasing_list(S, pre, ExecPolicy::Serial);
      long best = 0;
      std::size_t best_at = 0;
      for (std::size_t t = 0; t < domain.size(); ++t) {
        const long q = L.eval(domain[t].value);
        if (t == 0 || q > best) {
          best = q;
          best_at = t;
        }
      }
      ok = ok && best == L.global_max();
      ok = ok && best == q_global_max(S, pre.values(), ExecPolicy::Serial);
      pre.chain.push_back(domain[best_at]);
    }
    if (!ok) ++failures;
  }
  CriterionResult r;
  r.name = "candidate domain attains the global objective maximum at every level";
  r.pass = failures == 0;
  r.detail = std::to_string(instances) + " instances (d<=2, X<=2), all levels chained, " +
             std::to_string(failures) + " failures";
  return r;
}

// ---------------------------------------------------------------------------
// 6. Mechanism likelihood-ratio audit and composition arithmetic.

CriterionResult crit_privacy_audit(ExecPolicy policy) {
  const long vectors = 1000;
  const double eps_grid[3] = {0.1, 1.0, 5.0};
  long audit_failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : audit_failures) \
    if (policy == ExecPolicy::Parallel)
  for (long case_id = 0; case_id < vectors; ++case_id) {
    RandomSource rng(0xA0D17ull, static_cast<std::uint64_t>(case_id));
    const long n = 2 + rng.next_long(0, 6);
    std::vector<Rational> q, qp;
    for (long t = 0; t < n; ++t) {
      const long base = rng.next_long(0, 20);
      q.emplace_back(base);
      qp.emplace_back(base + rng.next_long(-1, 1));
    }
    for (const double eps : eps_grid)
      if (!dp_ratio_audit(q, qp, Real(eps)).pass) ++audit_failures;
  }

  // Frozen composition arithmetic. Decimal literals are compared at double
  // rounding (1e-12); dyadic cases are compared exactly.
  bool comp_ok = true;
  {
    const PrivacyParams b = basic_composition({{0.5, 0.0}, {0.3, 1e-6}});
    comp_ok = comp_ok && b.eps == 0.8 && b.delta == 1e-6;
    const PrivacyParams empty = basic_composition({});
    comp_ok = comp_ok && empty.eps == 0.0 && empty.delta == 0.0;
    const PrivacyParams four =
        basic_composition({{0.25, 0.0009765625}, {0.25, 0.0009765625}, {0.25, 0.0009765625},
                           {0.25, 0.0009765625}});
    comp_ok = comp_ok && four.eps == 1.0 && four.delta == 0.00390625;

    const PrivacyParams adv = advanced_composition(2, 0.1, 0.0, std::exp(-1.0));
    comp_ok = comp_ok && std::fabs(adv.eps - 0.24) <= 1e-12 && adv.delta == std::exp(-1.0);

    // The deep-point schedule composes to (eps/2 + eps^2/(4 ln(2/delta)), delta).
    for (const int d : {1, 5}) {
      const PrivacyParams acc = deep_point_accounting(d, 1.0, 0.01);
      const double closed = 0.5 + 1.0 / (4.0 * std::log(2.0 / 0.01));
      comp_ok = comp_ok && std::fabs(acc.eps - closed) <= 1e-12 && acc.eps <= 1.0 &&
                std::fabs(acc.delta - 0.01) <= 1e-15;
    }
  }

  CriterionResult r;
  r.name = "mechanism likelihood-ratio audit (slack 1e-15) and composition arithmetic";
  r.pass = audit_failures == 0 && comp_ok;
  r.detail = std::to_string(vectors) + " neighboring quality vectors at eps in {0.1,1,5}, " +
             std::to_string(audit_failures) +
             " audit failures; composition examples " + (comp_ok ? "exact" : "WRONG");
  return r;
}

// ---------------------------------------------------------------------------
// 7/8. End-to-end deep-point utility experiments.

long sized_m(int d, long X, double alpha, double beta, double eps, double delta, long floor_m) {
  const double eps_i = deep_point_iteration_eps(d, eps, delta);
  const double delta_i = deep_point_iteration_delta(d, delta);
  const double alpha_i = alpha / (2.0 * d * (d + 1));
  const double beta_i = beta / d;
  double need = 0.0;
  Int t_prev(1);
  for (int i = 1; i <= d; ++i) {
    const auto domain = enumerate_domain(domain_spec(d, Int(X), i, t_prev));
    OptimizerParams p;
    p.alpha = alpha_i;
    p.beta = beta_i;
    p.eps = eps_i;
    p.delta = delta_i;
    need = std::max(need, baseline_threshold(static_cast<long>(domain.size()), p));
  }
  return std::max(floor_m, static_cast<long>(std::ceil(need)));
}

CriterionResult deep_point_experiment(int d, long X, double alpha, double beta, double eps,
                                      double delta, long trials, long need_successes,
                                      std::uint64_t seed, ExecPolicy policy) {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Solve;
  cfg.d = d;
  cfg.X = Int(X);
  cfg.m = sized_m(d, X, alpha, beta, eps, delta, d == 1 ? 500 : 0);
  cfg.alpha = alpha;
  cfg.beta = beta;
  cfg.eps = eps;
  cfg.delta = delta;
  cfg.trials = trials;
  cfg.seed = seed;
  const TrialSummary summary = run_trials(cfg, policy);

  CriterionResult r;
  r.pass = summary.successes >= need_successes;
  r.detail = "d=" + std::to_string(d) + ", X=" + std::to_string(X) +
             ", m=" + std::to_string(cfg.m) + fmt(", alpha=%g, eps=%g: ", alpha, eps) +
             std::to_string(summary.successes) + "/" + std::to_string(trials) +
             " trials reached depth >= ceil((1-alpha)m), need " +
             std::to_string(need_successes);
  return r;
}

// ---------------------------------------------------------------------------
// 9. End-to-end halfspace learner utility and privacy accounting.

CriterionResult crit_learner(ExecPolicy policy) {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Learn;
  cfg.d = 2;
  cfg.X = Int(4);
  cfg.m = 12;
  cfg.alpha = 0.3;
  cfg.beta = 0.2;
  cfg.eps = 600.0;
  cfg.delta = 0.01;
  cfg.trials = 20;
  cfg.seed = 0x9A1Full;
  cfg.general_position = true;
  const TrialSummary summary = run_trials(cfg, policy);

  const PrivacyParams acc = learner_accounting(cfg.eps, cfg.delta);
  const bool accounting_ok = acc.eps <= cfg.eps * (1.0 + 1e-12) &&
                             acc.delta <= cfg.delta * (1.0 + 1e-12);

  CriterionResult r;
  r.name = "halfspace learner: val >= ceil(0.7 m) on general-position data; accounting <= budget";
  r.pass = summary.successes >= 15 && accounting_ok;
  r.detail = "d=2, X=4, m=12, eps=600: " + std::to_string(summary.successes) +
             "/20 trials, need 15" + fmt("; composed (%.6g, %.6g) within budget ", acc.eps,
                                         acc.delta) +
             (accounting_ok ? "yes" : "NO");
  return r;
}

// ---------------------------------------------------------------------------
// 10. Noise puts arbitrary small datasets in general position.

CriterionResult crit_noise_general_position(ExecPolicy policy) {
  const long trials = 500;
  const double beta = 0.1;
  long failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) \
    if (policy == ExecPolicy::Parallel)
  for (long t = 0; t < trials; ++t) {
    RandomSource rng(0x6E05ull, static_cast<std::uint64_t>(t));
    LabeledDataset S(2, Int(1));
    for (int p = 0; p < 6; ++p) {
      LabeledPoint pt;
      pt.x = {Rational(rng.next_long(-1, 1)), Rational(rng.next_long(-1, 1))};
      pt.y = (rng.next_u64() & 1) != 0 ? 1 : -1;
      S.add(std::move(pt));
    }
    const auto [noisy, grid] = add_noise(S, beta, rng);
    (void)grid;
    std::vector<RatVector> pts;
    for (const auto& p : noisy.points()) pts.push_back(p.x);
    if (!general_position_check(2, pts)) ++failures;
  }
  CriterionResult r;
  r.name = "coordinate noise leaves d=2, s=6 datasets in general position";
  r.pass = failures <= static_cast<long>(beta * trials);
  r.detail = std::to_string(failures) + "/" + std::to_string(trials) +
             " degenerate after noise, allowed " +
             std::to_string(static_cast<long>(beta * trials)) +
             " (includes repeated and collinear inputs)";
  return r;
}

// ---------------------------------------------------------------------------
// 11. Noise preserves realizability via the guaranteed margin.

CriterionResult crit_noise_margin(ExecPolicy policy) {
  const long trials = 100;
  long failures = 0;
  const Int Xp = margin_bound(2, Int(1));
  const bool margin_pin = Xp == 2048;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) \
    if (policy == ExecPolicy::Parallel)
  for (long t = 0; t < trials; ++t) {
    RandomSource rng(0x3A46ull, static_cast<std::uint64_t>(t));
    RandomSource gen = rng.fork(1);
    const long m = 3 + rng.next_long(0, 3);
    const LabeledDataset S = generate_labeled_instance(2, Int(1), m, gen, false);
    RandomSource noise = rng.fork(2);
    const auto [noisy, grid] = add_noise(S, 0.1, noise);
    const auto [scaled, Xt] = rescale_to_grid(noisy, grid, S.X());
    (void)Xt;
    bool realizable = false;
    for (int w = -1; w <= 1 && !realizable; ++w)
      realizable = is_realizable(dualize(scaled, w));
    if (!realizable) ++failures;
  }
  CriterionResult r;
  r.name = "noise preserves realizability (margin bound X'=2048 at d=2, X=1)";
  r.pass = failures == 0 && margin_pin;
  r.detail = std::to_string(trials) + " realizable datasets, " + std::to_string(failures) +
             " lost realizability after noise; margin bound " + Xp.get_str() +
             (margin_pin ? " as pinned" : " UNEXPECTED");
  return r;
}

struct CriterionSpec {
  CriterionResult (*run)(ExecPolicy);
  double budget_seconds;
};

CriterionResult crit_deep_point_1d(ExecPolicy policy) {
  CriterionResult r = deep_point_experiment(1, 5, 0.3, 0.2, 2.0, 0.01, 100, 75, 0xD1ull, policy);
  r.name = "end-to-end deep point, d=1: depth >= 0.7m in >= 75/100 seeded trials";
  return r;
}

CriterionResult crit_deep_point_2d(ExecPolicy policy) {
  CriterionResult r = deep_point_experiment(2, 2, 0.25, 0.2, 2.0, 0.01, 20, 15, 0xD2ull, policy);
  r.name = "end-to-end deep point, d=2: depth >= 0.75m in >= 15/20 seeded trials";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria(ExecPolicy policy, std::ostream* progress) {
  const CriterionSpec specs[] = {
      {crit_quasi_concavity, 300.0},       {crit_sensitivity, 300.0},
      {crit_depth_bound, 300.0},           {crit_list_vs_definitional, 600.0},
      {crit_domain_completeness, 600.0},   {crit_privacy_audit, 120.0},
      {crit_deep_point_1d, 300.0},         {crit_deep_point_2d, 1800.0},
      {crit_learner, 1800.0},              {crit_noise_general_position, 120.0},
      {crit_noise_margin, 600.0},
  };
  std::vector<CriterionResult> results;
  int id = 1;
  for (const auto& spec : specs) {
    const auto t0 = Clock::now();
    CriterionResult r = spec.run(policy);
    r.id = id++;
    r.seconds = elapsed_seconds(t0);
    if (r.seconds > spec.budget_seconds) {
      r.pass = false;
      r.detail += fmt("; OVER TIME BUDGET %.0fs", spec.budget_seconds);
    }
    if (progress != nullptr) {
      (*progress) << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "/11] " << r.name << " ("
                  << r.detail << fmt("; %.1fs/%.0fs)", r.seconds, spec.budget_seconds)
                  << std::endl;
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool run_acceptance(std::ostream& out, ExecPolicy policy) {
  const auto results = run_acceptance_criteria(policy, &out);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  out << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << results.size()
      << " criteria)" << std::endl;
  return all;
}

}  // namespace dplf
