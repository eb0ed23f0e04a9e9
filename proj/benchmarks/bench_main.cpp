// Serial reference vs OpenMP kernels on the three hot paths: arrangement
// vertex enumeration, decreasing-point list construction, and the trial
// pool. Each row also cross-checks that both paths return identical results.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "dplf/harness.hpp"

namespace {

using dplf::ExecPolicy;

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s   %s\n", "kernel", "serial", "parallel", "speedup",
              "results");

  {
    dplf::RandomSource rng(42);
    const auto inst = dplf::generate_feasibility_instance(3, dplf::Int(4), 40, rng);
    std::vector<dplf::RatVector> vs, vp;
    const double ts = time_ms([&] { vs = arrangement_vertices(inst.S, ExecPolicy::Serial); });
    const double tp = time_ms([&] { vp = arrangement_vertices(inst.S, ExecPolicy::Parallel); });
    row("arrangement_vertices d=3", ts, tp, vs == vp);
  }

  {
    dplf::RandomSource rng(43);
    const auto inst = dplf::generate_feasibility_instance(2, dplf::Int(4), 150, rng);
    const dplf::Rational bound = dplf::domain_spec(2, dplf::Int(4), 1, dplf::Int(1)).max_value();
    const dplf::RatVector prefix;
    std::vector<dplf::ListEntry> es, ep;
    const double ts = time_ms([&] {
      es = build_decreasing_list(inst.S, prefix, bound, ExecPolicy::Serial).entries();
    });
    const double tp = time_ms([&] {
      ep = build_decreasing_list(inst.S, prefix, bound, ExecPolicy::Parallel).entries();
    });
    bool same = es.size() == ep.size();
    for (std::size_t i = 0; same && i < es.size(); ++i)
      same = es[i].x == ep[i].x && es[i].k == ep[i].k;
    row("decreasing list d=2", ts, tp, same);
  }

  {
    dplf::ExperimentConfig cfg;
    cfg.kind = dplf::ExperimentKind::Solve;
    cfg.d = 1;
    cfg.X = dplf::Int(5);
    cfg.m = 300;
    cfg.alpha = 0.3;
    cfg.beta = 0.2;
    cfg.eps = 2.0;
    cfg.delta = 0.01;
    cfg.trials = 16;
    cfg.seed = 7;
    dplf::TrialSummary ss, sp;
    const double ts = time_ms([&] { ss = run_trials(cfg, ExecPolicy::Serial); });
    const double tp = time_ms([&] { sp = run_trials(cfg, ExecPolicy::Parallel); });
    bool same = ss.successes == sp.successes && ss.rows.size() == sp.rows.size();
    for (std::size_t i = 0; same && i < ss.rows.size(); ++i)
      same = ss.rows[i].achieved == sp.rows[i].achieved;
    row("trial pool d=1 x16", ts, tp, same);
  }

  return 0;
}
