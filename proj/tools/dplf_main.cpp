// dplf: private deep-point solving and halfspace learning over exact
// rationals. Subcommands generate instances, run the two end-to-end
// algorithms, audit mechanism output distributions, drive seeded trial
// batches, and run the acceptance battery.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "dplf/acceptance.hpp"
#include "dplf/harness.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dplf: differentially private linear feasibility and halfspace learning, "
      "exact rational arithmetic throughout"};
  app.require_subcommand(1);

  int workers = 0;
  if (const char* env = std::getenv("DPLF_WORKERS")) workers = std::atoi(env);
  app.add_option("--workers", workers,
                 "OpenMP worker count (overrides env DPLF_WORKERS; 0 keeps the runtime default)");
  bool serial = false;
  app.add_flag("--serial", serial, "use the serial reference path for all kernels");

  const auto policy = [&] {
    if (workers > 0) omp_set_num_threads(workers);
    return serial ? dplf::ExecPolicy::Serial : dplf::ExecPolicy::Parallel;
  };

  int rc = 0;

  struct {
    std::string kind = "solve";
    int d = 1;
    long X = 2;
    long m = 10;
    std::uint64_t seed = 0;
    bool gp = false;
    std::string out;
  } g;
  auto* gen = app.add_subcommand("gen", "generate a realizable instance as JSON");
  gen->fallthrough();
  gen->add_option("--kind", g.kind, "solve (constraint set) or learn (labeled points)")
      ->check(CLI::IsMember({"solve", "learn"}));
  gen->add_option("-d,--dim", g.d, "dimension")->check(CLI::PositiveNumber);
  gen->add_option("-X,--grid", g.X, "coefficient / grid bound")->check(CLI::PositiveNumber);
  gen->add_option("-m,--size", g.m, "number of constraints or points");
  gen->add_option("--seed", g.seed, "rng seed");
  gen->add_flag("--general-position", g.gp, "labeled points: no d+1 on a common hyperplane");
  gen->add_option("-o,--output", g.out, "output path (default stdout)");
  gen->callback([&] {
    dplf::RandomSource rng(g.seed);
    if (g.kind == "solve") {
      auto inst = dplf::generate_feasibility_instance(g.d, dplf::Int(g.X), g.m, rng);
      emit(g.out, dplf::constraint_set_to_json(inst.S));
      std::cerr << "constraint set of size " << inst.S.size() << " with a planted full-depth point"
                << std::endl;
    } else {
      dplf::Hypothesis hidden;
      auto data = dplf::generate_labeled_instance(g.d, dplf::Int(g.X), g.m, rng, g.gp, &hidden);
      emit(g.out, dplf::labeled_to_json(data));
      std::cerr << "labeled dataset of size " << data.size() << " with a zero-error hypothesis"
                << std::endl;
    }
  });

  struct {
    std::string in;
    double alpha = 0.3, beta = 0.2, eps = 1.0, delta = 0.01;
    std::uint64_t seed = 0;
    std::string optimizer = "expmech";
    long cap = 5'000'000;
    std::string out;
  } s;
  auto* solve = app.add_subcommand("solve", "privately find a point of near-maximal depth");
  solve->fallthrough();
  solve->add_option("-i,--input", s.in, "constraint-set JSON")->required();
  solve->add_option("--alpha", s.alpha, "allowed depth deficit fraction");
  solve->add_option("--beta", s.beta, "failure probability budget");
  solve->add_option("--eps", s.eps, "privacy budget epsilon");
  solve->add_option("--delta", s.delta, "privacy budget delta");
  solve->add_option("--seed", s.seed, "rng seed");
  solve->add_option("--optimizer", s.optimizer, "private optimizer backend (expmech)");
  solve->add_option("--domain-cap", s.cap, "largest candidate domain to materialize");
  solve->add_option("-o,--output", s.out, "run record path (default stdout)");
  solve->callback([&] {
    const auto S = dplf::constraint_set_from_json(slurp(s.in));
    const dplf::RandomSource rng(s.seed);
    const auto run = dplf::find_deep_point(S, s.alpha, s.beta, s.eps, s.delta, rng, policy(),
                                           s.cap, dplf::parse_backend(s.optimizer));
    emit(s.out, dplf::run_to_json(run));
    std::cerr << "depth " << dplf::depth(S, run.point) << " of " << S.size() << "; accounted (eps, delta) = ("
              << run.accounted.eps << ", " << run.accounted.delta << ")" << std::endl;
  });

  struct {
    std::string in;
    double alpha = 0.3, beta = 0.2, eps = 1.0, delta = 0.01;
    std::uint64_t seed = 0;
    std::string optimizer = "expmech";
    long cap = 5'000'000;
    bool noise = false;
    std::string out;
  } l;
  auto* learn = app.add_subcommand("learn", "privately learn a halfspace from labeled points");
  learn->fallthrough();
  learn->add_option("-i,--input", l.in, "labeled-dataset JSON")->required();
  learn->add_option("--alpha", l.alpha, "allowed misclassification fraction");
  learn->add_option("--beta", l.beta, "failure probability budget");
  learn->add_option("--eps", l.eps, "privacy budget epsilon");
  learn->add_option("--delta", l.delta, "privacy budget delta");
  learn->add_option("--seed", l.seed, "rng seed");
  learn->add_option("--optimizer", l.optimizer, "private optimizer backend (expmech)");
  learn->add_option("--domain-cap", l.cap, "largest candidate domain to materialize");
  learn->add_flag("--noise", l.noise,
                  "perturb coordinates within the margin and rescale to an integer grid "
                  "before learning (puts grid data in general position; the rescaled grid "
                  "is usually far too large for the explicit candidate domain)");
  learn->add_option("-o,--output", l.out, "model path (default stdout)");
  learn->callback([&] {
    auto S = dplf::labeled_from_json(slurp(l.in));
    const dplf::RandomSource rng(l.seed);
    if (l.noise) {
      auto noise_rng = rng.fork(1);
      const auto [noisy, grid] = dplf::add_noise(S, l.beta, noise_rng);
      auto [scaled, Xt] = dplf::rescale_to_grid(noisy, grid, S.X());
      std::cerr << "noise grid Delta = " << grid.Delta << ", Delta' = " << grid.DeltaPrime
                << "; rescaled bound X = " << Xt << std::endl;
      S = std::move(scaled);
    }
    const auto run = dplf::learn_halfspace(S, l.alpha, l.beta, l.eps, l.delta, rng, policy(),
                                           l.cap, dplf::parse_backend(l.optimizer));
    emit(l.out, dplf::model_to_json(run));
    std::cerr << "val " << run.val << " of " << S.size() << "; accounted (eps, delta) = ("
              << run.accounted.eps << ", " << run.accounted.delta << ") within budget ("
              << l.eps << ", " << l.delta << ")" << std::endl;
  });

  struct {
    std::string in;
    double eps = 1.0;
    double slack = 1e-15;
  } a;
  auto* audit = app.add_subcommand(
      "audit", "likelihood-ratio audit of the selection mechanism on a neighboring pair");
  audit->fallthrough();
  audit->add_option("-i,--input", a.in, "JSON with \"q\" and \"q_prime\" quality vectors")
      ->required();
  audit->add_option("--eps", a.eps, "epsilon the ratio is checked against");
  audit->add_option("--slack", a.slack, "numerical slack on the log-ratio");
  audit->callback([&] {
    const auto [q, qp] = dplf::quality_pair_from_json(slurp(a.in));
    const auto res = dplf::dp_ratio_audit(q, qp, dplf::Real(a.eps), a.slack);
    std::cout << (res.pass ? "PASS" : "FAIL") << " max |log p - log p'| = " << res.max_log_ratio
              << " against eps = " << a.eps << " (slack " << a.slack << ")" << std::endl;
    if (!res.pass) rc = 1;
  });

  dplf::ExperimentConfig t;
  std::string t_kind = "solve";
  long t_X = 2;
  auto* trials = app.add_subcommand("trials", "seeded Monte-Carlo batch, CSV per trial");
  trials->fallthrough();
  trials->add_option("--kind", t_kind, "solve or learn")
      ->check(CLI::IsMember({"solve", "learn"}));
  trials->add_option("-d,--dim", t.d, "dimension")->check(CLI::PositiveNumber);
  trials->add_option("-X,--grid", t_X, "coefficient / grid bound")->check(CLI::PositiveNumber);
  trials->add_option("-m,--size", t.m, "instance size per trial");
  trials->add_option("--alpha", t.alpha, "allowed deficit fraction");
  trials->add_option("--beta", t.beta, "failure probability budget");
  trials->add_option("--eps", t.eps, "privacy budget epsilon");
  trials->add_option("--delta", t.delta, "privacy budget delta");
  trials->add_option("--trials", t.trials, "number of trials");
  trials->add_option("--seed", t.seed, "base seed; trial k uses stream k");
  trials->add_flag("--general-position,!--no-general-position", t.general_position,
                   "labeled generation in general position (learn)");
  trials->add_option("--domain-cap", t.domain_cap, "largest candidate domain to materialize");
  std::string t_optimizer = "expmech";
  trials->add_option("--optimizer", t_optimizer, "private optimizer backend (expmech)");
  trials->add_option("-o,--output", t.output_path, "CSV path (default stdout)");
  trials->callback([&] {
    t.kind = t_kind == "solve" ? dplf::ExperimentKind::Solve : dplf::ExperimentKind::Learn;
    t.X = dplf::Int(t_X);
    t.backend = dplf::parse_backend(t_optimizer);
    const auto summary = dplf::run_trials(t, policy());
    emit(t.output_path, dplf::trials_csv(summary));
    std::cerr << "success rate " << summary.successes << "/" << t.trials << std::endl;
  });

  auto* accept = app.add_subcommand("accept", "run the acceptance battery (nonzero exit on failure)");
  accept->fallthrough();
  accept->callback([&] {
    if (!dplf::run_acceptance(std::cout, policy())) rc = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return rc;
}
