#include "dplf/harness.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace dplf {
namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

json rat_to_json(const Rational& r) {
  if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
  return r.str();
}

Rational rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational (integer or \"num/den\" string)");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// True when no d-subset of pts spans a common hyperplane with cand appended,
// i.e. appending cand keeps the set in general position (assuming pts is).
bool extends_general_position(int d, const std::vector<RatVector>& pts, const RatVector& cand) {
  const std::size_t n = pts.size();
  const std::size_t k = static_cast<std::size_t>(d);
  if (n < k) return true;
  std::vector<std::size_t> idx(k);
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (!ok) return;
    if (pos == k) {
      RatMatrix M(k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t col = 0; col < k; ++col)
          M.at(r, col) = pts[idx[r]][col] - cand[col];
      if (determinant(M).is_zero()) ok = false;
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return ok;
}

TrialRow run_single_trial(const ExperimentConfig& cfg, long t, ExecPolicy policy) {
  RandomSource base(cfg.seed, static_cast<std::uint64_t>(t));
  RandomSource gen_rng = base.fork(1);
  const RandomSource run_rng = base.fork(2);

  const auto t0 = std::chrono::steady_clock::now();
  long achieved = 0;
  if (cfg.kind == ExperimentKind::Solve) {
    auto inst = generate_feasibility_instance(cfg.d, cfg.X, cfg.m, gen_rng);
    const auto run = find_deep_point(inst.S, cfg.alpha, cfg.beta, cfg.eps, cfg.delta, run_rng,
                                     policy, cfg.domain_cap, cfg.backend);
    achieved = depth(inst.S, run.point);
  } else {
    const auto data =
        generate_labeled_instance(cfg.d, cfg.X, cfg.m, gen_rng, cfg.general_position);
    const auto run = learn_halfspace(data, cfg.alpha, cfg.beta, cfg.eps, cfg.delta, run_rng,
                                     policy, cfg.domain_cap, cfg.backend);
    achieved = run.val;
  }
  const auto t1 = std::chrono::steady_clock::now();

  const Rational goal = (Rational(1) - Rational(mpq_class(cfg.alpha))) * Rational(Int(cfg.m));
  TrialRow row;
  row.trial = t;
  row.seed = cfg.seed;
  row.d = cfg.d;
  row.X = cfg.X;
  row.m = cfg.m;
  row.alpha = cfg.alpha;
  row.beta = cfg.beta;
  row.eps = cfg.eps;
  row.delta = cfg.delta;
  row.achieved = achieved;
  row.threshold = goal.ceil().get_si();
  row.success = achieved >= row.threshold;
  row.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return row;
}

}  // namespace

FeasibilityInstance generate_feasibility_instance(int d, const Int& X, long m,
                                                  RandomSource& rng) {
  if (d < 1) throw std::invalid_argument("generate: dimension must be positive");
  if (X < 1 || !X.fits_slong_p())
    throw std::invalid_argument("generate: grid bound must be a small positive integer");
  if (m < 2L * d + 1)
    throw std::invalid_argument("generate: need m >= 2d + 1 to fit the box rows");
  const long Xl = X.get_si();

  long c = std::min((3 * m + 19) / 20, m / (2L * d + 1));
  if (c < 1) c = 1;

  ConstraintSet S(d, X);
  for (int j = 0; j < d; ++j) {
    Constraint low;
    low.a.assign(static_cast<std::size_t>(d), Int(0));
    low.a[static_cast<std::size_t>(j)] = 1;
    low.w = -X;  // x_j >= -X
    Constraint high;
    high.a.assign(static_cast<std::size_t>(d), Int(0));
    high.a[static_cast<std::size_t>(j)] = -1;
    high.w = -X;  // x_j <= X
    S.add(std::move(low), c);
    S.add(std::move(high), c);
  }

  RatVector p(static_cast<std::size_t>(d));
  for (auto& coord : p) coord = Rational(Int(rng.next_long(-4 * Xl, 4 * Xl)), Int(4));

  const long want = m - 2L * d * c;
  const long budget = 200 * (m + 10);
  long attempts = 0;
  for (long made = 0; made < want;) {
    if (++attempts > budget)
      throw std::runtime_error("generate: rejection budget exceeded for feasible constraints");
    Constraint cst;
    cst.a.reserve(static_cast<std::size_t>(d));
    bool nonzero = false;
    for (int j = 0; j < d; ++j) {
      const long v = rng.next_long(-Xl, Xl);
      if (v != 0) nonzero = true;
      cst.a.emplace_back(v);
    }
    if (!nonzero) continue;
    cst.w = Int(rng.next_long(-Xl, Xl));
    if (dot(cst.a, p) >= Rational(cst.w)) {
      S.add(std::move(cst), 1);
      ++made;
    }
  }
  return {std::move(S), std::move(p), c};
}

LabeledDataset generate_labeled_instance(int d, const Int& X, long m, RandomSource& rng,
                                         bool require_general_position,
                                         Hypothesis* hidden_out) {
  if (d < 1) throw std::invalid_argument("generate: dimension must be positive");
  if (X < 1 || !X.fits_slong_p())
    throw std::invalid_argument("generate: grid bound must be a small positive integer");
  if (m < 1) throw std::invalid_argument("generate: need at least one point");
  const long Xl = X.get_si();

  std::vector<Int> astar(static_cast<std::size_t>(d));
  for (;;) {
    bool nonzero = false;
    for (auto& v : astar) {
      v = Int(rng.next_long(-Xl, Xl));
      if (v != 0) nonzero = true;
    }
    if (nonzero) break;
  }
  const long wstar = rng.next_long(-1, 1);

  LabeledDataset out(d, X);
  std::vector<RatVector> pts;
  const long budget = 5000 * (m + 10);
  long attempts = 0;
  while (static_cast<long>(pts.size()) < m) {
    if (++attempts > budget)
      throw std::runtime_error("generate: rejection budget exceeded for labeled points");
    RatVector x(static_cast<std::size_t>(d));
    bool nonzero = false;
    for (auto& coord : x) {
      const long v = rng.next_long(-Xl, Xl);
      if (v != 0) nonzero = true;
      coord = Rational(v);
    }
    if (!nonzero) continue;  // the origin has no dual halfspace
    if (require_general_position && !extends_general_position(d, pts, x)) continue;
    const int y = dot(astar, x) >= Rational(Int(wstar)) ? 1 : -1;
    out.add({x, y});
    pts.push_back(std::move(x));
  }

  if (hidden_out != nullptr) {
    RatVector av;
    av.reserve(astar.size());
    for (const auto& v : astar) av.emplace_back(v);
    *hidden_out = Hypothesis{std::move(av), Rational(Int(wstar))};
  }
  return out;
}

TrialSummary run_trials(const ExperimentConfig& cfg, ExecPolicy policy) {
  if (cfg.trials < 1) throw std::invalid_argument("run_trials: need at least one trial");
  std::vector<TrialRow> rows(static_cast<std::size_t>(cfg.trials));
  std::vector<std::string> errors(static_cast<std::size_t>(cfg.trials));
  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (long t = 0; t < cfg.trials; ++t) {
    try {
      rows[static_cast<std::size_t>(t)] = run_single_trial(cfg, t, policy);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(t)] = e.what();  // exceptions cannot cross the loop
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error("trial failed: " + e);
  }
  TrialSummary summary;
  summary.rows = std::move(rows);
  for (const auto& r : summary.rows) {
    if (r.success) ++summary.successes;
  }
  return summary;
}

std::string trials_csv(const TrialSummary& summary) {
  std::string out =
      "trial,seed,d,X,m,alpha,beta,eps,delta,achieved,threshold,success,millis\n";
  for (const auto& r : summary.rows) {
    out += std::to_string(r.trial);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.d);
    out += ',';
    out += r.X.get_str();
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += fmt_double(r.alpha);
    out += ',';
    out += fmt_double(r.beta);
    out += ',';
    out += fmt_double(r.eps);
    out += ',';
    out += fmt_double(r.delta);
    out += ',';
    out += std::to_string(r.achieved);
    out += ',';
    out += std::to_string(r.threshold);
    out += ',';
    out += r.success ? "1" : "0";
    out += ',';
    out += std::to_string(r.millis);
    out += '\n';
  }
  return out;
}

std::string constraint_set_to_json(const ConstraintSet& S) {
  json j;
  j["d"] = S.d();
  j["X"] = int_to_json(S.X());
  json rows = json::array();
  for (const auto& [cst, mult] : S.distinct()) {
    json row = json::array();
    for (const auto& a : cst.a) row.push_back(int_to_json(a));
    row.push_back(int_to_json(cst.w));
    for (long k = 0; k < mult; ++k) rows.push_back(row);
  }
  j["constraints"] = std::move(rows);
  return j.dump(2) + "\n";
}

ConstraintSet constraint_set_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int d = j.at("d").get<int>();
  ConstraintSet S(d, int_from_json(j.at("X")));
  for (const auto& row : j.at("constraints")) {
    if (static_cast<int>(row.size()) != d + 1)
      throw std::invalid_argument("constraint row must have d+1 entries");
    Constraint c;
    for (int k = 0; k < d; ++k) c.a.push_back(int_from_json(row[static_cast<std::size_t>(k)]));
    c.w = int_from_json(row[static_cast<std::size_t>(d)]);
    S.add(std::move(c));
  }
  return S;
}

std::string labeled_to_json(const LabeledDataset& S) {
  json j;
  j["d"] = S.d();
  j["X"] = int_to_json(S.X());
  json rows = json::array();
  for (const auto& p : S.points()) {
    json row = json::array();
    for (const auto& coord : p.x) row.push_back(rat_to_json(coord));
    row.push_back(p.y);
    rows.push_back(std::move(row));
  }
  j["points"] = std::move(rows);
  return j.dump(2) + "\n";
}

LabeledDataset labeled_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int d = j.at("d").get<int>();
  LabeledDataset S(d, int_from_json(j.at("X")));
  for (const auto& row : j.at("points")) {
    if (static_cast<int>(row.size()) != d + 1)
      throw std::invalid_argument("point row must have d+1 entries");
    LabeledPoint p;
    for (int k = 0; k < d; ++k) p.x.push_back(rat_from_json(row[static_cast<std::size_t>(k)]));
    p.y = row[static_cast<std::size_t>(d)].get<int>();
    if (p.y != 1 && p.y != -1) throw std::invalid_argument("labels must be +1 or -1");
    S.add(std::move(p));
  }
  return S;
}

std::string run_to_json(const DeepPointRun& run) {
  json j;
  j["d"] = run.d;
  j["alpha"] = run.alpha;
  j["beta"] = run.beta;
  j["eps"] = run.eps;
  j["delta"] = run.delta;
  j["backend"] = run.backend;
  json iters = json::array();
  for (const auto& it : run.iterations) {
    json rec;
    rec["i"] = it.i;
    rec["r"] = it.r;
    rec["domain_size"] = it.domain_size;
    rec["threshold"] = it.threshold;
    rec["chosen"] = {{"value", rat_to_json(it.chosen.value)},
                     {"s", int_to_json(it.chosen.s)},
                     {"t", int_to_json(it.chosen.t)}};
    rec["achieved_q"] = it.achieved_q;
    iters.push_back(std::move(rec));
  }
  j["iterations"] = std::move(iters);
  json pt = json::array();
  for (const auto& coord : run.point) pt.push_back(coord.str());
  j["point"] = std::move(pt);
  j["accounted"] = {{"eps", run.accounted.eps}, {"delta", run.accounted.delta}};
  return j.dump(2) + "\n";
}

std::string model_to_json(const LearnerRun& run) {
  json j;
  json a = json::array();
  for (const auto& coord : run.hypothesis.a) a.push_back(coord.str());
  j["a"] = std::move(a);
  if (!run.hypothesis.w.is_integer())
    throw std::logic_error("model offset must be an integer");
  j["w"] = run.hypothesis.w.num().get_si();
  j["val"] = run.val;
  j["empirical_error"] = run.error.str();
  return j.dump(2) + "\n";
}

std::pair<std::vector<Rational>, std::vector<Rational>> quality_pair_from_json(
    const std::string& text) {
  const json j = json::parse(text);
  std::pair<std::vector<Rational>, std::vector<Rational>> out;
  for (const auto& v : j.at("q")) out.first.push_back(rat_from_json(v));
  for (const auto& v : j.at("q_prime")) out.second.push_back(rat_from_json(v));
  return out;
}

}  // namespace dplf
