// Experiment plumbing: realizable instance generators, the seeded trial
// runner, and flat-file serialization (JSON instances/runs, CSV summaries).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dplf/deep_point.hpp"
#include "dplf/learner.hpp"

namespace dplf {

struct FeasibilityInstance {
  ConstraintSet S;
  RatVector hidden;       // planted point of full depth
  long box_multiplicity;  // multiplicity of each of the 2d box rows
};

// Realizable by construction: a hidden rational point is planted, random
// integer constraints are kept only when satisfied there, and each of the 2d
// box rows x_j >= -X, x_j <= X is included with multiplicity c > 0 so that
// any point outside the box misses at least c constraints. |S| = m exactly.
// Requires m >= 2d + 1.
FeasibilityInstance generate_feasibility_instance(int d, const Int& X, long m,
                                                  RandomSource& rng);

// Integer grid points (origin excluded) labeled by a hidden halfspace with
// offset in {-1, 0, 1}; negatives are strictly off the boundary, so the
// hidden hypothesis has zero empirical error. With the flag set, points are
// drawn so that no d+1 of them share a hyperplane.
LabeledDataset generate_labeled_instance(int d, const Int& X, long m, RandomSource& rng,
                                         bool require_general_position,
                                         Hypothesis* hidden_out = nullptr);

enum class ExperimentKind { Solve, Learn };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Solve;
  int d = 1;
  Int X = Int(1);
  long m = 1;
  double alpha = 0.3;
  double beta = 0.2;
  double eps = 1.0;
  double delta = 0.01;
  long trials = 1;
  std::uint64_t seed = 0;
  OptimizerBackend backend = OptimizerBackend::ExpMech;
  bool general_position = true;  // labeled-instance generation (learn only)
  long domain_cap = 5'000'000;
  std::string output_path;  // empty = stdout
};

struct TrialRow {
  long trial = 0;
  std::uint64_t seed = 0;
  int d = 0;
  Int X;
  long m = 0;
  double alpha = 0, beta = 0, eps = 0, delta = 0;
  long achieved = 0;   // depth at the returned point, or val of the model
  long threshold = 0;  // ceil((1 - alpha) * m)
  bool success = false;
  long millis = 0;
};

struct TrialSummary {
  std::vector<TrialRow> rows;
  long successes = 0;
};

// One fresh instance and one solve/learn per trial, with per-trial rng
// streams. Every column except millis is a pure function of (config, seed).
TrialSummary run_trials(const ExperimentConfig& cfg, ExecPolicy policy = ExecPolicy::Parallel);

// Header: trial,seed,d,X,m,alpha,beta,eps,delta,achieved,threshold,success,millis
std::string trials_csv(const TrialSummary& summary);

// JSON formats. Constraint sets: {"d", "X", "constraints": [[a_1..a_d, w]..]}
// with one row per multiset element. Labeled data: {"d", "X", "points":
// [[x_1..x_d, y]..]}, coordinates as integers or "num/den" strings.
std::string constraint_set_to_json(const ConstraintSet& S);
ConstraintSet constraint_set_from_json(const std::string& text);
std::string labeled_to_json(const LabeledDataset& S);
LabeledDataset labeled_from_json(const std::string& text);

// Full deep-point run record with rationals as strings.
std::string run_to_json(const DeepPointRun& run);

// {"a": ["num/den"..], "w": int, "val": int, "empirical_error": "num/den"}
std::string model_to_json(const LearnerRun& run);

// {"q": [..], "q_prime": [..]} with rationals as numbers or strings.
std::pair<std::vector<Rational>, std::vector<Rational>> quality_pair_from_json(
    const std::string& text);

}  // namespace dplf
