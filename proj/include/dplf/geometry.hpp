// Linear-constraint geometry over exact rationals: depth counting,
// Fourier-Motzkin feasibility, convex-hull membership, and the brute-force
// hull-depth oracle used to validate the fast path.
#pragma once

#include <utility>
#include <vector>

#include "dplf/exec.hpp"
#include "dplf/rational.hpp"

namespace dplf {

// One halfspace <a, x> >= w with integer coefficients; a must be nonzero.
struct Constraint {
  std::vector<Int> a;
  Int w;
};

bool operator==(const Constraint& l, const Constraint& r);

// Multiset of constraints over the integer grid [-X, X]^(d+1). Multiplicity
// matters for depth counts; `distinct()` groups duplicates for kernels whose
// cost should scale with the number of distinct hyperplanes.
class ConstraintSet {
 public:
  ConstraintSet(int d, Int X) : d_(d), X_(std::move(X)) {}

  void add(Constraint c, long multiplicity = 1);
  int d() const { return d_; }
  const Int& X() const { return X_; }
  long size() const { return total_; }
  const std::vector<std::pair<Constraint, long>>& distinct() const { return groups_; }

 private:
  int d_;
  Int X_;
  long total_ = 0;
  std::vector<std::pair<Constraint, long>> groups_;
};

struct LabeledPoint {
  RatVector x;
  int y;  // +1 or -1
};

class LabeledDataset {
 public:
  LabeledDataset(int d, Int X) : d_(d), X_(std::move(X)) {}

  void add(LabeledPoint p) { points_.push_back(std::move(p)); }
  int d() const { return d_; }
  const Int& X() const { return X_; }
  void set_X(Int X) { X_ = std::move(X); }
  long size() const { return static_cast<long>(points_.size()); }
  const std::vector<LabeledPoint>& points() const { return points_; }

 private:
  int d_;
  Int X_;
  std::vector<LabeledPoint> points_;
};

struct Hypothesis {
  RatVector a;
  Rational w;
};

// Number of constraints of S (with multiplicity) weakly satisfied at x.
long depth(const ConstraintSet& S, const RatVector& x);

// One row <c, x> >= rhs (or strictly > when strict) of a rational system.
struct LinRow {
  RatVector c;
  Rational rhs;
  bool strict = false;
};

// Exact Fourier-Motzkin feasibility for a mixed weak/strict system.
bool fm_feasible(std::vector<LinRow> rows, int nvars);

// True when some point satisfies every constraint of S simultaneously.
bool is_realizable(const ConstraintSet& S);

// Exact hull membership: searches for an affinely independent subset of at
// most d+1 candidate points carrying nonnegative barycentric coordinates
// for x. Sound and complete for membership in the convex hull of pts.
bool caratheodory_membership(const RatVector& x, const std::vector<RatVector>& pts);

// All intersection points of d linearly independent constraint hyperplanes
// (distinct constraints only), deduplicated and sorted.
std::vector<RatVector> arrangement_vertices(const ConstraintSet& S,
                                            ExecPolicy policy = ExecPolicy::Parallel);

// Brute-force hull-depth: the largest k such that x lies in the convex hull
// of arrangement vertices of depth >= k, floored below by depth(S, x).
// Exact at levels whose depth-k region is bounded; never overshoots the true
// hull-depth and never undershoots depth, which is what every consumer
// (bound checks, final-conversion checks) relies on.
long cdepth_oracle(const ConstraintSet& S, const RatVector& x,
                   ExecPolicy policy = ExecPolicy::Parallel);

// Classification count: positives weakly inside the halfspace, negatives
// strictly outside. A negative sitting exactly on the boundary is not counted.
long val(const LabeledDataset& S, const Hypothesis& h);

// Every subset of d+1 points is affinely independent (no d+1 of them on a
// common hyperplane).
bool general_position_check(int d, const std::vector<RatVector>& pts);

// Every data point lies at distance >= 1/Xp from the separating hyperplane;
// checked without square roots via (<a,x> - w)^2 * Xp^2 >= ||a||^2.
bool margin_satisfied(const LabeledDataset& S, const Hypothesis& h, const Int& Xp);

}  // namespace dplf
