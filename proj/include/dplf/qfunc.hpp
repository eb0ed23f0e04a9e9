// The slice quality function Q and its two evaluation routes.
//
// Fix a constraint multiset S and a prefix (x*_1 .. x*_{i-1}). For a probe
// value x_i, Q is the largest k such that x_i lies between the infimum and
// supremum of the i-th coordinates of the depth->=k region restricted to the
// prefix slice. Q is quasi-concave in x_i (the level sets are nested
// intervals) and changes by at most 1 when one constraint of S is replaced.
//
// Two independent routes compute it:
//   * q_definitional: brute force. Enumerates vertices of the sliced
//     constraint arrangement (clipped by a symbolic box at infinity so
//     unbounded directions are handled exactly) and runs the per-level
//     interval test directly. Slow, obviously correct; the test oracle.
//   * build_decreasing_list + q_eval: the fast path. Stores Q's decreasing
//     points with exact values plus boundary sentinels; evaluation is a
//     binary search and a min of the two bracketing entries.
#pragma once

#include <stdexcept>
#include <vector>

#include "dplf/exec.hpp"
#include "dplf/geometry.hpp"
#include "dplf/rational.hpp"

namespace dplf {

// One admissible value for coordinate i: value = s/t with the unreduced
// witness pair kept alongside (t > 0, a multiple of the previous level's
// witness denominator).
struct DomainElement {
  Rational value;
  Int s;
  Int t;
};

// Candidate grid for coordinate i given the witness denominator t_prev of
// the chosen prefix: numerators range over [-num_bound, num_bound] and
// denominators over {j * t_prev : 1 <= j <= den_step}.
struct DomainSpec {
  int d = 0;
  Int X;
  int i = 1;  // 1-based coordinate index
  Int t_prev;
  Int num_bound;  // (d * d!)^i * X^(d*i)
  Int den_step;   // d! * X^d
  Rational max_value() const { return Rational(num_bound, t_prev); }
};

struct DomainTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DomainSpec domain_spec(int d, const Int& X, int i, const Int& t_prev);

// All distinct values s/t admitted by the spec, sorted ascending, each with
// a minimal-denominator witness. Throws DomainTooLarge when the raw pair
// count exceeds `cap`.
std::vector<DomainElement> enumerate_domain(const DomainSpec& spec, long cap = 5'000'000);

struct Prefix {
  std::vector<DomainElement> chain;
  RatVector values() const;
  Int t_last() const;  // 1 for the empty prefix
};

struct ListEntry {
  Rational x;
  long k;
};

// Sorted decreasing-point list with sentinels at +-bound carrying the exact
// boundary Q values.
class DecreasingPointList {
 public:
  DecreasingPointList(std::vector<ListEntry> entries, Rational bound);

  const std::vector<ListEntry>& entries() const { return entries_; }
  const Rational& bound() const { return bound_; }
  long global_max() const;
  // Q at x: stored value at an entry, min of the bracketing entries between
  // them. Requires |x| <= bound.
  long eval(const Rational& x) const;

 private:
  std::vector<ListEntry> entries_;
  Rational bound_;
};

DecreasingPointList build_decreasing_list(const ConstraintSet& S, const RatVector& prefix,
                                          const Rational& sentinel_bound,
                                          ExecPolicy policy = ExecPolicy::Parallel);

// Convenience overload: coordinate i = prefix length + 1, sentinel bound
// taken from that coordinate's domain extremes.
DecreasingPointList build_decreasing_list(const ConstraintSet& S, const Prefix& prefix,
                                          ExecPolicy policy = ExecPolicy::Parallel);

long q_eval(const DecreasingPointList& L, const Rational& x);

// Largest min-of-Q over a window of 2^j consecutive elements of the sorted
// candidate domain. Quasi-concavity reduces each window's minimum to its two
// endpoints. j = 0 gives the domain maximum, the full width gives the domain
// minimum.
long q_interval_min(const DecreasingPointList& L, const std::vector<DomainElement>& domain,
                    int j);

// Brute-force Q. Reference oracle for the list path.
long q_definitional(const ConstraintSet& S, const RatVector& prefix, const Rational& x);
long q_definitional(const ConstraintSet& S, const Prefix& prefix, const Rational& x);

// Max of Q over all of R (not clipped to the sentinel range), computed from
// the sliced arrangement directly.
long q_global_max(const ConstraintSet& S, const RatVector& prefix,
                  ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace dplf
