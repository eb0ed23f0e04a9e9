#include "dplf/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dplf {

bool operator==(const Constraint& l, const Constraint& r) {
  return l.w == r.w && l.a == r.a;
}

void ConstraintSet::add(Constraint c, long multiplicity) {
  if (static_cast<int>(c.a.size()) != d_) {
    throw std::invalid_argument("ConstraintSet::add: dimension mismatch");
  }
  bool nonzero = false;
  for (const Int& ai : c.a) nonzero = nonzero || sgn(ai) != 0;
  if (!nonzero) throw std::invalid_argument("ConstraintSet::add: zero normal vector");
  if (multiplicity <= 0) throw std::invalid_argument("ConstraintSet::add: bad multiplicity");
  total_ += multiplicity;
  for (auto& g : groups_) {
    if (g.first == c) {
      g.second += multiplicity;
      return;
    }
  }
  groups_.emplace_back(std::move(c), multiplicity);
}

long depth(const ConstraintSet& S, const RatVector& x) {
  if (static_cast<int>(x.size()) != S.d()) throw std::invalid_argument("depth: dimension mismatch");
  long count = 0;
  for (const auto& [c, mult] : S.distinct()) {
    if (dot(c.a, x) >= Rational(c.w)) count += mult;
  }
  return count;
}

namespace {

struct RowKeyLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }
};

// Canonicalize a row by its first nonzero coefficient; returns false (and
// reports infeasibility through `bad`) for ground rows.
bool normalize_row(LinRow& r, bool& bad) {
  std::size_t lead = r.c.size();
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (!r.c[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead == r.c.size()) {
    // 0 >= rhs (or 0 > rhs): either vacuous or a contradiction.
    if (r.strict ? r.rhs.sign() >= 0 : r.rhs.sign() > 0) bad = true;
    return false;
  }
  Rational s = r.c[lead].abs();
  for (auto& v : r.c) v /= s;
  r.rhs /= s;
  return true;
}

}  // namespace

bool fm_feasible(std::vector<LinRow> rows, int nvars) {
  auto compact = [&](std::vector<LinRow>& rs) -> bool {
    // Deduplicate by coefficient vector, keeping the binding (largest rhs,
    // then strictest) variant. Returns false on a ground contradiction.
    std::map<RatVector, std::pair<Rational, bool>, RowKeyLess> best;
    for (auto& r : rs) {
      bool bad = false;
      if (!normalize_row(r, bad)) {
        if (bad) return false;
        continue;
      }
      auto it = best.find(r.c);
      if (it == best.end()) {
        best.emplace(std::move(r.c), std::make_pair(std::move(r.rhs), r.strict));
      } else if (r.rhs > it->second.first) {
        it->second = {std::move(r.rhs), r.strict};
      } else if (r.rhs == it->second.first) {
        it->second.second = it->second.second || r.strict;
      }
    }
    rs.clear();
    for (auto& [c, v] : best) rs.push_back(LinRow{c, v.first, v.second});
    return true;
  };

  if (!compact(rows)) return false;
  for (int var = 0; var < nvars; ++var) {
    std::vector<LinRow> pos, neg, rest;
    for (auto& r : rows) {
      int s = r.c[var].sign();
      if (s > 0) {
        pos.push_back(std::move(r));
      } else if (s < 0) {
        neg.push_back(std::move(r));
      } else {
        rest.push_back(std::move(r));
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        // p: alpha*x_var >= ... ; n: -gamma*x_var >= ... with alpha,gamma > 0.
        Rational alpha = p.c[var];
        Rational gamma = -n.c[var];
        LinRow r;
        r.c.resize(p.c.size());
        for (std::size_t j = 0; j < p.c.size(); ++j) r.c[j] = gamma * p.c[j] + alpha * n.c[j];
        r.rhs = gamma * p.rhs + alpha * n.rhs;
        r.strict = p.strict || n.strict;
        rest.push_back(std::move(r));
      }
    }
    rows = std::move(rest);
    if (!compact(rows)) return false;
  }
  return true;
}

bool is_realizable(const ConstraintSet& S) {
  std::vector<LinRow> rows;
  for (const auto& [c, mult] : S.distinct()) {
    LinRow r;
    r.c.reserve(c.a.size());
    for (const Int& ai : c.a) r.c.emplace_back(ai);
    r.rhs = Rational(c.w);
    rows.push_back(std::move(r));
  }
  return fm_feasible(std::move(rows), S.d());
}

namespace {

// Exact phase-1 simplex with Bland's rule: does A*lambda = b admit
// lambda >= 0? A is r rows by c columns. Artificial variables start basic;
// the answer is yes iff their sum can be driven to zero. Bland's pivoting
// guarantees termination despite degeneracy, and every pivot is an exact
// rational operation.
bool nonneg_combination_exists(std::vector<RatVector> A, RatVector b) {
  const std::size_t r = A.size();
  const std::size_t c = r == 0 ? 0 : A[0].size();
  for (std::size_t i = 0; i < r; ++i) {
    if (b[i].sign() < 0) {
      b[i] = -b[i];
      for (auto& v : A[i]) v = -v;
    }
  }

  // Tableau columns: [0, c) structural, [c, c + r) artificial identity.
  std::vector<RatVector> T(r, RatVector(c + r, Rational(0)));
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) T[i][j] = A[i][j];
    T[i][c + i] = Rational(1);
    basis[i] = c + i;
  }

  for (;;) {
    // Reduced cost of column j under cost 1 on artificials, 0 otherwise:
    // cost_j - sum of T[i][j] over rows whose basic variable is artificial.
    std::size_t enter = c + r;
    for (std::size_t j = 0; j < c + r && enter == c + r; ++j) {
      Rational rc(j < c ? 0L : 1L);
      for (std::size_t i = 0; i < r; ++i) {
        if (basis[i] >= c) rc -= T[i][j];
      }
      if (rc.sign() < 0) enter = j;  // Bland: first eligible column
    }
    if (enter == c + r) break;  // optimal

    std::size_t leave = r;
    Rational best;
    for (std::size_t i = 0; i < r; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      Rational ratio = b[i] / T[i][enter];
      if (leave == r || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == r) break;  // unbounded cannot happen; bail defensively

    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    b[leave] /= piv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < c + r; ++j) T[i][j] -= f * T[leave][j];
      b[i] -= f * b[leave];
    }
    basis[leave] = enter;
  }

  for (std::size_t i = 0; i < r; ++i) {
    if (basis[i] >= c && !b[i].is_zero()) return false;
  }
  return true;
}

}  // namespace

bool caratheodory_membership(const RatVector& x, const std::vector<RatVector>& pts) {
  const std::size_t d = x.size();
  if (pts.empty()) return false;

  // Bounding-box prefilter: the hull lives inside the candidate bbox.
  for (std::size_t r = 0; r < d; ++r) {
    Rational lo = pts[0][r], hi = pts[0][r];
    for (const auto& p : pts) {
      if (p[r] < lo) lo = p[r];
      if (p[r] > hi) hi = p[r];
    }
    if (x[r] < lo || x[r] > hi) return false;
  }

  // Membership is the feasibility of the barycentric system: coordinates
  // row-wise plus the affine row of ones.
  const std::size_t n = pts.size();
  std::vector<RatVector> A(d + 1, RatVector(n));
  RatVector b(d + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < d; ++r) A[r][j] = pts[j][r];
    A[d][j] = Rational(1);
  }
  for (std::size_t r = 0; r < d; ++r) b[r] = x[r];
  b[d] = Rational(1);
  return nonneg_combination_exists(std::move(A), std::move(b));
}

namespace {

void collect_tuples(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  auto rec = [&](auto&& self, std::size_t start, std::size_t pos) -> void {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      cur[pos] = i;
      self(self, i + 1, pos + 1);
    }
  };
  rec(rec, 0, 0);
}

struct RatVecLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }
};

}  // namespace

std::vector<RatVector> arrangement_vertices(const ConstraintSet& S, ExecPolicy policy) {
  const int d = S.d();
  const auto& groups = S.distinct();
  const std::size_t n = groups.size();
  std::vector<RatVector> out;
  if (n < static_cast<std::size_t>(d)) return out;

  std::vector<std::vector<std::size_t>> tuples;
  collect_tuples(n, d, tuples);
  std::vector<std::optional<RatVector>> results(tuples.size());

  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
  for (long t = 0; t < static_cast<long>(tuples.size()); ++t) {
    RatMatrix A(d, d);
    RatVector b(d);
    for (int i = 0; i < d; ++i) {
      const Constraint& c = groups[tuples[t][i]].first;
      for (int j = 0; j < d; ++j) A.at(i, j) = Rational(c.a[j]);
      b[i] = Rational(c.w);
    }
    results[t] = solve_linear_system(A, b);
  }

  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  std::sort(out.begin(), out.end(), RatVecLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long cdepth_oracle(const ConstraintSet& S, const RatVector& x, ExecPolicy policy) {
  const long floor_depth = depth(S, x);
  std::vector<RatVector> verts = arrangement_vertices(S, policy);
  if (verts.empty()) return floor_depth;

  std::vector<long> vdepth(verts.size());
  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
  for (long i = 0; i < static_cast<long>(verts.size()); ++i) {
    vdepth[i] = depth(S, verts[i]);
  }

  std::vector<std::size_t> order(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vdepth[a] > vdepth[b]; });

  std::vector<RatVector> cands;
  std::size_t next = 0;
  for (long k = S.size(); k > floor_depth; --k) {
    while (next < order.size() && vdepth[order[next]] >= k) {
      cands.push_back(verts[order[next]]);
      ++next;
    }
    if (!cands.empty() && caratheodory_membership(x, cands)) return k;
  }
  return floor_depth;
}

long val(const LabeledDataset& S, const Hypothesis& h) {
  long count = 0;
  for (const auto& p : S.points()) {
    Rational lhs = dot(h.a, p.x);
    if (p.y > 0 ? lhs >= h.w : lhs < h.w) ++count;
  }
  return count;
}

bool general_position_check(int d, const std::vector<RatVector>& pts) {
  const std::size_t n = pts.size();
  if (n < static_cast<std::size_t>(d) + 1) return true;
  std::vector<std::vector<std::size_t>> tuples;
  collect_tuples(n, d + 1, tuples);
  for (const auto& t : tuples) {
    RatMatrix A(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) A.at(i, j) = pts[t[i]][j] - pts[t[d]][j];
    }
    if (determinant(A).is_zero()) return false;
  }
  return true;
}

bool margin_satisfied(const LabeledDataset& S, const Hypothesis& h, const Int& Xp) {
  Rational norm2;
  for (const auto& ai : h.a) norm2 += ai * ai;
  if (norm2.is_zero()) throw std::invalid_argument("margin_satisfied: zero hypothesis normal");
  Rational xp2 = Rational(Xp) * Rational(Xp);
  for (const auto& p : S.points()) {
    Rational g = dot(h.a, p.x) - h.w;
    if (g * g * xp2 < norm2) return false;
  }
  return true;
}

}  // namespace dplf
