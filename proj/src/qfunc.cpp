#include "dplf/qfunc.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace dplf {
namespace {

// Coordinate value fin + inf * M, where M is a formal quantity larger than
// every rational. The slice arrangement is clipped by walls at +-M so that
// unbounded depth regions still contribute vertices; ordering is
// lexicographic on (inf, fin).
struct ExtRat {
  Rational fin;
  Rational inf;
  bool finite() const { return inf.is_zero(); }
};

bool ext_less(const ExtRat& a, const ExtRat& b) {
  if (a.inf != b.inf) return a.inf < b.inf;
  return a.fin < b.fin;
}

int ext_cmp_rat(const ExtRat& a, const Rational& r) {
  const int s = a.inf.sign();
  if (s != 0) return s;
  if (a.fin < r) return -1;
  if (r < a.fin) return 1;
  return 0;
}

// A constraint of S restricted to the prefix slice: sum_j c[j] * y_j >= rhs
// over the remaining coordinates. c may be all zero (the constraint is
// constant on the slice); such rows still count toward depth.
struct SliceGroup {
  RatVector c;
  Rational rhs;
  long multiplicity;
};

// Equation row used for vertex enumeration: <c, y> = rhs + rhs_inf * M.
struct SliceRow {
  RatVector c;
  Rational rhs;
  Rational rhs_inf;
};

struct SlicePoint {
  std::vector<ExtRat> y;
  long depth;
};

std::vector<SliceGroup> project_groups(const ConstraintSet& S, const RatVector& prefix) {
  const int d = S.d();
  const int p = static_cast<int>(prefix.size());
  const int dp = d - p;
  std::map<std::pair<RatVector, Rational>, long> merged;
  for (const auto& [cst, mult] : S.distinct()) {
    RatVector c(static_cast<std::size_t>(dp));
    Rational rhs(cst.w);
    for (int j = 0; j < p; ++j) rhs -= Rational(cst.a[static_cast<std::size_t>(j)]) * prefix[static_cast<std::size_t>(j)];
    for (int j = 0; j < dp; ++j) c[static_cast<std::size_t>(j)] = Rational(cst.a[static_cast<std::size_t>(p + j)]);
    merged[{c, rhs}] += mult;
  }
  std::vector<SliceGroup> out;
  out.reserve(merged.size());
  for (const auto& [key, mult] : merged) out.push_back({key.first, key.second, mult});
  return out;
}

long slice_depth(const std::vector<SliceGroup>& groups, const std::vector<ExtRat>& y) {
  long dep = 0;
  for (const auto& g : groups) {
    ExtRat acc{Rational(0), Rational(0)};
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      if (g.c[j].is_zero()) continue;
      acc.fin += g.c[j] * y[j].fin;
      acc.inf += g.c[j] * y[j].inf;
    }
    if (ext_cmp_rat(acc, g.rhs) >= 0) dep += g.multiplicity;
  }
  return dep;
}

// Distinct constraint hyperplanes on the slice (zero-normal rows dropped,
// geometry deduplicated by scaling to a leading coefficient of one) plus the
// 2 * dp clipping walls y_j = +-M.
std::vector<SliceRow> equation_rows(const std::vector<SliceGroup>& groups, int dp) {
  std::set<std::pair<RatVector, Rational>> seen;
  std::vector<SliceRow> rows;
  for (const auto& g : groups) {
    std::size_t lead = g.c.size();
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      if (!g.c[j].is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead == g.c.size()) continue;
    RatVector c(g.c.size());
    const Rational& pivot = g.c[lead];
    for (std::size_t j = 0; j < g.c.size(); ++j) c[j] = g.c[j] / pivot;
    Rational rhs = g.rhs / pivot;
    if (seen.insert({c, rhs}).second) rows.push_back({std::move(c), std::move(rhs), Rational(0)});
  }
  for (int j = 0; j < dp; ++j) {
    RatVector c(static_cast<std::size_t>(dp), Rational(0));
    c[static_cast<std::size_t>(j)] = Rational(1);
    rows.push_back({c, Rational(0), Rational(1)});
    rows.push_back({std::move(c), Rational(0), Rational(-1)});
  }
  return rows;
}

void combo_rec(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t idx = start; idx + (k - cur.size()) <= n; ++idx) {
    cur.push_back(idx);
    combo_rec(n, k, idx + 1, cur, out);
    cur.pop_back();
  }
}

// Every point where dp independent rows (constraint hyperplanes or walls)
// meet, with its slice depth. Results are ordered by subset index regardless
// of the execution policy.
std::vector<SlicePoint> slice_vertices(const std::vector<SliceGroup>& groups, int dp,
                                       ExecPolicy policy) {
  const auto rows = equation_rows(groups, dp);
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur;
  combo_rec(rows.size(), static_cast<std::size_t>(dp), 0, cur, tuples);

  std::vector<std::optional<SlicePoint>> results(tuples.size());
  const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(dynamic, 32) if (par)
  for (long idx = 0; idx < static_cast<long>(tuples.size()); ++idx) {
    const auto& tup = tuples[static_cast<std::size_t>(idx)];
    RatMatrix A(static_cast<std::size_t>(dp), static_cast<std::size_t>(dp));
    RatVector rhs_fin(static_cast<std::size_t>(dp));
    RatVector rhs_inf(static_cast<std::size_t>(dp));
    for (std::size_t r = 0; r < tup.size(); ++r) {
      const SliceRow& row = rows[tup[r]];
      for (std::size_t j = 0; j < row.c.size(); ++j) A.at(r, j) = row.c[j];
      rhs_fin[r] = row.rhs;
      rhs_inf[r] = row.rhs_inf;
    }
    const auto sols = solve_linear_system_multi(A, {rhs_fin, rhs_inf});
    if (!sols) continue;
    SlicePoint pt;
    pt.y.resize(static_cast<std::size_t>(dp));
    for (std::size_t j = 0; j < pt.y.size(); ++j) pt.y[j] = ExtRat{(*sols)[0][j], (*sols)[1][j]};
    pt.depth = slice_depth(groups, pt.y);
    results[static_cast<std::size_t>(idx)] = std::move(pt);
  }

  std::vector<SlicePoint> pts;
  pts.reserve(results.size());
  for (auto& r : results) {
    if (r) pts.push_back(std::move(*r));
  }
  return pts;
}

void check_slice_args(const ConstraintSet& S, const RatVector& prefix) {
  if (static_cast<int>(prefix.size()) >= S.d())
    throw std::invalid_argument("prefix must leave at least one free coordinate");
}

}  // namespace

DomainSpec domain_spec(int d, const Int& X, int i, const Int& t_prev) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (i < 1 || i > d) throw std::invalid_argument("coordinate index out of range");
  if (X < 1) throw std::invalid_argument("coefficient bound must be positive");
  if (t_prev < 1) throw std::invalid_argument("witness denominator must be positive");
  DomainSpec spec;
  spec.d = d;
  spec.X = X;
  spec.i = i;
  spec.t_prev = t_prev;
  const Int base = Int(d) * factorial(static_cast<unsigned>(d));
  spec.num_bound = ipow(base, static_cast<unsigned>(i)) * ipow(X, static_cast<unsigned>(d * i));
  spec.den_step = factorial(static_cast<unsigned>(d)) * ipow(X, static_cast<unsigned>(d));
  return spec;
}

std::vector<DomainElement> enumerate_domain(const DomainSpec& spec, long cap) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  const Int pair_count = (Int(2) * spec.num_bound + 1) * (Int(2) * spec.den_step);
  if (pair_count > cap) {
    throw DomainTooLarge("domain for coordinate " + std::to_string(spec.i) + " has " +
                         pair_count.get_str() + " candidate pairs, cap is " + std::to_string(cap));
  }
  const long N = spec.num_bound.get_si();
  const long D = spec.den_step.get_si();
  // Denominators are visited in increasing order, so the first witness seen
  // for a value is the minimal-denominator one.
  std::map<Rational, std::pair<Int, Int>> best;
  for (long j = 1; j <= D; ++j) {
    const Int t = Int(j) * spec.t_prev;
    for (long s = -N; s <= N; ++s) {
      Rational v{Int(s), t};
      if (best.find(v) == best.end()) best.emplace(std::move(v), std::make_pair(Int(s), t));
    }
  }
  std::vector<DomainElement> out;
  out.reserve(best.size());
  for (const auto& [value, wit] : best) out.push_back({value, wit.first, wit.second});
  return out;
}

RatVector Prefix::values() const {
  RatVector v;
  v.reserve(chain.size());
  for (const auto& e : chain) v.push_back(e.value);
  return v;
}

Int Prefix::t_last() const { return chain.empty() ? Int(1) : chain.back().t; }

DecreasingPointList::DecreasingPointList(std::vector<ListEntry> entries, Rational bound)
    : entries_(std::move(entries)), bound_(std::move(bound)) {
  if (bound_.sign() < 0) throw std::invalid_argument("sentinel bound must be nonnegative");
  if (entries_.empty()) throw std::invalid_argument("list is missing its sentinels");
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
    if (entries_[idx].k < 0) throw std::invalid_argument("list values must be nonnegative");
    if (idx + 1 < entries_.size() && !(entries_[idx].x < entries_[idx + 1].x))
      throw std::invalid_argument("list coordinates must be strictly increasing");
  }
  if (entries_.front().x != -bound_ || entries_.back().x != bound_)
    throw std::invalid_argument("sentinels must sit at the domain boundary");
}

long DecreasingPointList::global_max() const {
  long best = 0;
  for (const auto& e : entries_) best = std::max(best, e.k);
  return best;
}

long DecreasingPointList::eval(const Rational& x) const {
  if (x < -bound_ || bound_ < x) throw std::out_of_range("probe outside the sentinel range");
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                                   [](const ListEntry& e, const Rational& v) { return e.x < v; });
  if (it != entries_.end() && it->x == x) return it->k;
  return std::min(std::prev(it)->k, it->k);
}

DecreasingPointList build_decreasing_list(const ConstraintSet& S, const RatVector& prefix,
                                          const Rational& sentinel_bound, ExecPolicy policy) {
  check_slice_args(S, prefix);
  if (sentinel_bound.sign() < 0) throw std::invalid_argument("sentinel bound must be nonnegative");
  const int dp = S.d() - static_cast<int>(prefix.size());
  const auto groups = project_groups(S, prefix);
  const auto pts = slice_vertices(groups, dp, policy);
  const long m = S.size();

  // Raw entries: finite first-coordinate vertices inside the sentinel range,
  // keeping the deepest value per coordinate.
  std::map<Rational, long> best;
  for (const auto& pt : pts) {
    if (!pt.y[0].finite()) continue;
    const Rational& x = pt.y[0].fin;
    if (x < -sentinel_bound || sentinel_bound < x) continue;
    auto it = best.find(x);
    if (it == best.end())
      best.emplace(x, pt.depth);
    else if (it->second < pt.depth)
      it->second = pt.depth;
  }

  // Sentinel values: sweep levels from deep to shallow, growing the vertex
  // pool, and record the first level whose coordinate interval contains the
  // boundary probe. That is exactly Q at +-bound.
  std::vector<std::size_t> order(pts.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) order[idx] = idx;
  std::stable_sort(order.begin(), order.end(),
                   [&pts](std::size_t a, std::size_t b) { return pts[a].depth > pts[b].depth; });
  const ExtRat lo_probe{-sentinel_bound, Rational(0)};
  const ExtRat hi_probe{sentinel_bound, Rational(0)};
  long lo_val = 0;
  long hi_val = 0;
  ExtRat cur_min;
  ExtRat cur_max;
  bool any = false;
  std::size_t ptr = 0;
  for (long k = m; k >= 1 && (lo_val == 0 || hi_val == 0); --k) {
    while (ptr < order.size() && pts[order[ptr]].depth >= k) {
      const ExtRat& x = pts[order[ptr]].y[0];
      if (!any) {
        cur_min = x;
        cur_max = x;
        any = true;
      } else {
        if (ext_less(x, cur_min)) cur_min = x;
        if (ext_less(cur_max, x)) cur_max = x;
      }
      ++ptr;
    }
    if (!any) continue;
    if (lo_val == 0 && !ext_less(lo_probe, cur_min) && !ext_less(cur_max, lo_probe)) lo_val = k;
    if (hi_val == 0 && !ext_less(hi_probe, cur_min) && !ext_less(cur_max, hi_probe)) hi_val = k;
  }
  const auto merge_max = [&best](const Rational& x, long k) {
    auto it = best.find(x);
    if (it == best.end())
      best.emplace(x, k);
    else if (it->second < k)
      it->second = k;
  };
  merge_max(-sentinel_bound, lo_val);
  merge_max(sentinel_bound, hi_val);

  // Raw vertex depths undershoot Q wherever a deeper interval straddles the
  // coordinate; the quasi-concave envelope min(prefix max, suffix max)
  // restores the exact value.
  std::vector<ListEntry> entries;
  entries.reserve(best.size());
  for (const auto& [x, k] : best) entries.push_back({x, k});
  std::vector<long> pre(entries.size());
  std::vector<long> suf(entries.size());
  long run = 0;
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    run = std::max(run, entries[idx].k);
    pre[idx] = run;
  }
  run = 0;
  for (std::size_t idx = entries.size(); idx-- > 0;) {
    run = std::max(run, entries[idx].k);
    suf[idx] = run;
  }
  for (std::size_t idx = 0; idx < entries.size(); ++idx)
    entries[idx].k = std::min(pre[idx], suf[idx]);
  return DecreasingPointList(std::move(entries), sentinel_bound);
}

long q_eval(const DecreasingPointList& L, const Rational& x) { return L.eval(x); }

long q_interval_min(const DecreasingPointList& L, const std::vector<DomainElement>& domain,
                    int j) {
  if (j < 0 || j > 61) throw std::invalid_argument("window exponent out of range");
  const long width = 1L << j;
  const long n = static_cast<long>(domain.size());
  if (width > n) throw std::invalid_argument("window does not fit inside the domain");
  long best = -1;
  for (long a = 0; a + width <= n; ++a) {
    const long left = L.eval(domain[static_cast<std::size_t>(a)].value);
    const long right = L.eval(domain[static_cast<std::size_t>(a + width - 1)].value);
    best = std::max(best, std::min(left, right));
  }
  return best;
}

long q_definitional(const ConstraintSet& S, const RatVector& prefix, const Rational& x) {
  check_slice_args(S, prefix);
  const int dp = S.d() - static_cast<int>(prefix.size());
  const auto groups = project_groups(S, prefix);
  const auto pts = slice_vertices(groups, dp, ExecPolicy::Serial);
  for (long k = S.size(); k >= 1; --k) {
    bool any = false;
    ExtRat mn;
    ExtRat mx;
    for (const auto& pt : pts) {
      if (pt.depth < k) continue;
      if (!any) {
        mn = pt.y[0];
        mx = pt.y[0];
        any = true;
      } else {
        if (ext_less(pt.y[0], mn)) mn = pt.y[0];
        if (ext_less(mx, pt.y[0])) mx = pt.y[0];
      }
    }
    if (any && ext_cmp_rat(mn, x) <= 0 && ext_cmp_rat(mx, x) >= 0) return k;
  }
  return 0;
}

DecreasingPointList build_decreasing_list(const ConstraintSet& S, const Prefix& prefix,
                                          ExecPolicy policy) {
  const int i = static_cast<int>(prefix.chain.size()) + 1;
  const DomainSpec spec = domain_spec(S.d(), S.X(), i, prefix.t_last());
  return build_decreasing_list(S, prefix.values(), spec.max_value(), policy);
}

long q_definitional(const ConstraintSet& S, const Prefix& prefix, const Rational& x) {
  return q_definitional(S, prefix.values(), x);
}

long q_global_max(const ConstraintSet& S, const RatVector& prefix, ExecPolicy policy) {
  check_slice_args(S, prefix);
  const int dp = S.d() - static_cast<int>(prefix.size());
  const auto pts = slice_vertices(project_groups(S, prefix), dp, policy);
  long best = 0;
  for (const auto& pt : pts) best = std::max(best, pt.depth);
  return best;
}

}  // namespace dplf
