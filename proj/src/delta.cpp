#include "cyclab/delta.hpp"

#include <algorithm>

namespace cyclab {

namespace {

std::string value_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

void require_monotone_range(const std::vector<int>& v, int lo, int hi,
                            const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo || v[i] > hi)
      throw InvalidConstructionError(std::string(what) + ": value " +
                                     std::to_string(v[i]) + " at position " +
                                     std::to_string(i) + " out of range");
    if (i > 0 && v[i] < v[i - 1])
      throw InvalidConstructionError(std::string(what) +
                                     ": values not monotone at position " +
                                     std::to_string(i));
  }
}

}  // namespace

DeltaMap::DeltaMap(int source_rank, int target_rank, std::vector<int> values)
    : source_rank_(source_rank), target_rank_(target_rank), values_(std::move(values)) {
  if (source_rank_ < 0 || target_rank_ < 0)
    throw InvalidConstructionError("DeltaMap: negative rank");
  if (values_.size() != static_cast<std::size_t>(source_rank_) + 1)
    throw InvalidConstructionError("DeltaMap: expected " +
                                   std::to_string(source_rank_ + 1) +
                                   " values, got " + std::to_string(values_.size()));
  require_monotone_range(values_, 0, target_rank_, "DeltaMap");
}

DeltaMap DeltaMap::identity(int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return DeltaMap(n, n, std::move(v));
}

DeltaMap DeltaMap::sigma(int j, int n) {
  if (n < 0 || j < 0 || j > n)
    throw InvalidConstructionError("sigma(" + std::to_string(j) + ", " +
                                   std::to_string(n) + "): index out of range");
  std::vector<int> v(n + 2);
  for (int i = 0; i <= n + 1; ++i) v[i] = i <= j ? i : i - 1;
  return DeltaMap(n + 1, n, std::move(v));
}

DeltaMap DeltaMap::delta(int j, int n) {
  if (n < 1 || j < 0 || j > n)
    throw InvalidConstructionError("delta(" + std::to_string(j) + ", " +
                                   std::to_string(n) + "): index out of range");
  std::vector<int> v(n);
  for (int i = 0; i <= n - 1; ++i) v[i] = i < j ? i : i + 1;
  return DeltaMap(n - 1, n, std::move(v));
}

int DeltaMap::operator()(int x) const {
  if (x < 0 || x > source_rank_)
    throw RankMismatchError("DeltaMap: argument " + std::to_string(x) +
                            " outside [0, " + std::to_string(source_rank_) + "]");
  return values_[x];
}

bool DeltaMap::is_identity() const {
  if (source_rank_ != target_rank_) return false;
  for (int i = 0; i <= source_rank_; ++i)
    if (values_[i] != i) return false;
  return true;
}

std::string DeltaMap::to_string() const {
  return value_list(values_) + ": [" + std::to_string(source_rank_) + "] -> [" +
         std::to_string(target_rank_) + "]";
}

DeltaMap generator(GeneratorKind kind, int j, int n) {
  return kind == GeneratorKind::Sigma ? DeltaMap::sigma(j, n) : DeltaMap::delta(j, n);
}

DeltaMap delta_compose(const DeltaMap& f, const DeltaMap& g) {
  if (f.target_rank() != g.source_rank())
    throw RankMismatchError("delta_compose: " + f.to_string() + " then " +
                            g.to_string());
  std::vector<int> v(f.source_rank() + 1);
  for (int i = 0; i <= f.source_rank(); ++i) v[i] = g(f(i));
  return DeltaMap(f.source_rank(), g.target_rank(), std::move(v));
}

EpiMonoFactorization epi_mono_factor(const DeltaMap& f) {
  EpiMonoFactorization fac;
  for (int s = f.source_rank() - 1; s >= 0; --s)
    if (f(s) == f(s + 1)) fac.sigma_indices.push_back(s);
  for (int v = 0; v <= f.target_rank(); ++v) {
    if (!std::binary_search(f.values().begin(), f.values().end(), v))
      fac.delta_indices.push_back(v);
  }
  return fac;
}

DeltaMap recompose(const EpiMonoFactorization& fac, int source_rank) {
  DeltaMap cur = DeltaMap::identity(source_rank);
  for (int j : fac.sigma_indices)
    cur = delta_compose(cur, DeltaMap::sigma(j, cur.target_rank() - 1));
  for (int j : fac.delta_indices)
    cur = delta_compose(cur, DeltaMap::delta(j, cur.target_rank() + 1));
  return cur;
}

IntervalMap::IntervalMap(int source_rank, int target_rank, std::vector<int> values)
    : source_rank_(source_rank), target_rank_(target_rank), values_(std::move(values)) {
  if (source_rank_ < 0 || target_rank_ < 0)
    throw InvalidConstructionError("IntervalMap: negative rank");
  if (values_.size() != static_cast<std::size_t>(source_rank_) + 2)
    throw InvalidConstructionError("IntervalMap: expected " +
                                   std::to_string(source_rank_ + 2) +
                                   " values, got " + std::to_string(values_.size()));
  require_monotone_range(values_, 0, target_rank_ + 1, "IntervalMap");
  if (values_.front() != 0 || values_.back() != target_rank_ + 1)
    throw InvalidConstructionError("IntervalMap: endpoints not preserved in " +
                                   value_list(values_));
}

IntervalMap IntervalMap::identity(int n) {
  std::vector<int> v(n + 2);
  for (int i = 0; i <= n + 1; ++i) v[i] = i;
  return IntervalMap(n, n, std::move(v));
}

IntervalMap IntervalMap::s_generator(int j, int n) {
  if (n < 0 || j < 0 || j > n)
    throw InvalidConstructionError("s_generator: index out of range");
  std::vector<int> v(n + 2);
  for (int i = 0; i <= n + 1; ++i) v[i] = i <= j ? i : i + 1;
  return IntervalMap(n, n + 1, std::move(v));
}

IntervalMap IntervalMap::d_generator(int j, int n) {
  if (n < 1 || j < 0 || j > n)
    throw InvalidConstructionError("d_generator: index out of range");
  std::vector<int> v(n + 2);
  for (int i = 0; i <= n + 1; ++i) v[i] = i <= j ? i : i - 1;
  return IntervalMap(n, n - 1, std::move(v));
}

int IntervalMap::operator()(int x) const {
  if (x < 0 || x > source_rank_ + 1)
    throw RankMismatchError("IntervalMap: argument " + std::to_string(x) +
                            " outside [0, " + std::to_string(source_rank_ + 1) + "]");
  return values_[x];
}

std::string IntervalMap::to_string() const {
  return value_list(values_) + ": " + std::to_string(source_rank_) + "* -> " +
         std::to_string(target_rank_) + "*";
}

IntervalMap interval_compose(const IntervalMap& f, const IntervalMap& g) {
  if (f.target_rank() != g.source_rank())
    throw RankMismatchError("interval_compose: " + f.to_string() + " then " +
                            g.to_string());
  std::vector<int> v(f.source_rank() + 2);
  for (int i = 0; i <= f.source_rank() + 1; ++i) v[i] = g(f(i));
  return IntervalMap(f.source_rank(), g.target_rank(), std::move(v));
}

IntervalMap delta_dual(const DeltaMap& f) {
  const int n = f.source_rank(), m = f.target_rank();
  std::vector<int> v(m + 2);
  v[0] = 0;
  v[m + 1] = n + 1;
  for (int y = 1; y <= m; ++y) {
    int x = 0;
    while (x <= n && f(x) < y) ++x;
    v[y] = x;  /* n + 1 when no x satisfies f(x) >= y */
  }
  return IntervalMap(m, n, std::move(v));
}

DeltaMap delta_dual_inverse(const IntervalMap& g) {
  const int m = g.source_rank(), n = g.target_rank();
  std::vector<int> v(n + 1);
  for (int x = 0; x <= n; ++x) {
    int y = m;
    while (y > 0 && g(y) > x) --y;
    v[x] = y;  /* g(0) = 0 <= x, so y is well defined */
  }
  return DeltaMap(n, m, std::move(v));
}

std::vector<DeltaMap> enumerate_delta_hom(int n, int m) {
  std::vector<DeltaMap> out;
  std::vector<int> v(n + 1, 0);
  while (true) {
    out.push_back(DeltaMap(n, m, v));
    int i = n;
    while (i >= 0 && v[i] == m) --i;
    if (i < 0) break;
    const int next = v[i] + 1;
    for (int k = i; k <= n; ++k) v[k] = next;
  }
  return out;
}

std::vector<IntervalMap> enumerate_interval_hom(int n, int m) {
  std::vector<IntervalMap> out;
  std::vector<int> v(n + 2, 0);
  v[n + 1] = m + 1;
  while (true) {
    out.push_back(IntervalMap(n, m, v));
    int i = n;
    while (i >= 1 && v[i] == m + 1) --i;
    if (i < 1) break;
    const int next = v[i] + 1;
    for (int k = i; k <= n; ++k) v[k] = next;
  }
  return out;
}

AuditReport delta_relation_audit(int n_max) {
  AuditReport rep;
  rep.subject = "simplicial generator relations, n <= " + std::to_string(n_max);
  for (int n = 0; n <= n_max; ++n) {
    /* sigma_i ; sigma_j = sigma_{j+1} ; sigma_i for i <= j, both sides
       [n+2] -> [n]. */
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) {
        const DeltaMap lhs = delta_compose(DeltaMap::sigma(i, n + 1), DeltaMap::sigma(j, n));
        const DeltaMap rhs = delta_compose(DeltaMap::sigma(j + 1, n + 1), DeltaMap::sigma(i, n));
        rep.check(lhs == rhs, "sigma-sigma",
                  "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                      " j=" + std::to_string(j));
      }
    }
    if (n < 1) continue;
    /* delta_i ; delta_j = delta_{j-1} ; delta_i for i < j, both sides
       [n-1] -> [n+1]. */
    for (int j = 0; j <= n + 1; ++j) {
      for (int i = 0; i < j && i <= n; ++i) {
        const DeltaMap lhs = delta_compose(DeltaMap::delta(i, n), DeltaMap::delta(j, n + 1));
        const DeltaMap rhs = delta_compose(DeltaMap::delta(j - 1, n), DeltaMap::delta(i, n + 1));
        rep.check(lhs == rhs, "delta-delta",
                  "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                      " j=" + std::to_string(j));
      }
    }
    /* delta_i ; sigma_j, [n-1] -> [n-1], against the three-case table. */
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n - 1; ++j) {
        const DeltaMap lhs = delta_compose(DeltaMap::delta(i, n), DeltaMap::sigma(j, n - 1));
        const std::string where = "n=" + std::to_string(n) +
                                  " i=" + std::to_string(i) + " j=" + std::to_string(j);
        if (i < j) {
          const DeltaMap rhs =
              delta_compose(DeltaMap::sigma(j - 1, n - 2), DeltaMap::delta(i, n - 1));
          rep.check(lhs == rhs, "delta-sigma (i<j)", where);
        } else if (i == j || i == j + 1) {
          rep.check(lhs.is_identity(), "delta-sigma (identity)", where);
        } else {
          const DeltaMap rhs =
              delta_compose(DeltaMap::sigma(j, n - 2), DeltaMap::delta(i - 1, n - 1));
          rep.check(lhs == rhs, "delta-sigma (i>j+1)", where);
        }
      }
    }
  }
  return rep;
}

}  // namespace cyclab
