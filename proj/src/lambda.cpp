#include "cyclab/lambda.hpp"

#include <algorithm>

#include "cyclab/rational.hpp"

namespace cyclab {

FinMap::FinMap(int source_size, int target_size, std::vector<int> values)
    : source_size_(source_size), target_size_(target_size), values_(std::move(values)) {
  if (source_size_ < 1 || target_size_ < 1)
    throw InvalidConstructionError("FinMap: sizes must be positive");
  if (values_.size() != static_cast<std::size_t>(source_size_))
    throw InvalidConstructionError("FinMap: expected " + std::to_string(source_size_) +
                                   " values, got " + std::to_string(values_.size()));
  for (int v : values_)
    if (v < 0 || v >= target_size_)
      throw InvalidConstructionError("FinMap: value " + std::to_string(v) +
                                     " out of range");
}

FinMap FinMap::identity(int size) {
  std::vector<int> v(size);
  for (int i = 0; i < size; ++i) v[i] = i;
  return FinMap(size, size, std::move(v));
}

int FinMap::operator()(int x) const {
  if (x < 0 || x >= source_size_)
    throw RankMismatchError("FinMap: argument out of range");
  return values_[x];
}

std::string FinMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(values_[i]);
  }
  return s + "]: " + std::to_string(source_size_) + " -> " + std::to_string(target_size_);
}

FinMap fin_compose(const FinMap& f, const FinMap& g) {
  if (f.target_size() != g.source_size())
    throw RankMismatchError("fin_compose: " + f.to_string() + " then " + g.to_string());
  std::vector<int> v(f.source_size());
  for (int i = 0; i < f.source_size(); ++i) v[i] = g(f(i));
  return FinMap(f.source_size(), g.target_size(), std::move(v));
}

LambdaMap::LambdaMap(int source_rank, int target_rank, std::vector<long long> period_values)
    : source_rank_(source_rank), target_rank_(target_rank), values_(std::move(period_values)) {
  if (source_rank_ < 0 || target_rank_ < 0)
    throw InvalidConstructionError("LambdaMap: negative rank");
  if (values_.size() != static_cast<std::size_t>(source_rank_) + 1)
    throw InvalidConstructionError("LambdaMap: expected " +
                                   std::to_string(source_rank_ + 1) +
                                   " values, got " + std::to_string(values_.size()));
  const long long b = target_rank_ + 1;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[i - 1])
      throw InvalidConstructionError("LambdaMap: period values not monotone at position " +
                                     std::to_string(i));
  if (values_.back() > values_.front() + b)
    throw InvalidConstructionError("LambdaMap: period rise exceeds " + std::to_string(b));
  /* Canonical representative: f(0) in [0, m]. */
  const long long shift = div_floor(values_.front(), b) * b;
  if (shift != 0)
    for (auto& v : values_) v -= shift;
}

LambdaMap LambdaMap::identity(int n) {
  std::vector<long long> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return LambdaMap(n, n, std::move(v));
}

LambdaMap LambdaMap::tau(int n) { return tau_power(n, 1); }

LambdaMap LambdaMap::tau_power(int n, long long a) {
  std::vector<long long> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i - a;
  return LambdaMap(n, n, std::move(v));
}

long long LambdaMap::operator()(long long x) const {
  const long long period = source_rank_ + 1;
  const long long q = div_floor(x, period);
  return values_[x - q * period] + q * (target_rank_ + 1);
}

std::string LambdaMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(values_[i]);
  }
  return s + "]: [" + std::to_string(source_rank_) + "] -> [" +
         std::to_string(target_rank_) + "] cyclic";
}

LambdaMap lambda_compose(const LambdaMap& f, const LambdaMap& g) {
  if (f.target_rank() != g.source_rank())
    throw RankMismatchError("lambda_compose: " + f.to_string() + " then " + g.to_string());
  std::vector<long long> v(f.source_rank() + 1);
  for (int i = 0; i <= f.source_rank(); ++i) v[i] = g(f(i));
  return LambdaMap(f.source_rank(), g.target_rank(), std::move(v));
}

FinMap mu(const LambdaMap& f) {
  const int b = f.target_rank() + 1;
  std::vector<int> v(f.source_rank() + 1);
  for (int i = 0; i <= f.source_rank(); ++i)
    v[i] = static_cast<int>(mod_floor(f.values()[i], b));
  return FinMap(f.source_rank() + 1, b, std::move(v));
}

LambdaMap embed_j(const DeltaMap& f) {
  std::vector<long long> v(f.values().begin(), f.values().end());
  return LambdaMap(f.source_rank(), f.target_rank(), std::move(v));
}

bool in_delta_image(const LambdaMap& f) {
  return f.values().back() <= f.target_rank();
}

LambdaMap interval_underline(const IntervalMap& phi) {
  std::vector<long long> v(phi.values().begin(), phi.values().end() - 1);
  return LambdaMap(phi.source_rank(), phi.target_rank(), std::move(v));
}

DeltaLambdaDecomposition delta_lambda_decompose(const LambdaMap& f) {
  const int n = f.source_rank(), m = f.target_rank();
  /* Smallest x with f(x) >= 0; lies in (-(n+1), 0] for canonical f. */
  long long x0 = 0;
  while (f(x0 - 1) >= 0) --x0;
  const int a = static_cast<int>(mod_floor(x0, n + 1));
  const long long k = (a - x0) / (n + 1);
  std::vector<int> h(n + 1);
  for (int y = 0; y <= n; ++y)
    h[y] = static_cast<int>(f(y + a) - k * (m + 1));
  return {DeltaMap(n, m, std::move(h)), a};
}

bool is_lambda_automorphism(const LambdaMap& f) {
  return f.source_rank() == f.target_rank() && delta_lambda_decompose(f).h.is_identity();
}

CrossedDecomposition crossed_decompose(const LambdaMap& gamma, const DeltaMap& phi) {
  if (!is_lambda_automorphism(gamma))
    throw InvalidConstructionError("crossed_decompose: gamma is not an automorphism: " +
                                   gamma.to_string());
  if (phi.target_rank() != gamma.source_rank())
    throw RankMismatchError("crossed_decompose: phi does not land in gamma's object");
  const auto dec = delta_lambda_decompose(lambda_compose(embed_j(phi), gamma));
  return {dec.h, LambdaMap::tau_power(phi.source_rank(), dec.rotation), dec.rotation};
}

LambdaMap lambda_transpose(const LambdaMap& f) {
  const int n = f.source_rank(), m = f.target_rank();
  std::vector<long long> v(m + 1);
  for (int y = 0; y <= m; ++y) {
    /* Binary search for min{ x : f(x) >= y }; the bracket is safe because f
       gains m+1 per period. */
    long long lo = -3LL * (n + 1), hi = 3LL * (n + 1);
    while (lo < hi) {
      const long long mid = div_floor(lo + hi, 2);
      if (f(mid) >= y)
        hi = mid;
      else
        lo = mid + 1;
    }
    v[y] = lo;
  }
  return LambdaMap(m, n, std::move(v));
}

std::vector<LambdaMap> enumerate_lambda_hom(int n, int m) {
  std::vector<LambdaMap> out;
  std::vector<long long> v(n + 1);
  /* Monotone periods with v_0 in [0, m] and v_n <= v_0 + m + 1, extended
     position by position in lexicographic order. */
  const auto extend = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(LambdaMap(n, m, v));
      return;
    }
    for (long long val = v[i - 1]; val <= v[0] + m + 1; ++val) {
      v[i] = val;
      self(self, i + 1);
    }
  };
  for (long long v0 = 0; v0 <= m; ++v0) {
    v[0] = v0;
    extend(extend, 1);
  }
  return out;
}

AuditReport lambda_presentation_audit(int n_max) {
  AuditReport rep;
  rep.subject = "cyclic presentation relations, n <= " + std::to_string(n_max);
  for (int n = 0; n <= n_max; ++n) {
    LambdaMap power = LambdaMap::identity(n);
    for (int k = 0; k <= n; ++k) power = lambda_compose(power, LambdaMap::tau(n));
    rep.check(power == LambdaMap::identity(n), "tau order", "n=" + std::to_string(n));

    /* sigma_0 ; tau_n = tau_{n+1}^2 ; sigma_n */
    {
      const LambdaMap lhs =
          lambda_compose(embed_j(DeltaMap::sigma(0, n)), LambdaMap::tau(n));
      const LambdaMap rhs = lambda_compose(LambdaMap::tau_power(n + 1, 2),
                                           embed_j(DeltaMap::sigma(n, n)));
      rep.check(lhs == rhs, "tau-sigma_0", "n=" + std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) {
      const LambdaMap lhs =
          lambda_compose(embed_j(DeltaMap::sigma(j, n)), LambdaMap::tau(n));
      const LambdaMap rhs = lambda_compose(LambdaMap::tau(n + 1),
                                           embed_j(DeltaMap::sigma(j - 1, n)));
      rep.check(lhs == rhs, "tau-sigma",
                "n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
    if (n < 1) continue;
    /* delta_0 ; tau_n = delta_n */
    {
      const LambdaMap lhs =
          lambda_compose(embed_j(DeltaMap::delta(0, n)), LambdaMap::tau(n));
      rep.check(lhs == embed_j(DeltaMap::delta(n, n)), "tau-delta_0",
                "n=" + std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) {
      const LambdaMap lhs =
          lambda_compose(embed_j(DeltaMap::delta(j, n)), LambdaMap::tau(n));
      const LambdaMap rhs = lambda_compose(LambdaMap::tau(n - 1),
                                           embed_j(DeltaMap::delta(j - 1, n)));
      rep.check(lhs == rhs, "tau-delta",
                "n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
  }
  return rep;
}

}  // namespace cyclab
