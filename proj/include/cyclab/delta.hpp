#pragma once

#include <string>
#include <vector>

#include "cyclab/audit.hpp"
#include "cyclab/error.hpp"

namespace cyclab {

/* Composition convention used throughout the library:
   compose(f, g) applies f first, then g.  Generator words in comments are
   written in application order (leftmost acts first). */

enum class GeneratorKind { Sigma, Delta };

/* Monotone map [n] -> [m] between finite ordinals [n] = {0, ..., n},
   stored by its value list. */
class DeltaMap {
 public:
  DeltaMap(int source_rank, int target_rank, std::vector<int> values);

  static DeltaMap identity(int n);
  /* sigma(j, n): [n+1] -> [n], sends both j and j+1 to j; 0 <= j <= n. */
  static DeltaMap sigma(int j, int n);
  /* delta(j, n): [n-1] -> [n], skips the value j; 0 <= j <= n, n >= 1. */
  static DeltaMap delta(int j, int n);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int x) const;

  bool is_identity() const;
  bool operator==(const DeltaMap&) const = default;

  std::string to_string() const;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<int> values_;
};

DeltaMap generator(GeneratorKind kind, int j, int n);

DeltaMap delta_compose(const DeltaMap& f, const DeltaMap& g);

/* Epi-mono normal form of f, as generator indices in application order:
   first the collapses sigma_{s}, s running over the positions with
   f(s) = f(s+1) in strictly decreasing order, then the coface insertions
   delta_{v}, v running over the values missed by f in strictly increasing
   order.  Recomposing in this order reproduces f. */
struct EpiMonoFactorization {
  std::vector<int> sigma_indices;
  std::vector<int> delta_indices;
};

EpiMonoFactorization epi_mono_factor(const DeltaMap& f);

/* Rebuilds the map from its factorization; inverse of epi_mono_factor. */
DeltaMap recompose(const EpiMonoFactorization& fac, int source_rank);

/* Endpoint-preserving monotone map n* -> m*, where n* = {0, ..., n+1};
   values fix 0 and send n+1 to m+1. */
class IntervalMap {
 public:
  IntervalMap(int source_rank, int target_rank, std::vector<int> values);

  static IntervalMap identity(int n);
  /* s_generator(j, n): n* -> (n+1)*, skips j+1; 0 <= j <= n. */
  static IntervalMap s_generator(int j, int n);
  /* d_generator(j, n): n* -> (n-1)*, merges j and j+1; 0 <= j <= n - 1? see impl. */
  static IntervalMap d_generator(int j, int n);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int x) const;

  bool operator==(const IntervalMap&) const = default;

  std::string to_string() const;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<int> values_;
};

IntervalMap interval_compose(const IntervalMap& f, const IntervalMap& g);

/* Interval dual of f: [n] -> [m]; the map g: m* -> n* with
   g(y) = min{ x : f(x) >= y } on {1, ..., m}, g(0) = 0, g(m+1) = n+1.
   Contravariant: delta_dual(compose(f, g)) = compose(delta_dual(g), delta_dual(f)). */
IntervalMap delta_dual(const DeltaMap& f);

/* Inverse bijection: recovers f from its dual via f(x) = max{ y : g(y) <= x }. */
DeltaMap delta_dual_inverse(const IntervalMap& g);

/* All monotone maps [n] -> [m] in lexicographic value order. */
std::vector<DeltaMap> enumerate_delta_hom(int n, int m);

/* All endpoint-preserving monotone maps n* -> m* in lexicographic order. */
std::vector<IntervalMap> enumerate_interval_hom(int n, int m);

/* Exhaustive check of the generator relations, for every instance whose
   statement parameter n is at most n_max:
     sigma_i ; sigma_j            = sigma_{j+1} ; sigma_i          (i <= j)
     delta_i ; delta_j            = delta_{j-1} ; delta_i          (i < j)
     delta_i ; sigma_j            = sigma_{j-1} ; delta_i          (i < j)
                                  = id                             (i = j, j+1)
                                  = sigma_j ; delta_{i-1}          (i > j+1)
   written in application order. */
AuditReport delta_relation_audit(int n_max);

}  // namespace cyclab
