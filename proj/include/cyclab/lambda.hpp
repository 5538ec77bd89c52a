#pragma once

#include <string>
#include <vector>

#include "cyclab/audit.hpp"
#include "cyclab/delta.hpp"

namespace cyclab {

/* Arbitrary map {0,...,n} -> {0,...,m}, not necessarily monotone; the image
   of a cyclic morphism under the forgetful functor to finite sets. */
class FinMap {
 public:
  FinMap(int source_size, int target_size, std::vector<int> values);

  static FinMap identity(int size);

  int source_size() const { return source_size_; }
  int target_size() const { return target_size_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int x) const;

  bool operator==(const FinMap&) const = default;
  std::string to_string() const;

 private:
  int source_size_;
  int target_size_;
  std::vector<int> values_;
};

FinMap fin_compose(const FinMap& f, const FinMap& g);

/* Morphism [n] -> [m] of the cyclic category: the class of a non-decreasing
   map f: Z -> Z with f(x + n + 1) = f(x) + m + 1, two maps identified when
   they differ by an integer multiple of m + 1.  Stored by the canonical
   representative, the one with f(0) in [0, m]; the constructor shifts
   arbitrary representative values into canonical position. */
class LambdaMap {
 public:
  LambdaMap(int source_rank, int target_rank, std::vector<long long> period_values);

  static LambdaMap identity(int n);
  /* The cyclic generator x -> x - 1 on [n]. */
  static LambdaMap tau(int n);
  static LambdaMap tau_power(int n, long long a);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  /* Canonical period f(0), ..., f(n). */
  const std::vector<long long>& values() const { return values_; }
  /* Periodic extension, defined for every integer. */
  long long operator()(long long x) const;

  bool operator==(const LambdaMap&) const = default;
  std::string to_string() const;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<long long> values_;
};

LambdaMap lambda_compose(const LambdaMap& f, const LambdaMap& g);

/* Underlying map on finite sets: x -> f(x) mod (m+1). */
FinMap mu(const LambdaMap& f);

/* The faithful embedding of the monotone maps: same period values. */
LambdaMap embed_j(const DeltaMap& f);

/* Whether f lies in the image of embed_j, i.e. the canonical period stays
   inside [0, m]. */
bool in_delta_image(const LambdaMap& f);

/* The cyclic morphism associated to an endpoint-preserving interval map by
   restriction to one period; its canonical period is phi(0..n). */
LambdaMap interval_underline(const IntervalMap& phi);

/* Unique factorization f = (tau^rotation ; embed_j(h)) in application order,
   with h monotone and rotation in [0, n]. */
struct DeltaLambdaDecomposition {
  DeltaMap h;
  int rotation;
};

DeltaLambdaDecomposition delta_lambda_decompose(const LambdaMap& f);

bool is_lambda_automorphism(const LambdaMap& f);

/* For gamma an automorphism of [n] and phi: [m] -> [n] monotone, the unique
   pair with (phi ; gamma) = (phi^*(gamma) ; embed_j(gamma_*(phi))) in
   application order: pushforward = gamma_*(phi), pullback = phi^*(gamma),
   an automorphism of [m] equal to tau^pullback_rotation. */
struct CrossedDecomposition {
  DeltaMap pushforward;
  LambdaMap pullback;
  int pullback_rotation;
};

CrossedDecomposition crossed_decompose(const LambdaMap& gamma, const DeltaMap& phi);

/* Left adjoint-style transpose f^t(y) = min{ x : f(x) >= y }, an
   anti-homomorphism of the cyclic category. */
LambdaMap lambda_transpose(const LambdaMap& f);

/* All cyclic morphisms [n] -> [m], in lexicographic order of the canonical
   period values. */
std::vector<LambdaMap> enumerate_lambda_hom(int n, int m);

/* Exhaustive check, for statement parameter n <= n_max, of
     tau_n^{n+1} = id
     sigma_0 ; tau_n           = tau_{n+1}^2 ; sigma_n
     sigma_j ; tau_n           = tau_{n+1} ; sigma_{j-1}      (1 <= j <= n)
     delta_0 ; tau_n           = delta_n                      (n >= 1)
     delta_j ; tau_n           = tau_{n-1} ; delta_{j-1}      (1 <= j <= n)
   written in application order. */
AuditReport lambda_presentation_audit(int n_max);

}  // namespace cyclab
