#pragma once

#include <string>
#include <vector>

#include "cyclab/error.hpp"
#include "cyclab/interval.hpp"
#include "cyclab/lambda.hpp"
#include "cyclab/rational.hpp"

namespace cyclab {

/* A rational point of the standard n-simplex: weights u_0..u_n, each >= 0,
   summing to 1. */
struct BarycentricPoint {
  std::vector<Rational> weights;

  int rank() const { return static_cast<int>(weights.size()) - 1; }
  bool operator==(const BarycentricPoint&) const = default;
};

inline BarycentricPoint make_barycentric(std::vector<Rational> weights) {
  if (weights.empty())
    throw InvalidConstructionError("barycentric point needs at least one weight");
  Rational sum(0);
  for (const Rational& w : weights) {
    if (w < 0) throw InvalidConstructionError("barycentric weight is negative");
    sum += w;
  }
  if (sum != 1) throw InvalidConstructionError("barycentric weights must sum to 1");
  return BarycentricPoint{std::move(weights)};
}

inline std::string barycentric_string(const BarycentricPoint& u) {
  std::string out = "[";
  for (std::size_t i = 0; i < u.weights.size(); ++i) {
    if (i) out += " ";
    out += format_rational(u.weights[i]);
  }
  return out + "]";
}

/* Identifies the n-simplex with rank-n monotone sequences in [0, 1] by
   partial sums: position a holds u_0 + ... + u_{a-1}. */
inline MonotoneSeq<RationalUnit> simplex_encode(const BarycentricPoint& u) {
  const int n = u.rank();
  std::vector<Rational> v(n + 2);
  v[0] = Rational(0);
  for (int a = 1; a <= n + 1; ++a) v[a] = v[a - 1] + u.weights[a - 1];
  return make_seq(RationalUnit{}, std::move(v));
}

inline BarycentricPoint simplex_decode(const MonotoneSeq<RationalUnit>& s) {
  const int n = s.rank();
  std::vector<Rational> w(n + 1);
  for (int a = 0; a <= n; ++a) w[a] = s.values[a + 1] - s.values[a];
  return BarycentricPoint{std::move(w)};
}

/* Covariant affine action of a vertex map on barycentric points: each weight
   is carried onto the image vertex. */
inline BarycentricPoint fin_affine_act(const FinMap& f, const BarycentricPoint& u) {
  if (f.source_size() != static_cast<int>(u.weights.size()))
    throw RankMismatchError("affine action: map source size " +
                            std::to_string(f.source_size()) + " vs point rank " +
                            std::to_string(u.rank()));
  std::vector<Rational> w(f.target_size(), Rational(0));
  for (int j = 0; j < f.source_size(); ++j) w[f(j)] += u.weights[j];
  return BarycentricPoint{std::move(w)};
}

inline BarycentricPoint fin_affine_act(const LambdaMap& f, const BarycentricPoint& u) {
  return fin_affine_act(mu(f), u);
}

}  // namespace cyclab
