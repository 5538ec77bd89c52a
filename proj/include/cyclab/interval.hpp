#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "cyclab/audit.hpp"
#include "cyclab/delta.hpp"
#include "cyclab/error.hpp"
#include "cyclab/rational.hpp"
#include "cyclab/rng.hpp"

namespace cyclab {

/* An interval model M is a totally ordered set with least and greatest
   elements, all operations exact:

     using Element = ...;                      regular value type
     Element bottom() const;
     Element top() const;
     int compare(a, b) const;                  <0, 0, >0
     Element sample(Sampler&) const;           any element, bounds included
     std::string element_string(a) const;
     bool same_model(const M&) const;          domain compatibility

   Sequences over different models of the same type must only mix when
   same_model holds. */

/* The finite interval {0, 1, ..., rank+1} inside the integers. */
struct FiniteInterval {
  int rank = 0;

  using Element = long long;
  Element bottom() const { return 0; }
  Element top() const { return rank + 1; }
  int compare(Element a, Element b) const { return a < b ? -1 : a > b ? 1 : 0; }
  Element sample(Sampler& rng) const { return rng.uniform(0, rank + 1); }
  std::string element_string(Element a) const { return std::to_string(a); }
  bool same_model(const FiniteInterval& o) const { return rank == o.rank; }
};

/* The rational points of [0, 1]. */
struct RationalUnit {
  using Element = Rational;
  Element bottom() const { return Rational(0); }
  Element top() const { return Rational(1); }
  int compare(const Element& a, const Element& b) const {
    return a < b ? -1 : a > b ? 1 : 0;
  }
  Element sample(Sampler& rng) const { return rng.unit_rational(32); }
  std::string element_string(const Element& a) const { return format_rational(a); }
  bool same_model(const RationalUnit&) const { return true; }
};

/* Monotone endpoint-anchored sequence: values v_0 <= ... <= v_{rank+1} in the
   interval, v_0 the bottom, v_{rank+1} the top.  The functor of points of the
   interval at rank n. */
template <class M>
struct MonotoneSeq {
  M model;
  std::vector<typename M::Element> values;

  int rank() const { return static_cast<int>(values.size()) - 2; }
};

template <class M>
MonotoneSeq<M> make_seq(const M& model, std::vector<typename M::Element> values) {
  if (values.size() < 2)
    throw InvalidConstructionError("sequence needs at least the two endpoints");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (model.compare(values[i - 1], values[i]) > 0)
      throw InvalidConstructionError("sequence not monotone at position " +
                                     std::to_string(i));
  if (model.compare(values.front(), model.bottom()) != 0)
    throw InvalidConstructionError("sequence must start at the bottom endpoint");
  if (model.compare(values.back(), model.top()) != 0)
    throw InvalidConstructionError("sequence must end at the top endpoint");
  return MonotoneSeq<M>{model, std::move(values)};
}

template <class M>
bool seq_equal(const MonotoneSeq<M>& a, const MonotoneSeq<M>& b) {
  if (!a.model.same_model(b.model) || a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.model.compare(a.values[i], b.values[i]) != 0) return false;
  return true;
}

template <class M>
std::string seq_string(const MonotoneSeq<M>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += " ";
    out += s.model.element_string(s.values[i]);
  }
  return out + ")";
}

/* Covariant generator actions.  sigma_j drops position j+1 of a rank n+1
   sequence; delta_j repeats position j of a rank n-1 sequence. */
template <class M>
MonotoneSeq<M> seq_act_generator(GeneratorKind kind, int j, const MonotoneSeq<M>& s) {
  const int r = s.rank();
  std::vector<typename M::Element> v;
  if (kind == GeneratorKind::Sigma) {
    if (r < 1 || j < 0 || j > r - 1)
      throw RankMismatchError("sigma action index " + std::to_string(j) +
                              " invalid at rank " + std::to_string(r));
    v.reserve(s.values.size() - 1);
    for (int i = 0; i < static_cast<int>(s.values.size()); ++i)
      if (i != j + 1) v.push_back(s.values[i]);
  } else {
    if (j < 0 || j > r + 1)
      throw RankMismatchError("delta action index " + std::to_string(j) +
                              " invalid at rank " + std::to_string(r));
    v.reserve(s.values.size() + 1);
    for (int i = 0; i < static_cast<int>(s.values.size()); ++i) {
      v.push_back(s.values[i]);
      if (i == j) v.push_back(s.values[i]);
    }
  }
  return MonotoneSeq<M>{s.model, std::move(v)};
}

/* Covariant action of a monotone map phi: [n] -> [m] on a rank-n sequence,
   computed through the epi-mono factorization of phi. */
template <class M>
MonotoneSeq<M> seq_act(const DeltaMap& phi, const MonotoneSeq<M>& s) {
  if (phi.source_rank() != s.rank())
    throw RankMismatchError("seq_act: map source rank " +
                            std::to_string(phi.source_rank()) +
                            " vs sequence rank " + std::to_string(s.rank()));
  const auto fac = epi_mono_factor(phi);
  MonotoneSeq<M> cur = s;
  for (int j : fac.sigma_indices) cur = seq_act_generator<M>(GeneratorKind::Sigma, j, cur);
  for (int j : fac.delta_indices) cur = seq_act_generator<M>(GeneratorKind::Delta, j, cur);
  return cur;
}

/* Same action computed directly as precomposition with the interval dual;
   used as an independent cross-check of seq_act. */
template <class M>
MonotoneSeq<M> seq_act_dual(const DeltaMap& phi, const MonotoneSeq<M>& s) {
  if (phi.source_rank() != s.rank())
    throw RankMismatchError("seq_act_dual: rank mismatch");
  const IntervalMap d = delta_dual(phi);
  std::vector<typename M::Element> v;
  v.reserve(phi.target_rank() + 2);
  for (int i = 0; i <= phi.target_rank() + 1; ++i) v.push_back(s.values[d(i)]);
  return MonotoneSeq<M>{s.model, std::move(v)};
}

/* A cyclic structure on the interval's functor of points: one rank-preserving
   tau operator per rank, packaged as a single function reading the rank off
   its argument.  Validity is what cyclic_audit checks. */
template <class M>
struct CyclicStructure {
  M model;
  std::function<MonotoneSeq<M>(const MonotoneSeq<M>&)> tau;
};

/* The rotation sequence operator beta |-> (b, beta_2 - beta_1, ...,
   beta_{n+1} - beta_1, t) available whenever elements subtract like numbers;
   the structure induced by the additive group of the model's ambient line. */
inline CyclicStructure<FiniteInterval> standard_cyclic_structure(const FiniteInterval& I) {
  return {I, [I](const MonotoneSeq<FiniteInterval>& s) {
            std::vector<long long> v(s.values.size());
            const int n = s.rank();
            v[0] = 0;
            for (int j = 1; j <= n; ++j) v[j] = s.values[j + 1] - s.values[1];
            v[n + 1] = I.rank + 1;
            return make_seq(I, std::move(v));
          }};
}

inline CyclicStructure<RationalUnit> standard_cyclic_structure(const RationalUnit& I) {
  return {I, [I](const MonotoneSeq<RationalUnit>& s) {
            std::vector<Rational> v(s.values.size());
            const int n = s.rank();
            v[0] = Rational(0);
            for (int j = 1; j <= n; ++j) v[j] = s.values[j + 1] - s.values[1];
            v[n + 1] = Rational(1);
            return make_seq(I, std::move(v));
          }};
}

template <class M>
using SeqSampler = std::function<MonotoneSeq<M>(int rank, Sampler&)>;

/* Sorts `rank` sampled elements between the endpoints. */
template <class M>
SeqSampler<M> default_seq_sampler(const M& model) {
  return [model](int rank, Sampler& rng) {
    std::vector<typename M::Element> v;
    v.reserve(rank + 2);
    v.push_back(model.bottom());
    for (int i = 0; i < rank; ++i) v.push_back(model.sample(rng));
    v.push_back(model.top());
    std::sort(v.begin() + 1, v.end() - 1,
              [&](const auto& a, const auto& b) { return model.compare(a, b) < 0; });
    return make_seq(model, std::move(v));
  };
}

/* Checks, on sampled sequences at every rank n <= n_max, that tau is
   rank-preserving, has order n+1, and braids with the generator actions the
   way the cyclic presentation demands (application order):
     sigma_0 ; tau_n = tau_{n+1} ; tau_{n+1} ; sigma_n
     sigma_j ; tau_n = tau_{n+1} ; sigma_{j-1}         (j >= 1)
     delta_0 ; tau_n = delta_n                          (n >= 1)
     delta_j ; tau_n = tau_{n-1} ; delta_{j-1}          (j >= 1) */
template <class M>
AuditReport cyclic_audit(const CyclicStructure<M>& cs, int n_max, int samples,
                         Sampler& rng, const SeqSampler<M>& gen) {
  AuditReport rep;
  rep.subject = "cyclic structure relations, n <= " + std::to_string(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int s = 0; s < samples; ++s) {
      {
        const MonotoneSeq<M> beta = gen(n, rng);
        MonotoneSeq<M> cur = beta;
        bool valid = true;
        for (int k = 0; k <= n; ++k) {
          cur = cs.tau(cur);
          if (cur.rank() != n) valid = false;
        }
        rep.check(valid && seq_equal(cur, beta), "tau order",
                  "n=" + std::to_string(n) + " beta=" + seq_string(beta));
      }
      {
        const MonotoneSeq<M> beta = gen(n + 1, rng);
        for (int j = 0; j <= n; ++j) {
          const MonotoneSeq<M> lhs =
              cs.tau(seq_act_generator<M>(GeneratorKind::Sigma, j, beta));
          const MonotoneSeq<M> rhs =
              j == 0 ? seq_act_generator<M>(GeneratorKind::Sigma, n, cs.tau(cs.tau(beta)))
                     : seq_act_generator<M>(GeneratorKind::Sigma, j - 1, cs.tau(beta));
          rep.check(seq_equal(lhs, rhs), "tau-sigma",
                    "n=" + std::to_string(n) + " j=" + std::to_string(j) +
                        " beta=" + seq_string(beta));
        }
      }
      if (n >= 1) {
        const MonotoneSeq<M> beta = gen(n - 1, rng);
        for (int j = 0; j <= n; ++j) {
          const MonotoneSeq<M> lhs =
              cs.tau(seq_act_generator<M>(GeneratorKind::Delta, j, beta));
          const MonotoneSeq<M> rhs =
              j == 0 ? seq_act_generator<M>(GeneratorKind::Delta, n, beta)
                     : seq_act_generator<M>(GeneratorKind::Delta, j - 1, cs.tau(beta));
          rep.check(seq_equal(lhs, rhs), "tau-delta",
                    "n=" + std::to_string(n) + " j=" + std::to_string(j) +
                        " beta=" + seq_string(beta));
        }
      }
    }
  }
  return rep;
}

template <class M>
AuditReport cyclic_audit(const CyclicStructure<M>& cs, int n_max, int samples,
                         Sampler& rng) {
  return cyclic_audit<M>(cs, n_max, samples, rng, default_seq_sampler<M>(cs.model));
}

}  // namespace cyclab
