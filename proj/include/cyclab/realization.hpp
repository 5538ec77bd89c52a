#pragma once

#include <string>
#include <vector>

#include "cyclab/audit.hpp"
#include "cyclab/cyclic_set.hpp"
#include "cyclab/interval.hpp"
#include "cyclab/lambda.hpp"
#include "cyclab/rng.hpp"

namespace cyclab {

/* A point of the realization of a truncated simplicial or cyclic set over an
   interval model: a cell at some level paired with a monotone sequence of the
   same rank, up to the relation (x phi, beta) ~ (x, phi-action on beta).  The
   owning set is passed to the operations rather than stored.  Canonical
   points pair a nondegenerate cell with a strictly increasing sequence. */
template <class M>
struct RealizationPoint {
  int level = 0;
  int cell = 0;
  MonotoneSeq<M> seq;
};

/* Canonical form: repeatedly strip repeated sequence values through the face
   tables and degenerate cells through the degeneracy tables; each step drops
   the level by one, so the loop terminates. */
template <class M>
RealizationPoint<M> realize_reduce(const FiniteSimplicialSet& s, int level, int cell,
                                   MonotoneSeq<M> beta) {
  if (beta.rank() != level)
    throw RankMismatchError("realize_reduce: sequence rank " +
                            std::to_string(beta.rank()) + " vs level " +
                            std::to_string(level));
  if (level > s.truncation())
    throw RankMismatchError("realize_reduce: level outside truncation");
  if (cell < 0 || cell >= s.level_size(level))
    throw RankMismatchError("realize_reduce: cell index out of range");
  for (;;) {
    const int n = beta.rank();
    /* (x delta_j, beta') ~ (x, delta_j beta'): a repeated adjacent value means
       beta is the delta_j-action of the sequence with position j+1 removed. */
    int repeat = -1;
    for (int j = 0; j <= n && repeat < 0; ++j)
      if (beta.model.compare(beta.values[j], beta.values[j + 1]) == 0) repeat = j;
    if (repeat >= 0) {
      cell = s.face(n, repeat, cell);
      std::vector<typename M::Element> v;
      v.reserve(beta.values.size() - 1);
      for (int i = 0; i < static_cast<int>(beta.values.size()); ++i)
        if (i != repeat + 1) v.push_back(beta.values[i]);
      beta = MonotoneSeq<M>{beta.model, std::move(v)};
      continue;
    }
    /* (y sigma_j, beta) ~ (y, sigma_j beta). */
    bool stripped = false;
    for (int j = 0; j <= n - 1 && !stripped; ++j)
      for (int y = 0; y < s.level_size(n - 1) && !stripped; ++y)
        if (s.degeneracy(n - 1, j, y) == cell) {
          cell = y;
          beta = seq_act_generator<M>(GeneratorKind::Sigma, j, beta);
          stripped = true;
        }
    if (!stripped) break;
  }
  return RealizationPoint<M>{beta.rank(), cell, std::move(beta)};
}

template <class M>
bool realization_point_equal(const RealizationPoint<M>& a, const RealizationPoint<M>& b) {
  return a.level == b.level && a.cell == b.cell && seq_equal(a.seq, b.seq);
}

/* A point of the circle obtained from the interval by gluing the endpoints;
   the glued class is represented by the bottom element, so value < top. */
template <class M>
struct CirclePoint {
  M model;
  typename M::Element value;
};

template <class M>
CirclePoint<M> make_circle_point(const M& model, typename M::Element value) {
  if (model.compare(value, model.top()) == 0) value = model.bottom();
  if (model.compare(value, model.bottom()) < 0 || model.compare(value, model.top()) >= 0)
    throw InvalidConstructionError("circle point outside the interval");
  return CirclePoint<M>{model, std::move(value)};
}

template <class M>
bool circle_equal(const CirclePoint<M>& a, const CirclePoint<M>& b) {
  return a.model.same_model(b.model) && a.model.compare(a.value, b.value) == 0;
}

template <class M>
bool circle_is_base(const CirclePoint<M>& a) {
  return a.model.compare(a.value, a.model.bottom()) == 0;
}

template <class M>
std::string circle_string(const CirclePoint<M>& a) {
  return a.model.element_string(a.value);
}

/* The bijection from the realization of the representable circle to the glued
   interval: a point (tau^a ; j(h), beta) goes to the sequence value beta_a.
   The cell index refers to the enumeration order used by yoneda_cyclic(0). */
template <class M>
CirclePoint<M> iota(const RealizationPoint<M>& p) {
  const auto homs = enumerate_lambda_hom(p.level, 0);
  if (p.cell < 0 || p.cell >= static_cast<int>(homs.size()))
    throw RankMismatchError("iota: cell index out of range");
  const int a = delta_lambda_decompose(homs[p.cell]).rotation;
  return make_circle_point(p.seq.model, p.seq.values[a]);
}

/* Canonical preimage: the base point sits at level 0, every other value at
   level 1 over the rotation cell. */
template <class M>
RealizationPoint<M> iota_inverse(const CirclePoint<M>& x) {
  if (circle_is_base(x))
    return RealizationPoint<M>{0, 0,
                               make_seq(x.model, {x.model.bottom(), x.model.top()})};
  const auto homs = enumerate_lambda_hom(1, 0);
  int cell = -1;
  for (std::size_t i = 0; i < homs.size(); ++i)
    if (delta_lambda_decompose(homs[i]).rotation == 1) cell = static_cast<int>(i);
  return RealizationPoint<M>{
      1, cell, make_seq(x.model, {x.model.bottom(), x.value, x.model.top()})};
}

/* The involution induced by the cyclic generator at rank 1; the inverse for
   the circle group law. */
template <class M>
CirclePoint<M> circle_tau1(const CyclicStructure<M>& cs, const CirclePoint<M>& x) {
  const MonotoneSeq<M> beta =
      make_seq(cs.model, {cs.model.bottom(), x.value, cs.model.top()});
  return make_circle_point(cs.model, cs.tau(beta).values[1]);
}

/* Group law on the glued interval, evaluated through the rank-2 rotation:
     x.y = (tau  (b, tau_1(x), y, t))(1)   if tau_1(x) <= y
     x.y = (tau^2(b, y, tau_1(x), t))(2)   otherwise. */
template <class M>
CirclePoint<M> circle_mul(const CyclicStructure<M>& cs, const CirclePoint<M>& x,
                          const CirclePoint<M>& y) {
  const CirclePoint<M> tx = circle_tau1(cs, x);
  if (cs.model.compare(tx.value, y.value) <= 0) {
    const MonotoneSeq<M> beta =
        make_seq(cs.model, {cs.model.bottom(), tx.value, y.value, cs.model.top()});
    return make_circle_point(cs.model, cs.tau(beta).values[1]);
  }
  const MonotoneSeq<M> beta =
      make_seq(cs.model, {cs.model.bottom(), y.value, tx.value, cs.model.top()});
  return make_circle_point(cs.model, cs.tau(cs.tau(beta)).values[2]);
}

template <class M>
CirclePoint<M> circle_inverse(const CyclicStructure<M>& cs, const CirclePoint<M>& x) {
  return circle_is_base(x) ? x : circle_tau1(cs, x);
}

/* Normalized 2-cocycle of the group law: zero when either argument is the
   base point, otherwise 1 exactly when tau_1(x) <= y. */
template <class M>
int cocycle(const CyclicStructure<M>& cs, const CirclePoint<M>& x,
            const CirclePoint<M>& y) {
  if (circle_is_base(x) || circle_is_base(y)) return 0;
  return cs.model.compare(circle_tau1(cs, x).value, y.value) <= 0 ? 1 : 0;
}

/* Comparison cochain: zero when either argument is the base point, otherwise
   1 exactly when x <= y.  The cocycle factors as c(x, y) = rho(tau_1(x), y). */
template <class M>
int rho(const CirclePoint<M>& x, const CirclePoint<M>& y) {
  if (circle_is_base(x) || circle_is_base(y)) return 0;
  return x.model.compare(x.value, y.value) <= 0 ? 1 : 0;
}

/* Cyclic-order cochain on three circle points:
     0 if x = y or y = z
     0 if x < z and y lies in [x, z]
     0 if z < x and y lies outside [z, x]
     1 otherwise. */
template <class M>
int omega(const CirclePoint<M>& x, const CirclePoint<M>& y, const CirclePoint<M>& z) {
  const M& m = x.model;
  if (m.compare(x.value, y.value) == 0 || m.compare(y.value, z.value) == 0) return 0;
  if (m.compare(x.value, z.value) < 0)
    return (m.compare(x.value, y.value) <= 0 && m.compare(y.value, z.value) <= 0) ? 0 : 1;
  if (m.compare(z.value, x.value) < 0)
    return (m.compare(z.value, y.value) <= 0 && m.compare(y.value, x.value) <= 0) ? 1 : 0;
  return 1;
}

/* Distance cochain on the rational unit interval; omega is its coboundary. */
inline Rational ell(const Rational& x, const Rational& y) {
  return x <= y ? Rational(y - x) : Rational(1 - (x - y));
}

/* The invariant form of the cocycle on triples of circle points:
   c~(w0, w1, w2) = c(w0^{-1} w1, w1^{-1} w2). */
template <class M>
int cocycle_invariant(const CyclicStructure<M>& cs, const CirclePoint<M>& w0,
                      const CirclePoint<M>& w1, const CirclePoint<M>& w2) {
  const CirclePoint<M> left = circle_mul(cs, circle_inverse(cs, w0), w1);
  const CirclePoint<M> right = circle_mul(cs, circle_inverse(cs, w1), w2);
  return cocycle(cs, left, right);
}

/* Element of the central extension of the circle by the integers. */
template <class M>
struct ExtensionElement {
  long long shift = 0;
  CirclePoint<M> point;
};

template <class M>
ExtensionElement<M> extension_identity(const M& model) {
  return ExtensionElement<M>{0, make_circle_point(model, model.bottom())};
}

/* (n, x)(m, y) = (n + m + c(x, y), x.y). */
template <class M>
ExtensionElement<M> extension_mul(const CyclicStructure<M>& cs,
                                  const ExtensionElement<M>& a,
                                  const ExtensionElement<M>& b) {
  return ExtensionElement<M>{a.shift + b.shift + cocycle(cs, a.point, b.point),
                             circle_mul(cs, a.point, b.point)};
}

/* Inverse: (-n, 1) at the base point, (-n-1, x^{-1}) elsewhere. */
template <class M>
ExtensionElement<M> extension_inverse(const CyclicStructure<M>& cs,
                                      const ExtensionElement<M>& a) {
  if (circle_is_base(a.point)) return ExtensionElement<M>{-a.shift, a.point};
  return ExtensionElement<M>{-a.shift - 1, circle_tau1(cs, a.point)};
}

/* Lexicographic order; coincides with the positivity order whose positive
   cone is the set of elements with nonnegative integer part. */
template <class M>
int extension_compare(const ExtensionElement<M>& a, const ExtensionElement<M>& b) {
  if (a.shift != b.shift) return a.shift < b.shift ? -1 : 1;
  return a.point.model.compare(a.point.value, b.point.value);
}

template <class M>
bool extension_equal(const ExtensionElement<M>& a, const ExtensionElement<M>& b) {
  return a.shift == b.shift && circle_equal(a.point, b.point);
}

template <class M>
std::string extension_string(const ExtensionElement<M>& a) {
  return "(" + std::to_string(a.shift) + ", " + circle_string(a.point) + ")";
}

/* The extension as an ordered group model; z = (1, base) is central and the
   canonical height of (n, x) is exactly n. */
template <class M>
struct ExtensionGroup {
  CyclicStructure<M> cs;

  using Element = ExtensionElement<M>;
  Element identity() const { return extension_identity(cs.model); }
  Element z() const {
    return Element{1, make_circle_point(cs.model, cs.model.bottom())};
  }
  Element op(const Element& a, const Element& b) const {
    return extension_mul(cs, a, b);
  }
  Element inverse(const Element& a) const { return extension_inverse(cs, a); }
  int compare(const Element& a, const Element& b) const {
    return extension_compare(a, b);
  }
  Element sample(Sampler& rng) const {
    return Element{rng.uniform(-3, 3), make_circle_point(cs.model, cs.model.sample(rng))};
  }
  Element sample_interval(Sampler& rng) const {
    const auto v = cs.model.sample(rng);
    if (cs.model.compare(v, cs.model.top()) == 0) return z();
    return Element{0, make_circle_point(cs.model, v)};
  }
  long long height_hint(const Element& a) const { return a.shift; }
  std::string element_string(const Element& a) const { return extension_string(a); }
  bool same_group(const ExtensionGroup& o) const {
    return cs.model.same_model(o.cs.model);
  }
};

/* Gate and classification: audits the cyclic structure, builds the extension
   group, and spot-checks that conjugation by the center is trivial and the
   order is left-invariant.  A failed audit raises NotCyclicError. */
template <class M>
ExtensionGroup<M> classify(const CyclicStructure<M>& cs, int n_max, int samples,
                           Sampler& rng) {
  const AuditReport rep = cyclic_audit<M>(cs, n_max, samples, rng);
  if (!rep.passed())
    throw NotCyclicError("classify: cyclic-structure audit failed: " + rep.summary());
  ExtensionGroup<M> g{cs};
  AuditReport laws;
  laws.subject = "extension group spot checks";
  for (int i = 0; i < samples; ++i) {
    const auto a = g.sample(rng), b = g.sample(rng), c = g.sample(rng);
    if (g.compare(a, b) < 0)
      laws.check(g.compare(g.op(c, a), g.op(c, b)) < 0, "left-invariance",
                 extension_string(a) + " vs " + extension_string(b));
    const auto zn = ExtensionElement<M>{rng.uniform(-2, 2),
                                        make_circle_point(cs.model, cs.model.bottom())};
    laws.check(extension_equal(g.op(zn, a), ExtensionElement<M>{zn.shift + a.shift,
                                                                a.point}) &&
                   extension_equal(g.op(zn, a), g.op(a, zn)),
               "centrality", extension_string(a));
  }
  if (!laws.passed())
    throw NotCyclicError("classify: extension law check failed: " + laws.summary());
  return g;
}

/* One verification row: the rotation exponents of a nondegenerate triple of
   circle cells, the omega value at the generic uniform sequence, and the
   matching difference indices with their rho value. */
struct CocycleTableRow {
  std::vector<int> a;
  int omega_value = 0;
  int b0 = 0, b1 = 0;
  int rho_value = 0;
};

/* The three verification tables (dimensions 1, 2, 3): omega evaluated on the
   nondegenerate triples of the cube of the representable circle equals the
   invariant cocycle computed through rho. */
std::vector<std::vector<CocycleTableRow>> cocycle_table_rows();
std::string cocycle_tables_text();

/* Sampled check of the two defining properties of the carrying cocycle: the
   degree-3 alternating sum vanishes on quadruples, and the pair values factor
   through rho after one rotation of the first argument. */
template <class M>
AuditReport cocycle_audit(const CyclicStructure<M>& cs, int samples, Sampler& rng) {
  AuditReport rep;
  rep.subject = "carrying cocycle laws";
  for (int i = 0; i < samples; ++i) {
    const auto w0 = make_circle_point(cs.model, cs.model.sample(rng));
    const auto w1 = make_circle_point(cs.model, cs.model.sample(rng));
    const auto w2 = make_circle_point(cs.model, cs.model.sample(rng));
    const auto w3 = make_circle_point(cs.model, cs.model.sample(rng));
    const int total = cocycle_invariant(cs, w1, w2, w3) -
                      cocycle_invariant(cs, w0, w2, w3) +
                      cocycle_invariant(cs, w0, w1, w3) -
                      cocycle_invariant(cs, w0, w1, w2);
    rep.check(total == 0, "degree-3 alternating sum vanishes",
              circle_string(w0) + " " + circle_string(w1) + " " +
                  circle_string(w2) + " " + circle_string(w3));
    rep.check(cocycle(cs, w0, w1) == rho(circle_tau1(cs, w0), w1),
              "pair values factor through rho",
              circle_string(w0) + " " + circle_string(w1));
  }
  return rep;
}

/* Right action of a circle element on a realization point of a cyclic set:
   refine the point's sequence so that some position a carries g's value (the
   lift inserts the value through a degeneracy of the cell when it is new),
   then act by (x, u) -> (x tau^{-a}, tau^a u) and reduce. */
template <class M>
RealizationPoint<M> right_action(const FiniteCyclicSet& set, const RealizationPoint<M>& s,
                                 const CirclePoint<M>& g, const CyclicStructure<M>& cs) {
  MonotoneSeq<M> u = s.seq;
  int cell = s.cell;
  int a = 0;
  if (!circle_is_base(g)) {
    const int n = u.rank();
    int pos = -1;
    for (int k = 1; k <= n && pos < 0; ++k)
      if (u.model.compare(u.values[k], g.value) == 0) pos = k;
    if (pos >= 0) {
      a = pos;
    } else {
      int k = 1;
      while (u.model.compare(u.values[k], g.value) < 0) ++k;
      std::vector<typename M::Element> v;
      v.reserve(u.values.size() + 1);
      for (int i = 0; i < static_cast<int>(u.values.size()); ++i) {
        if (i == k) v.push_back(g.value);
        v.push_back(u.values[i]);
      }
      u = MonotoneSeq<M>{u.model, std::move(v)};
      cell = set.degeneracy(n, k - 1, cell);
      a = k;
    }
  }
  const int r = u.rank();
  const int steps = a == 0 ? 0 : (r + 1 - a) % (r + 1);
  for (int i = 0; i < steps; ++i) cell = set.tau(r, cell);
  for (int i = 0; i < a; ++i) u = cs.tau(u);
  return realize_reduce(set.simplicial(), r, cell, std::move(u));
}

}  // namespace cyclab
