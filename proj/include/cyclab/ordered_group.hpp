#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclab/audit.hpp"
#include "cyclab/error.hpp"
#include "cyclab/interval.hpp"
#include "cyclab/rational.hpp"
#include "cyclab/rng.hpp"

namespace cyclab {

/* An ordered group model G carries a group with a total left-invariant order
   and a distinguished central element z > identity:

     using Element = ...;                        regular value type
     Element identity() const;
     Element z() const;
     Element op(a, b) const;                     group product a * b; for
                                                 function groups (a*b)(x) = a(b(x))
     Element inverse(a) const;
     int compare(a, b) const;                    total order, left-invariant
     Element sample(Sampler&) const;             arbitrary element
     Element sample_interval(Sampler&) const;    element of [identity, z]
     long long height_hint(a) const;             integer k with a near z^k;
                                                 exact or off by at most a
                                                 bounded amount
     std::string element_string(a) const;
     bool same_group(const G&) const;

   ordered_group_audit checks the laws on sampled elements. */

/* The integers under addition with z an arbitrary positive value. */
struct IntegerGroup {
  long long z_value = 1;

  using Element = long long;
  Element identity() const { return 0; }
  Element z() const { return z_value; }
  Element op(Element a, Element b) const { return a + b; }
  Element inverse(Element a) const { return -a; }
  int compare(Element a, Element b) const { return a < b ? -1 : a > b ? 1 : 0; }
  Element sample(Sampler& rng) const { return rng.uniform(-3 * z_value, 3 * z_value); }
  Element sample_interval(Sampler& rng) const { return rng.uniform(0, z_value); }
  long long height_hint(Element a) const { return div_floor(a, z_value); }
  std::string element_string(Element a) const { return std::to_string(a); }
  bool same_group(const IntegerGroup& o) const { return z_value == o.z_value; }
};

/* The rationals under addition with z = 1. */
struct RationalAddGroup {
  using Element = Rational;
  Element identity() const { return Rational(0); }
  Element z() const { return Rational(1); }
  Element op(const Element& a, const Element& b) const { return a + b; }
  Element inverse(const Element& a) const { return -a; }
  int compare(const Element& a, const Element& b) const {
    return a < b ? -1 : a > b ? 1 : 0;
  }
  Element sample(Sampler& rng) const {
    return Rational(rng.uniform(-3, 3)) + rng.unit_rational(24);
  }
  Element sample_interval(Sampler& rng) const { return rng.unit_rational(24); }
  long long height_hint(const Element& a) const {
    return rational_floor(a).convert_to<long long>();
  }
  std::string element_string(const Element& a) const { return format_rational(a); }
  bool same_group(const RationalAddGroup&) const { return true; }
};

/* Piecewise-linear order-preserving bijection f of the rational line that
   commutes with unit translation: f(x + 1) = f(x) + 1.  Stored by its
   breakpoints over the fundamental domain [0, 1): x-coordinates strictly
   increasing starting at 0, values strictly increasing with
   back < front + 1; interior breakpoints lying on the segment through their
   neighbours are pruned, and the anchor at x = 0 is always present, so equal
   functions have equal representations. */
class PLMap {
 public:
  /* Accepts sample points anywhere on the graph (any rational x); reduces
     them to the fundamental domain, inserts the anchor, prunes, validates. */
  static PLMap from_points(std::vector<std::pair<Rational, Rational>> pts);
  static PLMap identity();
  static PLMap translation(const Rational& c);

  const std::vector<std::pair<Rational, Rational>>& points() const { return pts_; }
  Rational operator()(const Rational& x) const;

  bool operator==(const PLMap&) const = default;
  std::string to_string() const;

 private:
  PLMap() = default;
  std::vector<std::pair<Rational, Rational>> pts_;
};

/* x -> a(b(x)). */
PLMap pl_compose(const PLMap& a, const PLMap& b);
PLMap pl_inverse(const PLMap& f);

/* Total left-invariant order: scans the fixed dense sequence of rationals
   0, 1/2, 1/3, 2/3, 1/4, 3/4, ... and orders by the first value where the
   two functions differ.  Distinct canonical maps always differ on an open
   set, so the scan terminates. */
int pl_compare(const PLMap& a, const PLMap& b);

struct PLGroup {
  using Element = PLMap;
  Element identity() const { return PLMap::identity(); }
  Element z() const { return PLMap::translation(Rational(1)); }
  Element op(const Element& a, const Element& b) const { return pl_compose(a, b); }
  Element inverse(const Element& a) const { return pl_inverse(a); }
  int compare(const Element& a, const Element& b) const { return pl_compare(a, b); }
  Element sample(Sampler& rng) const;
  Element sample_interval(Sampler& rng) const;
  long long height_hint(const Element& a) const {
    return rational_floor(a(Rational(0))).convert_to<long long>();
  }
  std::string element_string(const Element& a) const { return a.to_string(); }
  bool same_group(const PLGroup&) const { return true; }
};

/* z^k by binary exponentiation; works for any element and any integer k. */
template <class G>
typename G::Element group_power(const G& g, typename G::Element a, long long k) {
  if (k < 0) {
    a = g.inverse(a);
    k = -k;
  }
  typename G::Element acc = g.identity();
  while (k > 0) {
    if (k & 1) acc = g.op(acc, a);
    a = g.op(a, a);
    k >>= 1;
  }
  return acc;
}

/* The interval [identity, z] of an ordered group, as an interval model. */
template <class G>
struct GroupInterval {
  G group;

  using Element = typename G::Element;
  Element bottom() const { return group.identity(); }
  Element top() const { return group.z(); }
  int compare(const Element& a, const Element& b) const {
    return group.compare(a, b);
  }
  Element sample(Sampler& rng) const { return group.sample_interval(rng); }
  std::string element_string(const Element& a) const {
    return group.element_string(a);
  }
  bool same_model(const GroupInterval& o) const { return group.same_group(o.group); }
};

/* Writes a as z^height * reduced with identity <= reduced < z.  Starts from
   the group's height hint and corrects by bounded steps; a hint that cannot
   be corrected within the allowance signals a broken model. */
template <class G>
struct CanonicalHeight {
  long long height;
  typename G::Element reduced;
};

template <class G>
CanonicalHeight<G> gprime_canonical(const G& g, const typename G::Element& a) {
  long long n = g.height_hint(a);
  typename G::Element r = g.op(group_power(g, g.z(), -n), a);
  int guard = 0;
  while (g.compare(r, g.identity()) < 0) {
    --n;
    r = g.op(g.z(), r);
    if (++guard > 64) throw MembershipError("height hint unusably low");
  }
  while (g.compare(r, g.z()) >= 0) {
    ++n;
    r = g.op(g.inverse(g.z()), r);
    if (++guard > 64) throw MembershipError("height hint unusably high");
  }
  return {n, std::move(r)};
}

/* Tuple of rank+1 group elements, each >= identity, with ordered product z:
   the successive-quotient picture of a monotone sequence in [identity, z]. */
template <class G>
struct FTuple {
  G group;
  std::vector<typename G::Element> parts;

  int rank() const { return static_cast<int>(parts.size()) - 1; }
};

template <class G>
FTuple<G> make_ftuple(const G& g, std::vector<typename G::Element> parts) {
  if (parts.empty())
    throw InvalidConstructionError("factor tuple needs at least one part");
  typename G::Element prod = g.identity();
  for (const auto& p : parts) {
    if (g.compare(p, g.identity()) < 0)
      throw InvalidConstructionError("factor tuple part below identity");
    prod = g.op(prod, p);
  }
  if (g.compare(prod, g.z()) != 0)
    throw InvalidConstructionError("factor tuple parts do not multiply to z");
  return FTuple<G>{g, std::move(parts)};
}

template <class G>
bool ftuple_equal(const FTuple<G>& a, const FTuple<G>& b) {
  if (!a.group.same_group(b.group) || a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (a.group.compare(a.parts[i], b.parts[i]) != 0) return false;
  return true;
}

/* Successive quotients g_j = beta_j^{-1} beta_{j+1}. */
template <class G>
FTuple<G> pi_map(const MonotoneSeq<GroupInterval<G>>& s) {
  const G& g = s.model.group;
  std::vector<typename G::Element> parts;
  parts.reserve(s.values.size() - 1);
  for (std::size_t j = 0; j + 1 < s.values.size(); ++j)
    parts.push_back(g.op(g.inverse(s.values[j]), s.values[j + 1]));
  return FTuple<G>{g, std::move(parts)};
}

/* Prefix products beta_j = g_0 g_1 ... g_{j-1}. */
template <class G>
MonotoneSeq<GroupInterval<G>> pi_inverse(const FTuple<G>& t) {
  const G& g = t.group;
  std::vector<typename G::Element> v;
  v.reserve(t.parts.size() + 1);
  v.push_back(g.identity());
  for (const auto& p : t.parts) v.push_back(g.op(v.back(), p));
  return make_seq(GroupInterval<G>{g}, std::move(v));
}

/* The generator actions transported through pi: dropping a sequence entry
   multiplies adjacent parts, repeating one inserts an identity part, and the
   rotation operator becomes plain left rotation (z central). */
template <class G>
FTuple<G> ftuple_sigma(int j, const FTuple<G>& t) {
  const int r = t.rank();
  if (r < 1 || j < 0 || j > r - 1)
    throw RankMismatchError("tuple merge index out of range");
  std::vector<typename G::Element> parts;
  parts.reserve(t.parts.size() - 1);
  for (int i = 0; i <= r; ++i) {
    if (i == j) {
      parts.push_back(t.group.op(t.parts[j], t.parts[j + 1]));
      ++i;
    } else {
      parts.push_back(t.parts[i]);
    }
  }
  return FTuple<G>{t.group, std::move(parts)};
}

template <class G>
FTuple<G> ftuple_delta(int j, const FTuple<G>& t) {
  const int r = t.rank();
  if (j < 0 || j > r + 1) throw RankMismatchError("tuple insert index out of range");
  std::vector<typename G::Element> parts = t.parts;
  parts.insert(parts.begin() + j, t.group.identity());
  return FTuple<G>{t.group, std::move(parts)};
}

template <class G>
FTuple<G> ftuple_tau(const FTuple<G>& t) {
  std::vector<typename G::Element> parts(t.parts.begin() + 1, t.parts.end());
  parts.push_back(t.parts.front());
  return FTuple<G>{t.group, std::move(parts)};
}

/* The rotation structure induced by the group: interior entries move to
   beta_1^{-1} beta_{j+1}.  For the additive models this is the standard
   subtraction form. */
template <class G>
CyclicStructure<GroupInterval<G>> make_cyclic_structure(const G& g) {
  GroupInterval<G> I{g};
  return {I, [g, I](const MonotoneSeq<GroupInterval<G>>& s) {
            const int n = s.rank();
            std::vector<typename G::Element> v;
            v.reserve(s.values.size());
            v.push_back(g.identity());
            const typename G::Element lead = g.inverse(s.values[1]);
            for (int j = 1; j <= n; ++j) v.push_back(g.op(lead, s.values[j + 1]));
            v.push_back(g.z());
            return make_seq(I, std::move(v));
          }};
}

/* Group, order, and canonical-height laws on sampled elements. */
template <class G>
AuditReport ordered_group_audit(const G& g, int samples, Sampler& rng) {
  AuditReport rep;
  rep.subject = "ordered group laws";
  const auto eq = [&](const typename G::Element& a, const typename G::Element& b) {
    return g.compare(a, b) == 0;
  };
  const auto sgn = [](int c) { return c < 0 ? -1 : c > 0 ? 1 : 0; };
  rep.check(g.compare(g.identity(), g.z()) < 0, "z positive");
  for (int s = 0; s < samples; ++s) {
    const auto a = g.sample(rng);
    const auto b = g.sample(rng);
    const auto c = g.sample(rng);
    const std::string where = " a=" + g.element_string(a) + " b=" +
                              g.element_string(b) + " c=" + g.element_string(c);
    rep.check(eq(g.op(g.op(a, b), c), g.op(a, g.op(b, c))), "associativity", where);
    rep.check(eq(g.op(a, g.identity()), a) && eq(g.op(g.identity(), a), a),
              "identity", where);
    rep.check(eq(g.op(a, g.inverse(a)), g.identity()) &&
                  eq(g.op(g.inverse(a), a), g.identity()),
              "inverse", where);
    rep.check(g.compare(a, a) == 0, "reflexivity", where);
    rep.check(sgn(g.compare(a, b)) == -sgn(g.compare(b, a)), "antisymmetry", where);
    if (g.compare(a, b) <= 0 && g.compare(b, c) <= 0)
      rep.check(g.compare(a, c) <= 0, "transitivity", where);
    rep.check(sgn(g.compare(b, c)) == sgn(g.compare(g.op(a, b), g.op(a, c))),
              "left invariance", where);
    rep.check(eq(g.op(g.z(), a), g.op(a, g.z())), "z central", where);
    const auto ch = gprime_canonical(g, a);
    rep.check(g.compare(ch.reduced, g.identity()) >= 0 &&
                  g.compare(ch.reduced, g.z()) < 0 &&
                  eq(g.op(group_power(g, g.z(), ch.height), ch.reduced), a),
              "canonical height", where);
    const auto u = g.sample_interval(rng);
    rep.check(g.compare(g.identity(), u) <= 0 && g.compare(u, g.z()) <= 0,
              "interval sampling", g.element_string(u));
  }
  return rep;
}

}  // namespace cyclab
