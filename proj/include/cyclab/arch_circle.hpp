#pragma once

#include <string>
#include <vector>

#include "cyclab/audit.hpp"
#include "cyclab/error.hpp"
#include "cyclab/interval.hpp"
#include "cyclab/lambda.hpp"
#include "cyclab/rng.hpp"

namespace cyclab {

/* An archimedean set of finite period: the quotient of Z x F by the gluing
   (k + 1, bottom) ~ (k, top), where F is an interval model.  Points are kept
   with f != top; the total order is lexicographic and theta is k -> k + 1.
   theta(x) > x and every y satisfies y <= theta^n(x) for some n >= 0. */
template <class M>
struct ArchPoint {
  long long k = 0;
  typename M::Element f;
};

template <class M>
struct ArchSet {
  M fiber;
  using Point = ArchPoint<M>;

  Point normalize(Point p) const {
    if (fiber.compare(p.f, fiber.top()) == 0) return Point{p.k + 1, fiber.bottom()};
    if (fiber.compare(p.f, fiber.bottom()) < 0 || fiber.compare(p.f, fiber.top()) > 0)
      throw InvalidConstructionError("archimedean point outside the fiber");
    return p;
  }

  int compare(Point a, Point b) const {
    a = normalize(a);
    b = normalize(b);
    if (a.k != b.k) return a.k < b.k ? -1 : 1;
    return fiber.compare(a.f, b.f);
  }

  Point theta(Point p, long long steps = 1) const {
    p = normalize(p);
    return Point{p.k + steps, p.f};
  }

  std::string point_string(const Point& p) const {
    const Point q = normalize(p);
    return "(" + std::to_string(q.k) + ", " + fiber.element_string(q.f) + ")";
  }
};

/* The archimedean set attached to an interval: fiber I, shift automorphism. */
template <class M>
ArchSet<M> interval_to_arch(const M& fiber) {
  return ArchSet<M>{fiber};
}

/* Sampled laws: totality of the order, theta is a strictly increasing order
   automorphism, and the bounded search y <= theta^n(x) succeeds. */
template <class M>
AuditReport archimedean_audit(const ArchSet<M>& X, int samples, Sampler& rng) {
  AuditReport rep;
  rep.subject = "archimedean set laws";
  const auto draw = [&] {
    return X.normalize(ArchPoint<M>{rng.uniform(-3, 3), X.fiber.sample(rng)});
  };
  for (int i = 0; i < samples; ++i) {
    const auto x = draw(), y = draw();
    rep.check(X.compare(x, y) == -X.compare(y, x), "order antisymmetry",
              X.point_string(x) + " vs " + X.point_string(y));
    rep.check(X.compare(X.theta(x), x) > 0, "theta strictly increasing",
              X.point_string(x));
    const int cmp = X.compare(x, y);
    const int tcmp = X.compare(X.theta(x), X.theta(y));
    rep.check(cmp == tcmp, "theta order automorphism",
              X.point_string(x) + " vs " + X.point_string(y));
    bool reached = false;
    const long long bound = (y.k > x.k ? y.k - x.k : 0) + 2;
    for (long long n = 0; n <= bound && !reached; ++n)
      if (X.compare(y, X.theta(x, n)) <= 0) reached = true;
    rep.check(reached, "archimedean bound",
              X.point_string(x) + " to " + X.point_string(y));
  }
  return rep;
}

/* Integer picture of a finite-fiber archimedean set: the point (k, f) is the
   integer k * period + f, with period = top of the fiber. */
inline int arch_period(const ArchSet<FiniteInterval>& X) {
  return static_cast<int>(X.fiber.top());
}

inline long long arch_index(const ArchSet<FiniteInterval>& X,
                            const ArchPoint<FiniteInterval>& p) {
  const auto q = X.normalize(p);
  return q.k * arch_period(X) + q.f;
}

inline ArchPoint<FiniteInterval> arch_point(const ArchSet<FiniteInterval>& X,
                                            long long t) {
  const int p = arch_period(X);
  long long k = t / p;
  if (t % p < 0) --k;
  return ArchPoint<FiniteInterval>{k, t - k * p};
}

/* The archimedean set Z with theta = +period. */
ArchSet<FiniteInterval> integer_arch(int period);

/* A monotone theta-equivariant map between integer-model archimedean sets,
   stored by its values on the fundamental domain 0 .. source_period - 1.
   Monotonicity needs nondecreasing values with values[p-1] <= values[0] + p'.
   Two maps differing by a power of the target shift are equal as morphisms;
   the canonical representative has values[0] in [0, target_period). */
struct ArcMorphism {
  int source_period = 1;
  int target_period = 1;
  std::vector<long long> values;
};

ArcMorphism make_arc(int source_period, int target_period,
                     std::vector<long long> values);
ArcMorphism arc_identity(int period);
/* The shift automorphism theta^m as an explicit map. */
ArcMorphism arc_theta(int period, long long m = 1);
long long arc_eval(const ArcMorphism& f, long long x);
ArcMorphism arc_canonical(const ArcMorphism& f);
/* f then g, as raw maps: no normalization, so shift factors stay visible. */
ArcMorphism arc_compose(const ArcMorphism& f, const ArcMorphism& g);
/* Equality as morphisms: equal up to a power of the target shift. */
bool arc_equal(const ArcMorphism& f, const ArcMorphism& g);
std::string arc_string(const ArcMorphism& f);

/* The integer objects form a copy of the cyclic category: period n + 1
   matches rank n, and the period values are literally the same data. */
ArcMorphism arc_from_cyclic(const LambdaMap& f);
LambdaMap arc_to_cyclic(const ArcMorphism& f);
/* All morphism classes (canonical representatives) in lexicographic order. */
std::vector<ArcMorphism> enumerate_arc_hom(int source_period, int target_period);

/* A combinatorial circle: points P, segments S, endpoint maps d0 and d1,
   degenerate segments 0_x and 1_x, the complement involution *, and the
   partial concatenation cup (stored as -1 where undefined). */
class AbstractCircle {
 public:
  AbstractCircle(std::vector<std::string> point_labels,
                 std::vector<std::string> segment_labels, std::vector<int> d0,
                 std::vector<int> d1, std::vector<int> zero, std::vector<int> one,
                 std::vector<int> star, std::vector<std::vector<int>> cup);

  int point_count() const { return static_cast<int>(point_labels_.size()); }
  int segment_count() const { return static_cast<int>(segment_labels_.size()); }
  const std::string& point_label(int x) const { return point_labels_.at(x); }
  const std::string& segment_label(int a) const { return segment_labels_.at(a); }
  int find_point(const std::string& label) const;
  int find_segment(const std::string& label) const;

  int d0(int a) const { return d0_.at(a); }
  int d1(int a) const { return d1_.at(a); }
  int zero(int x) const { return zero_.at(x); }
  int one(int x) const { return one_.at(x); }
  int star(int a) const { return star_.at(a); }
  /* -1 when a cup b is undefined. */
  int cup(int a, int b) const { return cup_.at(a).at(b); }

  /* Tables with one defined cup entry removed; negative control for audits. */
  AbstractCircle without_cup(int a, int b) const;

 private:
  std::vector<std::string> point_labels_;
  std::vector<std::string> segment_labels_;
  std::vector<int> d0_, d1_, zero_, one_, star_;
  std::vector<std::vector<int>> cup_;
};

/* The circle of a finite-period archimedean set: P is the orbit space, S the
   orbits of pairs x <= y <= theta(x), with
     d0 = x, d1 = y, 0_x = (x, x), 1_x = (x, theta x), (x, y)* = (y, theta x),
     (x, y) cup (y, z) = (x, z) when z <= theta(x). */
AbstractCircle quotient_circle(const ArchSet<FiniteInterval>& X);

/* Exhaustive check of the circle axioms: non-triviality, the equational
   axioms, and the six concatenation axioms, each failure with a witness. */
AuditReport circle_axiom_audit(const AbstractCircle& c);

/* The archimedean set rebuilt from a base point: L = {a : d0 a = x} ordered
   by  a <= b iff some c has a cup b... i.e. star(b) cup a is defined; the set
   is Z x L glued by (n + 1, 0_x) ~ (n, 1_x), so the period is |L| - 1. */
struct Reconstruction {
  int base = 0;
  /* L sorted: segments.front() = 0_x, segments.back() = 1_x. */
  std::vector<int> segments;
  ArchSet<FiniteInterval> arch;
};

Reconstruction reconstruct(const AbstractCircle& c, int x);

/* A map of circles: images of points and segments, preserving all structure. */
struct CircleHom {
  std::vector<int> points;
  std::vector<int> segments;
};

/* Structure preservation; with require_iso also bijectivity and reflection of
   cup definedness. */
bool circle_hom_valid(const AbstractCircle& a, const AbstractCircle& b,
                      const CircleHom& h, bool require_iso);

/* The isomorphism quotient_circle(rec.arch) -> c of the rebuilt circle: a
   point j goes to d1 of its segment; a segment (j, y) goes to the difference
   segment when y < period and through the complement otherwise. */
CircleHom reconstruction_iso(const AbstractCircle& c, const Reconstruction& rec);

/* Base-point change psi: X_y -> X_x through the unique segment v from x to y
   (0_x when x = y): (n, b) -> (n, v cup b) when defined, otherwise
   (n + 1, (b* cup v*)*).  psi_xy after psi_yx is the shift of X_x, but the
   psi maps do not compose functorially in general. */
ArcMorphism basepoint_iso(const AbstractCircle& c, int x, int y);

/* All circle maps a -> b, found by choosing images of the points and of the
   one-step segments of a and closing under concatenation. */
std::vector<CircleHom> enumerate_circle_homs(const AbstractCircle& a,
                                             const AbstractCircle& b);

/* The circle map induced by an integer-object morphism, for the circles
   produced by quotient_circle(integer_arch(...)). */
CircleHom circle_hom_from_arc(const ArcMorphism& f);

std::string circle_to_json(const AbstractCircle& c);
AbstractCircle circle_from_json(const std::string& text);

}  // namespace cyclab
