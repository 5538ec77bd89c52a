#include "cyclab/arch_circle.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <json.hpp>

namespace cyclab {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

ArchSet<FiniteInterval> integer_arch(int period) {
  if (period < 1)
    throw InvalidConstructionError("integer archimedean set: period must be >= 1");
  return ArchSet<FiniteInterval>{FiniteInterval{period - 1}};
}

ArcMorphism make_arc(int source_period, int target_period,
                     std::vector<long long> values) {
  if (source_period < 1 || target_period < 1)
    throw InvalidConstructionError("arc morphism: periods must be >= 1");
  if (static_cast<int>(values.size()) != source_period)
    throw InvalidConstructionError(
        "arc morphism: expected one value per fundamental-domain point");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i - 1] > values[i])
      throw InvalidConstructionError("arc morphism: values must be nondecreasing");
  if (values.back() > values.front() + target_period)
    throw InvalidConstructionError(
        "arc morphism: equivariant extension is not monotone");
  return ArcMorphism{source_period, target_period, std::move(values)};
}

ArcMorphism arc_identity(int period) { return arc_theta(period, 0); }

ArcMorphism arc_theta(int period, long long m) {
  std::vector<long long> v(period);
  for (int j = 0; j < period; ++j) v[j] = j + m * period;
  return make_arc(period, period, std::move(v));
}

long long arc_eval(const ArcMorphism& f, long long x) {
  const long long m = floordiv(x, f.source_period);
  return f.values[x - m * f.source_period] + m * f.target_period;
}

ArcMorphism arc_canonical(const ArcMorphism& f) {
  const long long m = floordiv(f.values.front(), f.target_period);
  std::vector<long long> v = f.values;
  for (auto& x : v) x -= m * f.target_period;
  return ArcMorphism{f.source_period, f.target_period, std::move(v)};
}

ArcMorphism arc_compose(const ArcMorphism& f, const ArcMorphism& g) {
  if (f.target_period != g.source_period)
    throw RankMismatchError("arc compose: period " + std::to_string(f.target_period) +
                            " vs " + std::to_string(g.source_period));
  std::vector<long long> v(f.source_period);
  for (int j = 0; j < f.source_period; ++j) v[j] = arc_eval(g, f.values[j]);
  return make_arc(f.source_period, g.target_period, std::move(v));
}

bool arc_equal(const ArcMorphism& f, const ArcMorphism& g) {
  if (f.source_period != g.source_period || f.target_period != g.target_period)
    return false;
  return arc_canonical(f).values == arc_canonical(g).values;
}

std::string arc_string(const ArcMorphism& f) {
  std::string s = "period " + std::to_string(f.source_period) + " -> period " +
                  std::to_string(f.target_period) + ": [";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(f.values[i]);
  }
  return s + "]";
}

ArcMorphism arc_from_cyclic(const LambdaMap& f) {
  return make_arc(f.source_rank() + 1, f.target_rank() + 1, f.values());
}

LambdaMap arc_to_cyclic(const ArcMorphism& f) {
  const ArcMorphism c = arc_canonical(f);
  return LambdaMap(c.source_period - 1, c.target_period - 1, c.values);
}

std::vector<ArcMorphism> enumerate_arc_hom(int source_period, int target_period) {
  if (source_period < 1 || target_period < 1)
    throw InvalidConstructionError("arc hom enumeration: periods must be >= 1");
  std::vector<ArcMorphism> out;
  std::vector<long long> v(source_period);
  const auto rec = [&](const auto& self, int i) -> void {
    if (i == source_period) {
      out.push_back(make_arc(source_period, target_period, v));
      return;
    }
    const long long lo = i == 0 ? 0 : v[i - 1];
    const long long hi = i == 0 ? target_period - 1 : v[0] + target_period;
    for (v[i] = lo; v[i] <= hi; ++v[i]) self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

AbstractCircle::AbstractCircle(std::vector<std::string> point_labels,
                               std::vector<std::string> segment_labels,
                               std::vector<int> d0, std::vector<int> d1,
                               std::vector<int> zero, std::vector<int> one,
                               std::vector<int> star,
                               std::vector<std::vector<int>> cup)
    : point_labels_(std::move(point_labels)),
      segment_labels_(std::move(segment_labels)),
      d0_(std::move(d0)),
      d1_(std::move(d1)),
      zero_(std::move(zero)),
      one_(std::move(one)),
      star_(std::move(star)),
      cup_(std::move(cup)) {
  const int P = point_count(), S = segment_count();
  const auto unique_labels = [](const std::vector<std::string>& v) {
    std::vector<std::string> c = v;
    std::sort(c.begin(), c.end());
    return std::adjacent_find(c.begin(), c.end()) == c.end();
  };
  if (!unique_labels(point_labels_) || !unique_labels(segment_labels_))
    throw InvalidConstructionError("circle: labels must be unique");
  const auto check_map = [](const std::vector<int>& m, std::size_t size, int range,
                            const char* what) {
    if (m.size() != size)
      throw InvalidConstructionError(std::string("circle: wrong size for ") + what);
    for (int v : m)
      if (v < 0 || v >= range)
        throw InvalidConstructionError(std::string("circle: value out of range in ") +
                                       what);
  };
  check_map(d0_, S, P, "d0");
  check_map(d1_, S, P, "d1");
  check_map(zero_, P, S, "zero");
  check_map(one_, P, S, "one");
  check_map(star_, S, S, "star");
  if (static_cast<int>(cup_.size()) != S)
    throw InvalidConstructionError("circle: wrong cup table size");
  for (const auto& row : cup_) {
    if (static_cast<int>(row.size()) != S)
      throw InvalidConstructionError("circle: wrong cup row size");
    for (int v : row)
      if (v < -1 || v >= S)
        throw InvalidConstructionError("circle: cup value out of range");
  }
}

int AbstractCircle::find_point(const std::string& label) const {
  for (int x = 0; x < point_count(); ++x)
    if (point_labels_[x] == label) return x;
  throw MembershipError("circle: no point labeled " + label);
}

int AbstractCircle::find_segment(const std::string& label) const {
  for (int a = 0; a < segment_count(); ++a)
    if (segment_labels_[a] == label) return a;
  throw MembershipError("circle: no segment labeled " + label);
}

AbstractCircle AbstractCircle::without_cup(int a, int b) const {
  if (a < 0 || a >= segment_count() || b < 0 || b >= segment_count() ||
      cup_[a][b] < 0)
    throw MembershipError("without_cup: that concatenation is not defined");
  AbstractCircle c = *this;
  c.cup_[a][b] = -1;
  return c;
}

AbstractCircle quotient_circle(const ArchSet<FiniteInterval>& X) {
  const int p = arch_period(X);
  /* Orbit representatives: points 0..p-1; segment orbits (x, y) with
     0 <= x < p and x <= y <= x + p. */
  std::vector<std::string> pl(p), sl(p * (p + 1));
  const auto sidx = [p](long long x, long long y) {
    return static_cast<int>(x * (p + 1) + (y - x));
  };
  std::vector<int> d0(p * (p + 1)), d1(p * (p + 1)), zero(p), one(p),
      star(p * (p + 1));
  std::vector<std::vector<int>> cup(p * (p + 1), std::vector<int>(p * (p + 1), -1));
  for (int x = 0; x < p; ++x) pl[x] = std::to_string(x);
  for (long long x = 0; x < p; ++x)
    for (long long y = x; y <= x + p; ++y) {
      sl[sidx(x, y)] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      d0[sidx(x, y)] = static_cast<int>(x);
      d1[sidx(x, y)] = static_cast<int>(y % p);
      /* (x, y)* = (y, x + p), shifted back to a representative. */
      const long long shift = y - y % p;
      star[sidx(x, y)] = sidx(y - shift, x + p - shift);
    }
  for (int x = 0; x < p; ++x) {
    zero[x] = sidx(x, x);
    one[x] = sidx(x, x + p);
  }
  for (long long x = 0; x < p; ++x)
    for (long long y = x; y <= x + p; ++y)
      for (long long u = 0; u < p; ++u)
        for (long long v = u; v <= u + p; ++v) {
          if (u != y % p) continue;
          const long long z = v + (y - u);
          if (z <= x + p) cup[sidx(x, y)][sidx(u, v)] = sidx(x, z);
        }
  return AbstractCircle(std::move(pl), std::move(sl), std::move(d0), std::move(d1),
                        std::move(zero), std::move(one), std::move(star),
                        std::move(cup));
}

AuditReport circle_axiom_audit(const AbstractCircle& c) {
  AuditReport rep;
  rep.subject = "circle axioms";
  const int P = c.point_count(), S = c.segment_count();
  const auto seg = [&](int a) { return c.segment_label(a); };
  const auto pt = [&](int x) { return c.point_label(x); };
  rep.check(P > 0, "axiom 1 nonempty", "no points");
  for (int x = 0; x < P; ++x)
    for (int y = 0; y < P; ++y) {
      bool found = false;
      for (int a = 0; a < S && !found; ++a)
        if (c.d0(a) == x && c.d1(a) == y) found = true;
      rep.check(found, "axiom 1 connectivity", pt(x) + " to " + pt(y));
    }
  for (int x = 0; x < P; ++x)
    rep.check(c.zero(x) != c.one(x), "axiom 1 distinct units", pt(x));
  for (int a = 0; a < S; ++a) {
    rep.check(c.star(c.star(a)) == a, "axiom 2 involution", seg(a));
    rep.check(c.d0(c.star(a)) == c.d1(a), "axiom 2 star endpoints", seg(a));
  }
  for (int x = 0; x < P; ++x) {
    rep.check(c.d0(c.zero(x)) == x && c.d1(c.zero(x)) == x, "axiom 2 zero endpoints",
              pt(x));
    rep.check(c.star(c.zero(x)) == c.one(x), "axiom 2 zero star", pt(x));
  }
  for (int a = 0; a < S; ++a)
    if (c.d0(a) == c.d1(a)) {
      const int x = c.d0(a);
      rep.check(a == c.zero(x) || a == c.one(x), "axiom 2 degenerate segments",
                seg(a));
    }
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b) {
      const int w = c.cup(a, b);
      if (w < 0) continue;
      rep.check(c.d1(a) == c.d0(b) && c.d0(w) == c.d0(a) && c.d1(w) == c.d1(b),
                "axiom 3.(1) concatenation endpoints", seg(a) + " cup " + seg(b));
      rep.check(c.cup(c.star(w), a) == c.star(b), "axiom 3.(2) rotation",
                seg(a) + " cup " + seg(b));
    }
  for (int w = 0; w < S; ++w)
    for (int a = 0; a < S; ++a) {
      const int e = c.cup(c.star(w), a);
      if (e < 0) continue;
      rep.check(c.cup(a, c.star(e)) == w, "axiom 3.(2) rotation converse",
                seg(w) + " with " + seg(a));
    }
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b) {
      const int ab = c.cup(a, b);
      if (ab < 0) continue;
      for (int e = 0; e < S; ++e) {
        const int abe = c.cup(ab, e);
        if (abe < 0) continue;
        const int be = c.cup(b, e);
        rep.check(be >= 0 && c.cup(a, be) == abe, "axiom 3.(3) associativity",
                  seg(a) + " cup " + seg(b) + " cup " + seg(e));
      }
    }
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b) {
      const int w = c.cup(a, b);
      if (w < 0) continue;
      for (int x = 0; x < P; ++x)
        if (w == c.zero(x))
          rep.check(a == c.zero(x), "axiom 3.(4) zero factor",
                    seg(a) + " cup " + seg(b));
    }
  for (int a = 0; a < S; ++a)
    rep.check(c.cup(c.zero(c.d0(a)), a) == a, "axiom 3.(5) left unit", seg(a));
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      if (c.d1(a) == c.d0(b))
        rep.check(c.cup(a, b) >= 0 || c.cup(c.star(b), c.star(a)) >= 0,
                  "axiom 3.(6) totality", seg(a) + " with " + seg(b));
  return rep;
}

Reconstruction reconstruct(const AbstractCircle& c, int x) {
  const AuditReport rep = circle_axiom_audit(c);
  if (!rep.passed())
    throw InvalidConstructionError("reconstruct: " + rep.summary());
  if (x < 0 || x >= c.point_count())
    throw MembershipError("reconstruct: no point with index " + std::to_string(x));
  std::vector<int> L;
  for (int a = 0; a < c.segment_count(); ++a)
    if (c.d0(a) == x) L.push_back(a);
  /* a <= b iff star(b) cup a is defined, i.e. some e has a cup e = b. */
  const auto le = [&](int a, int b) { return c.cup(c.star(b), a) >= 0; };
  for (int a : L) {
    if (!le(a, a))
      throw InvalidConstructionError("reconstruct: segment order is not reflexive");
    for (int b : L)
      if (a != b && le(a, b) == le(b, a))
        throw InvalidConstructionError("reconstruct: segment order is not total");
  }
  for (int a : L)
    for (int b : L)
      for (int e : L)
        if (le(a, b) && le(b, e) && !le(a, e))
          throw InvalidConstructionError(
              "reconstruct: segment order is not transitive");
  std::sort(L.begin(), L.end(), [&](int a, int b) { return a != b && le(a, b); });
  if (L.size() < 2 || L.front() != c.zero(x) || L.back() != c.one(x))
    throw InvalidConstructionError(
        "reconstruct: the base interval does not run from 0_x to 1_x");
  return Reconstruction{x, L, integer_arch(static_cast<int>(L.size()) - 1)};
}

bool circle_hom_valid(const AbstractCircle& a, const AbstractCircle& b,
                      const CircleHom& h, bool require_iso) {
  const int Pa = a.point_count(), Sa = a.segment_count();
  const int Pb = b.point_count(), Sb = b.segment_count();
  if (static_cast<int>(h.points.size()) != Pa ||
      static_cast<int>(h.segments.size()) != Sa)
    return false;
  for (int v : h.points)
    if (v < 0 || v >= Pb) return false;
  for (int v : h.segments)
    if (v < 0 || v >= Sb) return false;
  for (int s = 0; s < Sa; ++s) {
    if (b.d0(h.segments[s]) != h.points[a.d0(s)]) return false;
    if (b.d1(h.segments[s]) != h.points[a.d1(s)]) return false;
    if (h.segments[a.star(s)] != b.star(h.segments[s])) return false;
  }
  for (int x = 0; x < Pa; ++x) {
    if (h.segments[a.zero(x)] != b.zero(h.points[x])) return false;
    if (h.segments[a.one(x)] != b.one(h.points[x])) return false;
  }
  for (int s = 0; s < Sa; ++s)
    for (int t = 0; t < Sa; ++t) {
      const int w = a.cup(s, t);
      if (w < 0) continue;
      const int wb = b.cup(h.segments[s], h.segments[t]);
      if (wb < 0 || wb != h.segments[w]) return false;
    }
  if (!require_iso) return true;
  if (Pa != Pb || Sa != Sb) return false;
  std::vector<bool> hitp(Pb, false), hits(Sb, false);
  for (int v : h.points) hitp[v] = true;
  for (int v : h.segments) hits[v] = true;
  if (std::find(hitp.begin(), hitp.end(), false) != hitp.end()) return false;
  if (std::find(hits.begin(), hits.end(), false) != hits.end()) return false;
  for (int s = 0; s < Sa; ++s)
    for (int t = 0; t < Sa; ++t)
      if (a.cup(s, t) < 0 && b.cup(h.segments[s], h.segments[t]) >= 0) return false;
  return true;
}

CircleHom reconstruction_iso(const AbstractCircle& c, const Reconstruction& rec) {
  const int p = static_cast<int>(rec.segments.size()) - 1;
  const auto& L = rec.segments;
  CircleHom h;
  h.points.resize(p);
  for (int j = 0; j < p; ++j) h.points[j] = c.d1(L[j]);
  h.segments.assign(p * (p + 1), -1);
  for (int x = 0; x < p; ++x)
    for (int y = x; y <= x + p; ++y) {
      int s;
      if (y < p) {
        /* Same copy of the interval: the difference segment L[x] -> L[y]. */
        const int inner = c.cup(c.star(L[y]), L[x]);
        s = inner < 0 ? -1 : c.star(inner);
      } else {
        /* Crossing the gluing: star(L[x]) cup L[y - p]. */
        s = c.cup(c.star(L[x]), L[y - p]);
      }
      if (s < 0)
        throw InvalidConstructionError(
            "reconstruction iso: missing concatenation witness");
      h.segments[x * (p + 1) + (y - x)] = s;
    }
  return h;
}

ArcMorphism basepoint_iso(const AbstractCircle& c, int x, int y) {
  const Reconstruction rx = reconstruct(c, x);
  const Reconstruction ry = reconstruct(c, y);
  const int p = static_cast<int>(rx.segments.size()) - 1;
  if (static_cast<int>(ry.segments.size()) - 1 != p)
    throw InvalidConstructionError("basepoint change: base intervals differ in size");
  int v = -1;
  if (x == y) {
    v = c.zero(x);
  } else {
    for (int a = 0; a < c.segment_count(); ++a)
      if (c.d0(a) == x && c.d1(a) == y) {
        if (v >= 0)
          throw InvalidConstructionError(
              "basepoint change: connecting segment is not unique");
        v = a;
      }
    if (v < 0)
      throw MembershipError("basepoint change: no segment between the base points");
  }
  const auto index_in = [](const std::vector<int>& where, int s) -> long long {
    for (std::size_t i = 0; i < where.size(); ++i)
      if (where[i] == s) return static_cast<long long>(i);
    throw InvalidConstructionError("basepoint change: image outside the base interval");
  };
  std::vector<long long> values(p);
  for (int j = 0; j < p; ++j) {
    const int b = ry.segments[j];
    const int w = c.cup(v, b);
    if (w >= 0) {
      values[j] = index_in(rx.segments, w);
    } else {
      const int inner = c.cup(c.star(b), c.star(v));
      if (inner < 0)
        throw InvalidConstructionError("basepoint change: concatenation totality failed");
      values[j] = p + index_in(rx.segments, c.star(inner));
    }
  }
  return make_arc(p, p, std::move(values));
}

std::vector<CircleHom> enumerate_circle_homs(const AbstractCircle& a,
                                             const AbstractCircle& b) {
  const Reconstruction rec = reconstruct(a, 0);
  const AuditReport brep = circle_axiom_audit(b);
  if (!brep.passed())
    throw InvalidConstructionError("circle hom enumeration: " + brep.summary());
  const int p = static_cast<int>(rec.segments.size()) - 1;
  const int Pa = a.point_count(), Sa = a.segment_count();
  const auto& L = rec.segments;
  /* The cycle of points under one full turn, and the one-step segments. */
  std::vector<int> cyc(p), atom(p);
  for (int j = 0; j < p; ++j) cyc[j] = a.d1(L[j]);
  for (int j = 0; j < p; ++j) {
    const int inner = a.cup(a.star(L[j + 1]), L[j]);
    if (inner < 0)
      throw InvalidConstructionError("circle hom enumeration: missing step segment");
    atom[j] = a.star(inner);
  }
  std::vector<int> pos(Pa, -1);
  for (int j = 0; j < p; ++j) pos[cyc[j]] = j;
  for (int u = 0; u < Pa; ++u)
    if (pos[u] < 0)
      throw InvalidConstructionError("circle hom enumeration: point off the cycle");
  /* Every segment is a run of consecutive steps: starting slot and length. */
  std::vector<std::pair<int, int>> decomp(Sa, {-1, -1});
  for (int s = 0; s < Sa; ++s) {
    const int j0 = pos[a.d0(s)];
    int cur = a.zero(a.d0(s));
    for (int k = 0; k <= p; ++k) {
      if (cur == s) {
        decomp[s] = {j0, k};
        break;
      }
      cur = a.cup(cur, atom[(j0 + k) % p]);
      if (cur < 0) break;
    }
    if (decomp[s].first < 0)
      throw InvalidConstructionError(
          "circle hom enumeration: segment is not a run of steps");
  }
  std::vector<CircleHom> out;
  std::vector<int> hp(Pa, 0), hatom(p, -1);
  const auto try_combo = [&]() {
    CircleHom h;
    h.points = hp;
    h.segments.assign(Sa, -1);
    for (int s = 0; s < Sa; ++s) {
      const auto [j0, k] = decomp[s];
      int cur = b.zero(hp[a.d0(s)]);
      for (int i = 0; i < k && cur >= 0; ++i) cur = b.cup(cur, hatom[(j0 + i) % p]);
      if (cur < 0) return;
      h.segments[s] = cur;
    }
    if (circle_hom_valid(a, b, h, false)) out.push_back(std::move(h));
  };
  const auto pick_atoms = [&](const auto& self, int j) -> void {
    if (j == p) {
      try_combo();
      return;
    }
    for (int cand = 0; cand < b.segment_count(); ++cand)
      if (b.d0(cand) == hp[cyc[j]] && b.d1(cand) == hp[cyc[(j + 1) % p]]) {
        hatom[j] = cand;
        self(self, j + 1);
      }
  };
  const auto pick_points = [&](const auto& self, int j) -> void {
    if (j == p) {
      pick_atoms(pick_atoms, 0);
      return;
    }
    for (int img = 0; img < b.point_count(); ++img) {
      hp[cyc[j]] = img;
      self(self, j + 1);
    }
  };
  pick_points(pick_points, 0);
  return out;
}

CircleHom circle_hom_from_arc(const ArcMorphism& f) {
  const int p = f.source_period, q = f.target_period;
  CircleHom h;
  h.points.resize(p);
  h.segments.resize(p * (p + 1));
  for (int u = 0; u < p; ++u) {
    const long long fu = arc_eval(f, u);
    h.points[u] = static_cast<int>(fu - floordiv(fu, q) * q);
  }
  for (long long x = 0; x < p; ++x)
    for (long long y = x; y <= x + p; ++y) {
      const long long fx = arc_eval(f, x), fy = arc_eval(f, y);
      const long long m = floordiv(fx, q);
      const long long xr = fx - m * q, yr = fy - m * q;
      h.segments[x * (p + 1) + (y - x)] =
          static_cast<int>(xr * (q + 1) + (yr - xr));
    }
  return h;
}

std::string circle_to_json(const AbstractCircle& c) {
  nlohmann::json out;
  out["P"] = nlohmann::json::array();
  for (int x = 0; x < c.point_count(); ++x) out["P"].push_back(c.point_label(x));
  out["S"] = nlohmann::json::array();
  for (int a = 0; a < c.segment_count(); ++a) out["S"].push_back(c.segment_label(a));
  nlohmann::json d0 = nlohmann::json::object(), d1 = nlohmann::json::object(),
                 star = nlohmann::json::object();
  for (int a = 0; a < c.segment_count(); ++a) {
    d0[c.segment_label(a)] = c.point_label(c.d0(a));
    d1[c.segment_label(a)] = c.point_label(c.d1(a));
    star[c.segment_label(a)] = c.segment_label(c.star(a));
  }
  nlohmann::json zero = nlohmann::json::object(), one = nlohmann::json::object();
  for (int x = 0; x < c.point_count(); ++x) {
    zero[c.point_label(x)] = c.segment_label(c.zero(x));
    one[c.point_label(x)] = c.segment_label(c.one(x));
  }
  nlohmann::json cup = nlohmann::json::array();
  for (int a = 0; a < c.segment_count(); ++a)
    for (int b = 0; b < c.segment_count(); ++b)
      if (c.cup(a, b) >= 0)
        cup.push_back({c.segment_label(a), c.segment_label(b),
                       c.segment_label(c.cup(a, b))});
  out["d0"] = d0;
  out["d1"] = d1;
  out["zero"] = zero;
  out["one"] = one;
  out["star"] = star;
  out["cup"] = cup;
  return out.dump();
}

AbstractCircle circle_from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circle JSON: ") + e.what());
  }
  try {
    const auto pl = in.at("P").get<std::vector<std::string>>();
    const auto sl = in.at("S").get<std::vector<std::string>>();
    std::map<std::string, int> pidx, sidx;
    for (std::size_t i = 0; i < pl.size(); ++i) pidx[pl[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < sl.size(); ++i) sidx[sl[i]] = static_cast<int>(i);
    if (pidx.size() != pl.size() || sidx.size() != sl.size())
      throw ParseError("circle JSON: duplicate labels");
    const auto point_of = [&](const std::string& s) {
      const auto it = pidx.find(s);
      if (it == pidx.end()) throw ParseError("circle JSON: unknown point " + s);
      return it->second;
    };
    const auto segment_of = [&](const std::string& s) {
      const auto it = sidx.find(s);
      if (it == sidx.end()) throw ParseError("circle JSON: unknown segment " + s);
      return it->second;
    };
    std::vector<int> d0(sl.size()), d1(sl.size()), star(sl.size());
    std::vector<int> zero(pl.size()), one(pl.size());
    for (std::size_t a = 0; a < sl.size(); ++a) {
      d0[a] = point_of(in.at("d0").at(sl[a]).get<std::string>());
      d1[a] = point_of(in.at("d1").at(sl[a]).get<std::string>());
      star[a] = segment_of(in.at("star").at(sl[a]).get<std::string>());
    }
    for (std::size_t x = 0; x < pl.size(); ++x) {
      zero[x] = segment_of(in.at("zero").at(pl[x]).get<std::string>());
      one[x] = segment_of(in.at("one").at(pl[x]).get<std::string>());
    }
    std::vector<std::vector<int>> cup(sl.size(), std::vector<int>(sl.size(), -1));
    for (const auto& triple : in.at("cup")) {
      const auto t = triple.get<std::vector<std::string>>();
      if (t.size() != 3) throw ParseError("circle JSON: cup entries are triples");
      const int a = segment_of(t[0]), b = segment_of(t[1]), w = segment_of(t[2]);
      if (cup[a][b] >= 0 && cup[a][b] != w)
        throw ParseError("circle JSON: conflicting cup entries");
      cup[a][b] = w;
    }
    return AbstractCircle(pl, sl, std::move(d0), std::move(d1), std::move(zero),
                          std::move(one), std::move(star), std::move(cup));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circle JSON: ") + e.what());
  }
}

}  // namespace cyclab
