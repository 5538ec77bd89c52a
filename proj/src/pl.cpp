#include "cyclab/ordered_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cyclab {

namespace {

Rational frac(const Rational& x) { return x - Rational(rational_floor(x)); }

}  // namespace

PLMap PLMap::from_points(std::vector<std::pair<Rational, Rational>> raw) {
  if (raw.empty())
    throw InvalidConstructionError("a piecewise-linear map needs at least one point");
  // Reduce every sample to the fundamental domain: (x, y) ~ (x - n, y - n).
  for (auto& p : raw) {
    const Rational n(rational_floor(p.first));
    p.first -= n;
    p.second -= n;
  }
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& p : raw) {
    if (!pts.empty() && pts.back().first == p.first) {
      if (pts.back().second != p.second)
        throw InvalidConstructionError("conflicting values at one position");
      continue;
    }
    pts.push_back(p);
  }
  if (pts.front().first != 0) {
    // Interpolate the anchor on the wrap-around segment.
    const Rational x0 = pts.back().first - 1;
    const Rational y0 = pts.back().second - 1;
    const Rational slope = (pts.front().second - y0) / (pts.front().first - x0);
    pts.insert(pts.begin(), {Rational(0), y0 - x0 * slope});
  }
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].second <= pts[i - 1].second)
      throw InvalidConstructionError("map is not strictly increasing");
  if (pts.back().second >= pts.front().second + 1)
    throw InvalidConstructionError("map is not strictly increasing across the period");
  // Drop interior points explained by their neighbours; keep the anchor.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const auto& prev = pts[i - 1];
      const auto next = i + 1 < pts.size()
                            ? pts[i + 1]
                            : std::make_pair(pts[0].first + 1, pts[0].second + 1);
      if ((pts[i].second - prev.second) * (next.first - prev.first) ==
          (next.second - prev.second) * (pts[i].first - prev.first)) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  PLMap f;
  f.pts_ = std::move(pts);
  return f;
}

PLMap PLMap::identity() { return translation(Rational(0)); }

PLMap PLMap::translation(const Rational& c) {
  PLMap f;
  f.pts_ = {{Rational(0), c}};
  return f;
}

Rational PLMap::operator()(const Rational& x) const {
  const Rational n(rational_floor(x));
  const Rational t = x - n;
  std::size_t i = pts_.size() - 1;
  while (pts_[i].first > t) --i;
  if (pts_[i].first == t) return pts_[i].second + n;
  const auto next = i + 1 < pts_.size()
                        ? pts_[i + 1]
                        : std::make_pair(pts_[0].first + 1, pts_[0].second + 1);
  const Rational slope = (next.second - pts_[i].second) / (next.first - pts_[i].first);
  return pts_[i].second + (t - pts_[i].first) * slope + n;
}

std::string PLMap::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (i) out += " ";
    out += "(" + format_rational(pts_[i].first) + "," +
           format_rational(pts_[i].second) + ")";
  }
  return out + "}";
}

PLMap pl_compose(const PLMap& a, const PLMap& b) {
  const PLMap binv = pl_inverse(b);
  std::vector<std::pair<Rational, Rational>> pts;
  auto add = [&](const Rational& x) { pts.emplace_back(x, a(b(x))); };
  add(Rational(0));
  for (const auto& p : b.points()) add(p.first);
  for (const auto& p : a.points()) add(frac(binv(p.first)));
  return PLMap::from_points(std::move(pts));
}

PLMap pl_inverse(const PLMap& f) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& p : f.points()) {
    const Rational n(rational_floor(p.second));
    pts.emplace_back(p.second - n, p.first - n);
  }
  return PLMap::from_points(std::move(pts));
}

int pl_compare(const PLMap& a, const PLMap& b) {
  if (a == b) return 0;
  for (long long den = 1; den <= 1000000; ++den) {
    for (long long num = 0; num < den; ++num) {
      if (den > 1 && std::gcd(num, den) != 1) continue;
      const Rational x(num, den);
      const Rational av = a(x);
      const Rational bv = b(x);
      if (av != bv) return av < bv ? -1 : 1;
    }
  }
  throw Error("order scan failed to separate distinct maps");
}

PLMap PLGroup::sample(Sampler& rng) const {
  const long long d = rng.uniform(2, 8);
  const long long k = rng.uniform(1, std::min<long long>(3, d));
  std::set<long long> xs;
  while (static_cast<long long>(xs.size()) < k) xs.insert(rng.uniform(0, d - 1));
  std::vector<long long> rise(xs.size());
  long long tot = 0;
  for (auto& r : rise) {
    r = rng.uniform(1, 4);
    tot += r;
  }
  const Rational start =
      Rational(rng.uniform(-2, 2)) + Rational(rng.uniform(0, d - 1), d);
  std::vector<std::pair<Rational, Rational>> pts;
  long long acc = 0;
  std::size_t i = 0;
  for (long long x : xs) {
    pts.emplace_back(Rational(x, d), start + Rational(acc, tot));
    acc += rise[i++];
  }
  return PLMap::from_points(std::move(pts));
}

PLMap PLGroup::sample_interval(Sampler& rng) const {
  // Breakpoints inside the band x <= y <= x + 1 stay in the band between
  // breakpoints as well, which puts the map between identity and z.
  for (int attempt = 0; attempt < 30; ++attempt) {
    const long long d = rng.uniform(2, 8);
    const long long k = rng.uniform(1, std::min<long long>(3, d));
    std::set<long long> xs;
    while (static_cast<long long>(xs.size()) < k) xs.insert(rng.uniform(0, d - 1));
    std::vector<std::pair<Rational, Rational>> pts;
    for (long long x : xs)
      pts.emplace_back(Rational(x, d), Rational(x, d) + Rational(rng.uniform(0, d), d));
    bool ok = true;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].second <= pts[i - 1].second) ok = false;
    if (pts.back().second >= pts.front().second + 1) ok = false;
    if (ok) return PLMap::from_points(std::move(pts));
  }
  return PLMap::translation(Rational(rng.uniform(0, 4), 4));
}

}  // namespace cyclab
