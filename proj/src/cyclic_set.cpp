#include "cyclab/cyclic_set.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

namespace cyclab {

namespace {

std::string level_str(int n) { return std::to_string(n); }

}  // namespace

FiniteSimplicialSet::FiniteSimplicialSet(
    int truncation, std::vector<std::vector<std::string>> labels,
    std::vector<std::vector<std::vector<int>>> face_tables,
    std::vector<std::vector<std::vector<int>>> degeneracy_tables)
    : truncation_(truncation),
      labels_(std::move(labels)),
      face_(std::move(face_tables)),
      deg_(std::move(degeneracy_tables)) {
  if (truncation_ < 0)
    throw InvalidConstructionError("simplicial set: negative truncation");
  const auto N = static_cast<std::size_t>(truncation_);
  if (labels_.size() != N + 1)
    throw InvalidConstructionError("simplicial set: expected " +
                                   level_str(truncation_ + 1) + " label levels");
  for (int n = 0; n <= truncation_; ++n) {
    std::set<std::string> seen;
    for (const auto& lab : labels_[n])
      if (!seen.insert(lab).second)
        throw InvalidConstructionError("simplicial set: duplicate label '" + lab +
                                       "' at level " + level_str(n));
  }
  if (face_.size() != N + 1 || deg_.size() != N + 1)
    throw InvalidConstructionError("simplicial set: table levels do not match truncation");
  if (!face_[0].empty())
    throw InvalidConstructionError("simplicial set: face table at level 0");
  if (!deg_[N].empty())
    throw InvalidConstructionError("simplicial set: degeneracy table at top level");
  for (int n = 1; n <= truncation_; ++n) {
    if (face_[n].size() != static_cast<std::size_t>(n) + 1)
      throw InvalidConstructionError("simplicial set: face table at level " +
                                     level_str(n) + " needs " + level_str(n + 1) +
                                     " rows");
    for (const auto& row : face_[n]) {
      if (row.size() != labels_[n].size())
        throw InvalidConstructionError("simplicial set: face row size at level " +
                                       level_str(n));
      for (int v : row)
        if (v < 0 || v >= static_cast<int>(labels_[n - 1].size()))
          throw InvalidConstructionError("simplicial set: face value out of range at level " +
                                         level_str(n));
    }
  }
  for (int n = 0; n < truncation_; ++n) {
    if (deg_[n].size() != static_cast<std::size_t>(n) + 1)
      throw InvalidConstructionError("simplicial set: degeneracy table at level " +
                                     level_str(n) + " needs " + level_str(n + 1) +
                                     " rows");
    for (const auto& row : deg_[n]) {
      if (row.size() != labels_[n].size())
        throw InvalidConstructionError("simplicial set: degeneracy row size at level " +
                                       level_str(n));
      for (int v : row)
        if (v < 0 || v >= static_cast<int>(labels_[n + 1].size()))
          throw InvalidConstructionError(
              "simplicial set: degeneracy value out of range at level " + level_str(n));
    }
  }
}

int FiniteSimplicialSet::level_size(int n) const {
  if (n < 0 || n > truncation_)
    throw RankMismatchError("simplicial set: level " + level_str(n) +
                            " outside truncation");
  return static_cast<int>(labels_[n].size());
}

const std::string& FiniteSimplicialSet::label(int n, int i) const {
  if (i < 0 || i >= level_size(n))
    throw RankMismatchError("simplicial set: cell index out of range");
  return labels_[n][i];
}

int FiniteSimplicialSet::find_label(int n, const std::string& lab) const {
  const int size = level_size(n);
  for (int i = 0; i < size; ++i)
    if (labels_[n][i] == lab) return i;
  return -1;
}

int FiniteSimplicialSet::face(int n, int j, int i) const {
  if (n < 1 || n > truncation_ || j < 0 || j > n)
    throw RankMismatchError("simplicial set: face(" + level_str(n) + ", " +
                            level_str(j) + ") undefined");
  if (i < 0 || i >= level_size(n))
    throw RankMismatchError("simplicial set: cell index out of range");
  return face_[n][j][i];
}

int FiniteSimplicialSet::degeneracy(int n, int j, int i) const {
  if (n < 0 || n >= truncation_ || j < 0 || j > n)
    throw RankMismatchError("simplicial set: degeneracy(" + level_str(n) + ", " +
                            level_str(j) + ") undefined");
  if (i < 0 || i >= level_size(n))
    throw RankMismatchError("simplicial set: cell index out of range");
  return deg_[n][j][i];
}

int FiniteSimplicialSet::act(const DeltaMap& phi, int cell) const {
  const int a = phi.source_rank(), b = phi.target_rank();
  if (a > truncation_ || b > truncation_)
    throw RankMismatchError("simplicial set: morphism rank outside truncation");
  if (cell < 0 || cell >= level_size(b))
    throw RankMismatchError("simplicial set: cell index out of range");
  const EpiMonoFactorization fac = epi_mono_factor(phi);
  /* x (f ; g) = (x g) f: undo the factor lists from the right. */
  int level = b, x = cell;
  for (auto it = fac.delta_indices.rbegin(); it != fac.delta_indices.rend(); ++it) {
    x = face(level, *it, x);
    --level;
  }
  for (auto it = fac.sigma_indices.rbegin(); it != fac.sigma_indices.rend(); ++it) {
    x = degeneracy(level, *it, x);
    ++level;
  }
  return x;
}

FiniteCyclicSet::FiniteCyclicSet(FiniteSimplicialSet simplicial,
                                 std::vector<std::vector<int>> tau_table)
    : simplicial_(std::move(simplicial)), tau_(std::move(tau_table)) {
  const int N = simplicial_.truncation();
  if (tau_.size() != static_cast<std::size_t>(N) + 1)
    throw InvalidConstructionError("cyclic set: tau table levels do not match truncation");
  for (int n = 0; n <= N; ++n) {
    if (tau_[n].size() != static_cast<std::size_t>(simplicial_.level_size(n)))
      throw InvalidConstructionError("cyclic set: tau row size at level " + level_str(n));
    for (int v : tau_[n])
      if (v < 0 || v >= simplicial_.level_size(n))
        throw InvalidConstructionError("cyclic set: tau value out of range at level " +
                                       level_str(n));
  }
}

int FiniteCyclicSet::tau(int n, int i) const {
  if (n < 0 || n > truncation())
    throw RankMismatchError("cyclic set: level outside truncation");
  if (i < 0 || i >= level_size(n))
    throw RankMismatchError("cyclic set: cell index out of range");
  return tau_[n][i];
}

int FiniteCyclicSet::act(const LambdaMap& f, int cell) const {
  const DeltaLambdaDecomposition dec = delta_lambda_decompose(f);
  /* f = tau^r ; j(h), so x f = (x j(h)) tau^r. */
  int x = simplicial_.act(dec.h, cell);
  const int a = f.source_rank();
  for (int k = 0; k < dec.rotation; ++k) x = tau(a, x);
  return x;
}

FiniteSimplicialSet point_simplicial_set(int truncation) {
  std::vector<std::vector<std::string>> labels(truncation + 1, {"*"});
  std::vector<std::vector<std::vector<int>>> face(truncation + 1);
  std::vector<std::vector<std::vector<int>>> deg(truncation + 1);
  for (int n = 1; n <= truncation; ++n)
    face[n].assign(n + 1, std::vector<int>{0});
  for (int n = 0; n < truncation; ++n)
    deg[n].assign(n + 1, std::vector<int>{0});
  return FiniteSimplicialSet(truncation, std::move(labels), std::move(face),
                             std::move(deg));
}

FiniteCyclicSet point_cyclic_set(int truncation) {
  std::vector<std::vector<int>> tau(truncation + 1, std::vector<int>{0});
  return FiniteCyclicSet(point_simplicial_set(truncation), std::move(tau));
}

namespace {

std::string period_label(const LambdaMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (i) s += " ";
    s += std::to_string(f.values()[i]);
  }
  return s + "]";
}

}  // namespace

FiniteCyclicSet yoneda_cyclic(int k, int truncation) {
  if (k < 0 || truncation < 0)
    throw InvalidConstructionError("yoneda_cyclic: negative parameter");
  const int N = truncation;
  std::vector<std::vector<LambdaMap>> cells;
  std::vector<std::map<std::vector<long long>, int>> index(N + 1);
  for (int n = 0; n <= N; ++n) {
    cells.push_back(enumerate_lambda_hom(n, k));
    for (std::size_t i = 0; i < cells[n].size(); ++i)
      index[n][cells[n][i].values()] = static_cast<int>(i);
  }
  std::vector<std::vector<std::string>> labels(N + 1);
  for (int n = 0; n <= N; ++n)
    for (const auto& f : cells[n]) labels[n].push_back(period_label(f));
  std::vector<std::vector<std::vector<int>>> face(N + 1);
  std::vector<std::vector<std::vector<int>>> deg(N + 1);
  std::vector<std::vector<int>> tau(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int j = 0; j <= n; ++j) {
      const LambdaMap d = embed_j(DeltaMap::delta(j, n));
      std::vector<int> row;
      for (const auto& f : cells[n])
        row.push_back(index[n - 1].at(lambda_compose(d, f).values()));
      face[n].push_back(std::move(row));
    }
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j) {
      const LambdaMap s = embed_j(DeltaMap::sigma(j, n));
      std::vector<int> row;
      for (const auto& f : cells[n])
        row.push_back(index[n + 1].at(lambda_compose(s, f).values()));
      deg[n].push_back(std::move(row));
    }
  for (int n = 0; n <= N; ++n) {
    const LambdaMap t = LambdaMap::tau(n);
    for (const auto& f : cells[n])
      tau[n].push_back(index[n].at(lambda_compose(t, f).values()));
  }
  return FiniteCyclicSet(
      FiniteSimplicialSet(N, std::move(labels), std::move(face), std::move(deg)),
      std::move(tau));
}

FiniteCyclicSet induce_cyclic(const FiniteSimplicialSet& s) {
  const int N = s.truncation();
  std::vector<std::vector<std::string>> labels(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int x = 0; x < s.level_size(n); ++x)
      for (int a = 0; a <= n; ++a)
        labels[n].push_back(s.label(n, x) + "|t^" + std::to_string(a));
  std::vector<std::vector<std::vector<int>>> face(N + 1);
  std::vector<std::vector<std::vector<int>>> deg(N + 1);
  std::vector<std::vector<int>> tau(N + 1);
  /* (x, gamma) phi = (x gamma_*(phi), phi^*(gamma)) with gamma = tau^a. */
  for (int n = 1; n <= N; ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<int> row;
      for (int x = 0; x < s.level_size(n); ++x)
        for (int a = 0; a <= n; ++a) {
          const CrossedDecomposition dec =
              crossed_decompose(LambdaMap::tau_power(n, a), DeltaMap::delta(j, n));
          row.push_back(s.act(dec.pushforward, x) * n + dec.pullback_rotation);
        }
      face[n].push_back(std::move(row));
    }
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<int> row;
      for (int x = 0; x < s.level_size(n); ++x)
        for (int a = 0; a <= n; ++a) {
          const CrossedDecomposition dec =
              crossed_decompose(LambdaMap::tau_power(n, a), DeltaMap::sigma(j, n));
          row.push_back(s.act(dec.pushforward, x) * (n + 2) + dec.pullback_rotation);
        }
      deg[n].push_back(std::move(row));
    }
  for (int n = 0; n <= N; ++n)
    for (int x = 0; x < s.level_size(n); ++x)
      for (int a = 0; a <= n; ++a)
        tau[n].push_back(x * (n + 1) + (a + 1) % (n + 1));
  return FiniteCyclicSet(
      FiniteSimplicialSet(N, std::move(labels), std::move(face), std::move(deg)),
      std::move(tau));
}

FiniteCyclicSet cyclic_product(const FiniteCyclicSet& a, const FiniteCyclicSet& b) {
  const int N = std::min(a.truncation(), b.truncation());
  std::vector<std::vector<std::string>> labels(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i < a.level_size(n); ++i)
      for (int j = 0; j < b.level_size(n); ++j)
        labels[n].push_back("(" + a.label(n, i) + "," + b.label(n, j) + ")");
  std::vector<std::vector<std::vector<int>>> face(N + 1);
  std::vector<std::vector<std::vector<int>>> deg(N + 1);
  std::vector<std::vector<int>> tau(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<int> row;
      for (int x = 0; x < a.level_size(n); ++x)
        for (int y = 0; y < b.level_size(n); ++y)
          row.push_back(a.face(n, j, x) * b.level_size(n - 1) + b.face(n, j, y));
      face[n].push_back(std::move(row));
    }
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<int> row;
      for (int x = 0; x < a.level_size(n); ++x)
        for (int y = 0; y < b.level_size(n); ++y)
          row.push_back(a.degeneracy(n, j, x) * b.level_size(n + 1) +
                        b.degeneracy(n, j, y));
      deg[n].push_back(std::move(row));
    }
  for (int n = 0; n <= N; ++n)
    for (int x = 0; x < a.level_size(n); ++x)
      for (int y = 0; y < b.level_size(n); ++y)
        tau[n].push_back(a.tau(n, x) * b.level_size(n) + b.tau(n, y));
  return FiniteCyclicSet(
      FiniteSimplicialSet(N, std::move(labels), std::move(face), std::move(deg)),
      std::move(tau));
}

std::vector<int> nondegenerate_cells(const FiniteSimplicialSet& s, int n) {
  std::vector<int> out;
  if (n == 0) {
    for (int i = 0; i < s.level_size(0); ++i) out.push_back(i);
    return out;
  }
  std::vector<bool> degenerate(s.level_size(n), false);
  for (int j = 0; j <= n - 1; ++j)
    for (int y = 0; y < s.level_size(n - 1); ++y)
      degenerate[s.degeneracy(n - 1, j, y)] = true;
  for (int i = 0; i < s.level_size(n); ++i)
    if (!degenerate[i]) out.push_back(i);
  return out;
}

std::vector<int> nondegenerate_census(const FiniteSimplicialSet& s) {
  std::vector<int> counts;
  for (int n = 0; n <= s.truncation(); ++n)
    counts.push_back(static_cast<int>(nondegenerate_cells(s, n).size()));
  return counts;
}

AuditReport simplicial_relation_audit(const FiniteSimplicialSet& s) {
  AuditReport rep;
  rep.subject = "simplicial relations on tables, truncation " +
                level_str(s.truncation());
  const int N = s.truncation();
  /* sigma_i ; sigma_j = sigma_{j+1} ; sigma_i (i <= j), on cells at n-1 with
     the composite landing at n+1 <= N. */
  for (int n = 1; n + 1 <= N; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < s.level_size(n - 1); ++x)
          rep.check(s.degeneracy(n, i, s.degeneracy(n - 1, j, x)) ==
                        s.degeneracy(n, j + 1, s.degeneracy(n - 1, i, x)),
                    "sigma-sigma",
                    "n=" + level_str(n) + " i=" + level_str(i) + " j=" +
                        level_str(j) + " cell=" + level_str(x));
  /* delta_i ; delta_j = delta_{j-1} ; delta_i (i < j), on cells at n >= 2. */
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < s.level_size(n); ++x)
          rep.check(s.face(n - 1, i, s.face(n, j, x)) ==
                        s.face(n - 1, j - 1, s.face(n, i, x)),
                    "delta-delta",
                    "n=" + level_str(n) + " i=" + level_str(i) + " j=" +
                        level_str(j) + " cell=" + level_str(x));
  /* delta_i ; sigma_j cases, on cells at n-1 with 1 <= n <= N. */
  for (int n = 1; n <= N; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < s.level_size(n - 1); ++x) {
          const int lhs = s.face(n, i, s.degeneracy(n - 1, j, x));
          const std::string where = "n=" + level_str(n) + " i=" + level_str(i) +
                                    " j=" + level_str(j) + " cell=" + level_str(x);
          if (i == j || i == j + 1) {
            rep.check(lhs == x, "delta-sigma identity", where);
          } else if (i < j) {
            rep.check(lhs == s.degeneracy(n - 2, j - 1, s.face(n - 1, i, x)),
                      "delta-sigma low", where);
          } else {
            rep.check(lhs == s.degeneracy(n - 2, j, s.face(n - 1, i - 1, x)),
                      "delta-sigma high", where);
          }
        }
  return rep;
}

AuditReport cyclic_relation_audit(const FiniteCyclicSet& s) {
  AuditReport rep = simplicial_relation_audit(s.simplicial());
  rep.subject = "cyclic relations on tables, truncation " + level_str(s.truncation());
  const int N = s.truncation();
  for (int n = 0; n <= N; ++n)
    for (int x = 0; x < s.level_size(n); ++x) {
      int y = x;
      for (int k = 0; k <= n; ++k) y = s.tau(n, y);
      rep.check(y == x, "tau order", "n=" + level_str(n) + " cell=" + level_str(x));
    }
  /* sigma_0 ; tau_n = tau_{n+1}^2 ; sigma_n and the shifted instances, on
     cells at n with the composite landing at n+1 <= N. */
  for (int n = 0; n + 1 <= N; ++n)
    for (int x = 0; x < s.level_size(n); ++x) {
      rep.check(s.degeneracy(n, 0, s.tau(n, x)) ==
                    s.tau(n + 1, s.tau(n + 1, s.degeneracy(n, n, x))),
                "tau-sigma_0", "n=" + level_str(n) + " cell=" + level_str(x));
      for (int j = 1; j <= n; ++j)
        rep.check(s.degeneracy(n, j, s.tau(n, x)) ==
                      s.tau(n + 1, s.degeneracy(n, j - 1, x)),
                  "tau-sigma",
                  "n=" + level_str(n) + " j=" + level_str(j) + " cell=" + level_str(x));
    }
  for (int n = 1; n <= N; ++n)
    for (int x = 0; x < s.level_size(n); ++x) {
      rep.check(s.face(n, 0, s.tau(n, x)) == s.face(n, n, x), "tau-delta_0",
                "n=" + level_str(n) + " cell=" + level_str(x));
      for (int j = 1; j <= n; ++j)
        rep.check(s.face(n, j, s.tau(n, x)) == s.tau(n - 1, s.face(n, j - 1, x)),
                  "tau-delta",
                  "n=" + level_str(n) + " j=" + level_str(j) + " cell=" + level_str(x));
    }
  return rep;
}

std::string cyclic_set_to_json(const FiniteCyclicSet& s) {
  nlohmann::json out;
  const int N = s.truncation();
  out["N"] = N;
  nlohmann::json levels = nlohmann::json::array();
  for (int n = 0; n <= N; ++n) {
    nlohmann::json level = nlohmann::json::array();
    for (int i = 0; i < s.level_size(n); ++i) level.push_back(s.label(n, i));
    levels.push_back(level);
  }
  out["levels"] = levels;
  nlohmann::json sigma = nlohmann::json::object();
  for (int n = 0; n < N; ++n) {
    nlohmann::json rows = nlohmann::json::array();
    for (int j = 0; j <= n; ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (int i = 0; i < s.level_size(n); ++i) row.push_back(s.degeneracy(n, j, i));
      rows.push_back(row);
    }
    sigma[level_str(n)] = rows;
  }
  out["sigma"] = sigma;
  nlohmann::json delta = nlohmann::json::object();
  for (int n = 1; n <= N; ++n) {
    nlohmann::json rows = nlohmann::json::array();
    for (int j = 0; j <= n; ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (int i = 0; i < s.level_size(n); ++i) row.push_back(s.face(n, j, i));
      rows.push_back(row);
    }
    delta[level_str(n)] = rows;
  }
  out["delta"] = delta;
  nlohmann::json tau = nlohmann::json::object();
  for (int n = 0; n <= N; ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < s.level_size(n); ++i) row.push_back(s.tau(n, i));
    tau[level_str(n)] = row;
  }
  out["tau"] = tau;
  return out.dump();
}

FiniteCyclicSet cyclic_set_from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cyclic set JSON: ") + e.what());
  }
  try {
    const int N = in.at("N").get<int>();
    if (N < 0) throw ParseError("cyclic set JSON: negative truncation");
    auto labels = in.at("levels").get<std::vector<std::vector<std::string>>>();
    std::vector<std::vector<std::vector<int>>> face(N + 1), deg(N + 1);
    std::vector<std::vector<int>> tau(N + 1);
    const auto& sigma_obj = in.at("sigma");
    for (int n = 0; n < N; ++n)
      deg[n] = sigma_obj.at(level_str(n)).get<std::vector<std::vector<int>>>();
    const auto& delta_obj = in.at("delta");
    for (int n = 1; n <= N; ++n)
      face[n] = delta_obj.at(level_str(n)).get<std::vector<std::vector<int>>>();
    const auto& tau_obj = in.at("tau");
    for (int n = 0; n <= N; ++n)
      tau[n] = tau_obj.at(level_str(n)).get<std::vector<int>>();
    return FiniteCyclicSet(
        FiniteSimplicialSet(N, std::move(labels), std::move(face), std::move(deg)),
        std::move(tau));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cyclic set JSON: ") + e.what());
  }
}

}  // namespace cyclab
