#pragma once

#include <string>
#include <vector>

#include "cyclab/audit.hpp"
#include "cyclab/error.hpp"
#include "cyclab/lambda.hpp"

namespace cyclab {

/* Truncated simplicial set, levels 0..N, given by explicit generator tables.
   Cells at level n are indexed 0..level_size(n)-1 and carry unique labels.
   The structure maps are stored contravariantly as right actions:
     face(n, j, i)       = cell i at level n acted on by delta_j, at level n-1
     degeneracy(n, j, i) = cell i at level n acted on by sigma_j, at level n+1
   so that x (f ; g) = (x g) f for composable monotone maps. */
class FiniteSimplicialSet {
 public:
  FiniteSimplicialSet(int truncation,
                      std::vector<std::vector<std::string>> labels,
                      std::vector<std::vector<std::vector<int>>> face_tables,
                      std::vector<std::vector<std::vector<int>>> degeneracy_tables);

  int truncation() const { return truncation_; }
  int level_size(int n) const;
  const std::string& label(int n, int i) const;
  /* Index of the cell with the given label at level n, or -1. */
  int find_label(int n, const std::string& lab) const;

  /* face_tables[n][j][i] for 1 <= n <= N, 0 <= j <= n. */
  int face(int n, int j, int i) const;
  /* degeneracy_tables[n][j][i] for 0 <= n < N, 0 <= j <= n. */
  int degeneracy(int n, int j, int i) const;

  /* Right action of an arbitrary monotone map phi: [a] -> [b] on a cell at
     level b; the result lives at level a.  Computed through the epi-mono
     factorization, applying the factor tables in reverse application order. */
  int act(const DeltaMap& phi, int cell) const;

 private:
  int truncation_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<int>>> face_;
  std::vector<std::vector<std::vector<int>>> deg_;
};

/* Truncated cyclic set: a simplicial set together with the action of the
   cyclic generator at each level, tau_table[n][i]. */
class FiniteCyclicSet {
 public:
  FiniteCyclicSet(FiniteSimplicialSet simplicial,
                  std::vector<std::vector<int>> tau_table);

  const FiniteSimplicialSet& simplicial() const { return simplicial_; }
  int truncation() const { return simplicial_.truncation(); }
  int level_size(int n) const { return simplicial_.level_size(n); }
  const std::string& label(int n, int i) const { return simplicial_.label(n, i); }
  int find_label(int n, const std::string& lab) const {
    return simplicial_.find_label(n, lab);
  }
  int face(int n, int j, int i) const { return simplicial_.face(n, j, i); }
  int degeneracy(int n, int j, int i) const {
    return simplicial_.degeneracy(n, j, i);
  }
  int tau(int n, int i) const;

  /* Right action of an arbitrary cyclic-category morphism f: [a] -> [b] on a
     cell at level b: factor f = tau^r ; j(h), act by h through the simplicial
     tables, then apply the tau table r times at level a. */
  int act(const LambdaMap& f, int cell) const;

 private:
  FiniteSimplicialSet simplicial_;
  std::vector<std::vector<int>> tau_;
};

/* One cell per level, every structure map the identity. */
FiniteSimplicialSet point_simplicial_set(int truncation);
FiniteCyclicSet point_cyclic_set(int truncation);

/* Representable cyclic set of [k]: level n holds all cyclic morphisms
   [n] -> [k] in enumeration order, structure maps act by precomposition.
   Labels are the morphisms' period value lists. */
FiniteCyclicSet yoneda_cyclic(int k, int truncation);

/* Cyclic structure induced on a simplicial set: level n holds the pairs
   (x, tau^a) with x a cell of S at level n and 0 <= a <= n, indexed
   x * (n + 1) + a.  A monotone map phi acts through the crossed rule
   (x, gamma) phi = (x gamma_*(phi), phi^*(gamma)); the cyclic generator acts
   by (x, tau^a) tau = (x, tau^{a+1}). */
FiniteCyclicSet induce_cyclic(const FiniteSimplicialSet& s);

/* Levelwise product with the diagonal action; truncation is the smaller of
   the two. */
FiniteCyclicSet cyclic_product(const FiniteCyclicSet& a, const FiniteCyclicSet& b);

/* Indices of the cells at level n not in the image of any degeneracy. */
std::vector<int> nondegenerate_cells(const FiniteSimplicialSet& s, int n);

/* Count of nondegenerate cells per level, 0..N. */
std::vector<int> nondegenerate_census(const FiniteSimplicialSet& s);

/* Exhaustive check of the simplicial generator relations on the tables, for
   every relation instance that fits inside the truncation:
     sigma_i ; sigma_j = sigma_{j+1} ; sigma_i    (i <= j)
     delta_i ; delta_j = delta_{j-1} ; delta_i    (i < j)
     delta_i ; sigma_j = sigma_{j-1} ; delta_i    (i < j)
                       = id                       (i = j, j+1)
                       = sigma_j ; delta_{i-1}    (i > j+1)
   applied to every cell. */
AuditReport simplicial_relation_audit(const FiniteSimplicialSet& s);

/* The simplicial audit plus the cyclic relations
     tau_n^{n+1} = id
     sigma_0 ; tau_n = tau_{n+1}^2 ; sigma_n
     sigma_j ; tau_n = tau_{n+1} ; sigma_{j-1}   (1 <= j <= n)
     delta_0 ; tau_n = delta_n                   (n >= 1)
     delta_j ; tau_n = tau_{n-1} ; delta_{j-1}   (1 <= j <= n)
   applied to every cell. */
AuditReport cyclic_relation_audit(const FiniteCyclicSet& s);

/* Serialization: {"N": .., "levels": [[labels]..], "sigma": {"n": [[..]..]},
   "delta": {"n": [[..]..]}, "tau": {"n": [..]}}, where sigma["n"][j][i],
   delta["n"][j][i] and tau["n"][i] give the degeneracy, face and cyclic
   tables at level n. */
std::string cyclic_set_to_json(const FiniteCyclicSet& s);
FiniteCyclicSet cyclic_set_from_json(const std::string& text);

}  // namespace cyclab
