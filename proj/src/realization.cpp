#include "cyclab/realization.hpp"

#include <algorithm>
#include <array>

namespace cyclab {

std::vector<std::vector<CocycleTableRow>> cocycle_table_rows() {
  std::vector<std::vector<CocycleTableRow>> out;
  const RationalUnit model;
  const CyclicStructure<RationalUnit> cs = standard_cyclic_structure(model);
  const FiniteCyclicSet c = yoneda_cyclic(0, 3);
  const FiniteCyclicSet cube = cyclic_product(cyclic_product(c, c), c);
  for (int n = 1; n <= 3; ++n) {
    const auto homs = enumerate_lambda_hom(n, 0);
    std::vector<int> expo(homs.size());
    for (std::size_t i = 0; i < homs.size(); ++i)
      expo[i] = delta_lambda_decompose(homs[i]).rotation;
    const int sz = c.level_size(n);
    std::vector<std::array<int, 3>> triples;
    for (int idx : nondegenerate_cells(cube.simplicial(), n)) {
      const int i2 = idx % sz, rest = idx / sz;
      triples.push_back({expo[rest / sz], expo[rest % sz], expo[i2]});
    }
    /* Row order of the source tables: dimension 1 lists by count of nonzero
       indices, then lexicographically decreasing; dimensions 2 and 3 list
       lexicographically increasing. */
    std::sort(triples.begin(), triples.end(),
              [n](const std::array<int, 3>& x, const std::array<int, 3>& y) {
                if (n == 1) {
                  const int cx = (x[0] != 0) + (x[1] != 0) + (x[2] != 0);
                  const int cy = (y[0] != 0) + (y[1] != 0) + (y[2] != 0);
                  if (cx != cy) return cx < cy;
                  return x > y;
                }
                return x < y;
              });
    /* Generic nondegenerate sequence u_k = k / (n + 1). */
    std::vector<Rational> uv;
    uv.push_back(Rational(0));
    for (int k = 1; k <= n; ++k) uv.push_back(Rational(k) / Rational(n + 1));
    uv.push_back(Rational(1));
    const MonotoneSeq<RationalUnit> u = make_seq(model, std::move(uv));
    std::vector<CocycleTableRow> rows;
    for (const auto& t : triples) {
      CocycleTableRow row;
      row.a = {t[0], t[1], t[2]};
      const auto w0 = make_circle_point(model, u.values[t[0]]);
      const auto w1 = make_circle_point(model, u.values[t[1]]);
      const auto w2 = make_circle_point(model, u.values[t[2]]);
      row.omega_value = omega(w0, w1, w2);
      row.b0 = static_cast<int>(mod_floor(t[0] - t[1], n + 1));
      row.b1 = static_cast<int>(mod_floor(t[2] - t[1], n + 1));
      MonotoneSeq<RationalUnit> v = u;
      for (int k = 0; k < t[1]; ++k) v = cs.tau(v);
      row.rho_value = rho(make_circle_point(model, v.values[row.b0]),
                          make_circle_point(model, v.values[row.b1]));
      rows.push_back(row);
    }
    out.push_back(std::move(rows));
  }
  return out;
}

std::string cocycle_tables_text() {
  std::string out;
  const auto dims = cocycle_table_rows();
  for (std::size_t d = 0; d < dims.size(); ++d) {
    out += "dim " + std::to_string(d + 1) + "\n";
    for (const auto& row : dims[d]) {
      out += "(";
      for (std::size_t i = 0; i < row.a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(row.a[i]);
      }
      out += ") omega " + std::to_string(row.omega_value);
      out += " b (" + std::to_string(row.b0) + "," + std::to_string(row.b1) + ")";
      out += " rho " + std::to_string(row.rho_value);
      out += "\n";
    }
  }
  return out;
}

}  // namespace cyclab
