#include "gcl/lattice.hpp"

namespace gcl {

LatticeVector generator(const Group& g, int m, int n) {
  LatticeVector v(g.size() > 0 ? g.size() - 1 : 0, 0);
  if (m == 0 || n == 0) return v;
  v[m - 1] += 1;
  v[n - 1] += 1;
  int s = g.add(m, n);
  if (s != 0) v[s - 1] -= 1;
  return v;
}

std::vector<LatticeVector> generators(const Group& g) {
  std::vector<LatticeVector> out;
  for (auto [m, n] : g.pairs()) out.push_back(generator(g, m, n));
  return out;
}

IntMatrix to_int_matrix(const std::vector<LatticeVector>& vs, std::size_t dim) {
  IntMatrix m;
  for (auto& v : vs) {
    std::vector<Int> row(dim, 0);
    for (std::size_t j = 0; j < dim && j < v.size(); ++j) row[j] = v[j];
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<LatticeVector> from_int_matrix(const IntMatrix& m) {
  std::vector<LatticeVector> out;
  for (auto& row : m) {
    LatticeVector v;
    for (auto& x : row) v.push_back(to_ll(x));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<LatticeVector> k_basis(const Group& g) {
  std::size_t dim = g.size() - 1;
  return from_int_matrix(hnf(to_int_matrix(generators(g), dim), dim));
}

std::size_t rank_of(const std::vector<LatticeVector>& vs, std::size_t dim) {
  return rank(to_int_matrix(vs, dim), dim);
}

bool span_equals_saturated(const std::vector<LatticeVector>& vectors,
                           const std::vector<LatticeVector>& target_basis, std::size_t dim) {
  return hnf(to_int_matrix(vectors, dim), dim) == hnf(to_int_matrix(target_basis, dim), dim);
}

}  // namespace gcl
